#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "lattice.hpp"

namespace mosaic {

// parameters are plain frequencies in MHz; the Hamiltonian carries angular
// frequencies in rad/ns, so times are in ns throughout
inline double omega_radns(double f_mhz) { return 2.0 * kPi * f_mhz * 1e-3; }

// dense symmetric single-excitation Hamiltonian, rad/ns
Eigen::MatrixXd build_matrix(const MosaicParams& p);

// uniform long-range templates, strength in MHz
std::vector<LongRangeBond> nnn_uniform(int n_sites, double strength_mhz);
std::vector<LongRangeBond> nnnn_uniform(int n_sites, double strength_mhz);

// <psi|H|psi> for a normalized state, rad/ns
double initial_state_energy(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi);

}  // namespace mosaic
