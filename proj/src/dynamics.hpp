#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hamiltonian.hpp"

namespace mosaic {

// composite trapezoid rule on a uniform grid
double trapezoid(const std::vector<double>& values, double dt);

struct Eigensystem {
  Eigen::VectorXd energies;  // ascending, rad/ns
  Eigen::MatrixXd vectors;   // orthonormal columns
};

// dense symmetric solve with a residual check
Eigensystem diagonalize(const Eigen::MatrixXd& h);

// canonical initial states, 1-based site labels
Eigen::VectorXcd make_single(int n_sites, int j);
Eigen::VectorXcd make_dimer(int n_sites, int n, double phi);  // (|n> + e^{i phi}|n+1>)/sqrt(2)
std::vector<int> comb_sites(int n_sites, int period, int offset);

Eigen::VectorXcd propagate_to(const Eigensystem& es, const Eigen::VectorXcd& psi0, double t_ns);

Eigen::VectorXd density(const Eigen::VectorXcd& psi);

// normalized participation measure, 0 for one site, 1 for uniform spread.
// The density overload renormalizes, so multi-excitation combs are handled.
double fractal_dimension(const Eigen::VectorXcd& psi);
double fractal_dimension_density(const Eigen::VectorXd& dens);

// summed propagator-column densities for independent excitations seeded on
// the given sites; row sums equal the site count
Eigen::VectorXd comb_density(const Eigensystem& es, const std::vector<int>& sites, double t_ns);

struct EvolutionRecord {
  std::vector<double> times;       // ns, uniform grid from 0 to tf
  Eigen::MatrixXd densities;      // one row per time
  std::vector<double> d_trace;    // fractal dimension per time
  std::vector<double> w_trace;    // sqrt-weighted width per time
  int j0 = 0;                     // reference site for w_trace and n_r
  double d_bar = 0.0;             // time average of D(t) - D(0)
  double m_integrated = 0.0;      // time average of W(t) - W(0)
  double n_r_bar = 0.0;           // time average of population right of j0
  double init_energy_radns = 0.0;
};

// single-state protocol; dt must divide tf
EvolutionRecord evolve_record(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi0, int j0,
                              double tf_ns, double dt_ns);

// comb protocol: densities are propagator-column sums, D uses the
// renormalized profile, W and n_r are referenced to the first comb site
EvolutionRecord evolve_comb_record(const Eigen::MatrixXd& h, const std::vector<int>& sites,
                                   double tf_ns, double dt_ns);

// scalar conveniences over evolve_record
double time_averaged_d(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi0, double tf_ns,
                       double dt_ns);
double integrated_width(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi0, int j0,
                        double tf_ns, double dt_ns);
double right_population(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi0, int j0,
                        double tf_ns, double dt_ns);

}  // namespace mosaic
