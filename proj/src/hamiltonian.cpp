#include "hamiltonian.hpp"

#include <cmath>

#include "error.hpp"

namespace mosaic {

Eigen::MatrixXd build_matrix(const MosaicParams& p) {
  Sequences seq = build_sequences(p);
  const int n = p.n_sites;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int j = 1; j <= n; ++j) h(j - 1, j - 1) = omega_radns(seq.potentials[j - 1]);
  int last_bond = p.periodic ? n : n - 1;
  for (int j = 1; j <= last_bond; ++j) {
    int a = j - 1;
    int b = j % n;  // bond n wraps to site 1 under periodic boundaries
    double w = omega_radns(seq.bonds[j - 1]);
    h(a, b) += w;
    h(b, a) += w;
  }
  for (const auto& bond : p.long_range) {
    double w = omega_radns(bond.strength_mhz);
    h(bond.m - 1, bond.n - 1) += w;
    h(bond.n - 1, bond.m - 1) += w;
  }
  return h;
}

std::vector<LongRangeBond> nnn_uniform(int n_sites, double strength_mhz) {
  std::vector<LongRangeBond> out;
  for (int m = 1; m + 2 <= n_sites; ++m) out.push_back({m, m + 2, strength_mhz});
  return out;
}

std::vector<LongRangeBond> nnnn_uniform(int n_sites, double strength_mhz) {
  std::vector<LongRangeBond> out;
  for (int m = 1; m + 3 <= n_sites; ++m) out.push_back({m, m + 3, strength_mhz});
  return out;
}

double initial_state_energy(const Eigen::MatrixXd& h, const Eigen::VectorXcd& psi) {
  if (psi.size() != h.rows()) throw error(errc::dimension_mismatch, "state length must match Hamiltonian size");
  std::complex<double> e = psi.adjoint() * (h * psi);
  return e.real();
}

}  // namespace mosaic
