#include "lattice.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace mosaic {

void validate(const MosaicParams& p) {
  if (p.n_sites < 2) throw error(errc::invalid_params, "n_sites must be at least 2");
  if (!(p.j_hop_mhz > 0.0)) throw error(errc::invalid_params, "j_hop_mhz must be positive");
  if (p.lambda_mhz < 0.0) throw error(errc::invalid_params, "lambda_mhz must be non-negative");
  if (p.v0_mhz < 0.0) throw error(errc::invalid_params, "v0_mhz must be non-negative");
  if (!std::isfinite(p.theta)) throw error(errc::invalid_params, "theta must be finite");
  if (!(p.alpha > 0.0) || !(p.alpha < 1.0))
    throw error(errc::invalid_params, "alpha must lie in (0, 1)");
  for (const auto& b : p.long_range) {
    if (b.m < 1 || b.n < 1 || b.m > p.n_sites || b.n > p.n_sites)
      throw error(errc::invalid_params, "long_range bond site out of range");
    int gap = b.n > b.m ? b.n - b.m : b.m - b.n;
    if (gap < 2)
      throw error(errc::invalid_params,
                  "long_range bond (" + std::to_string(b.m) + "," + std::to_string(b.n) +
                      ") would collide with a nearest-neighbour bond");
  }
}

double coupling_at(const MosaicParams& p, int j) {
  int last_bond = p.periodic ? p.n_sites : p.n_sites - 1;
  if (j < 1 || j > last_bond) throw error(errc::index_range, "bond index out of range");
  if (j % 2 == 1) return p.lambda_mhz;
  return 2.0 * p.j_hop_mhz * std::cos(2.0 * kPi * p.alpha * j + p.theta);
}

double potential_at(const MosaicParams& p, int j) {
  if (j < 1 || j > p.n_sites) throw error(errc::index_range, "site index out of range");
  int arg = (j % 2 == 1) ? j - 1 : j;
  return 2.0 * p.v0_mhz * std::cos(2.0 * kPi * p.alpha * arg + p.theta);
}

Sequences build_sequences(const MosaicParams& p) {
  validate(p);
  Sequences s;
  int last_bond = p.periodic ? p.n_sites : p.n_sites - 1;
  s.bonds.reserve(last_bond);
  s.potentials.reserve(p.n_sites);
  for (int j = 1; j <= last_bond; ++j) s.bonds.push_back(coupling_at(p, j));
  for (int j = 1; j <= p.n_sites; ++j) s.potentials.push_back(potential_at(p, j));
  return s;
}

std::vector<int> find_idz_bonds(const MosaicParams& p, double epsilon) {
  validate(p);
  if (!(epsilon > 0.0)) throw error(errc::invalid_params, "epsilon must be positive");
  std::vector<int> out;
  int last_bond = p.periodic ? p.n_sites : p.n_sites - 1;
  double cut = epsilon * 2.0 * p.j_hop_mhz;
  for (int j = 2; j <= last_bond; j += 2) {
    if (std::fabs(coupling_at(p, j)) < cut) out.push_back(j);
  }
  return out;
}

std::pair<long long, long long> fibonacci_approximant(int k) {
  if (k < 1) throw error(errc::invalid_params, "approximant order must be at least 1");
  if (k > 85) throw error(errc::invalid_params, "approximant order overflows 64-bit integers");
  // F_1 = F_2 = 1; the k-th approximant is F_{k+1} / F_{k+2}
  long long a = 1, b = 1;
  for (int i = 0; i < k; ++i) {
    long long next = a + b;
    a = b;
    b = next;
  }
  return {a, b};
}

}  // namespace mosaic
