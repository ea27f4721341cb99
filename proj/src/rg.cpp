#include "rg.hpp"

#include <algorithm>
#include <cmath>

#include "dynamics.hpp"
#include "error.hpp"
#include "parallel.hpp"

namespace mosaic {

double threshold_nnn(double j_mhz, double lambda_mhz) {
  if (j_mhz < 0.0 || lambda_mhz < 0.0)
    throw error(errc::invalid_params, "couplings must be non-negative");
  return std::max(j_mhz, std::sqrt(j_mhz * lambda_mhz));
}

MuThreshold threshold_with_mu(double j_mhz, double lambda_mhz, double mu_mhz) {
  if (j_mhz < 0.0 || lambda_mhz < 0.0 || mu_mhz < 0.0)
    throw error(errc::invalid_params, "couplings must be non-negative");
  double radicand = j_mhz * std::max({j_mhz, lambda_mhz, mu_mhz}) - lambda_mhz * mu_mhz;
  if (radicand < 0.0)
    throw error(errc::rg_domain, "threshold formula leaves its validity domain (negative radicand)");
  return {std::sqrt(radicand), mu_mhz > lambda_mhz};
}

ThresholdVerification verify_threshold(const MosaicParams& base,
                                       const std::vector<double>& j_nn_grid_mhz, double mu_mhz,
                                       int j0, double tf_ns, double dt_ns, int workers) {
  validate(base);
  if (j_nn_grid_mhz.empty()) throw error(errc::invalid_params, "J_nn grid must be nonempty");
  for (size_t i = 1; i < j_nn_grid_mhz.size(); ++i)
    if (j_nn_grid_mhz[i] < j_nn_grid_mhz[i - 1])
      throw error(errc::invalid_params, "J_nn grid must be ascending");
  if (mu_mhz < 0.0) throw error(errc::invalid_params, "mu_mhz must be non-negative");

  ThresholdVerification out;
  out.rows.resize(j_nn_grid_mhz.size());
  parallel_for(j_nn_grid_mhz.size(), workers, [&](size_t i) {
    MosaicParams p = base;
    p.long_range = nnn_uniform(p.n_sites, j_nn_grid_mhz[i]);
    if (mu_mhz > 0.0) {
      auto extra = nnnn_uniform(p.n_sites, mu_mhz);
      p.long_range.insert(p.long_range.end(), extra.begin(), extra.end());
    }
    Eigen::MatrixXd h = build_matrix(p);
    EvolutionRecord rec = evolve_record(h, make_single(p.n_sites, j0), j0, tf_ns, dt_ns);
    out.rows[i] = {j_nn_grid_mhz[i], rec.d_bar, rec.n_r_bar};
  });

  size_t iref = 0;
  for (size_t i = 1; i < out.rows.size(); ++i) {
    if (std::fabs(out.rows[i].j_nn_mhz - base.lambda_mhz) <=
        std::fabs(out.rows[iref].j_nn_mhz - base.lambda_mhz))
      iref = i;
  }
  out.d_reference = out.rows[iref].d_bar;
  for (const auto& row : out.rows) {
    if (row.n_r_bar > 0.05 && row.d_bar > 0.9 * out.d_reference) {
      out.found = true;
      out.onset_j_nn_mhz = row.j_nn_mhz;
      break;
    }
  }
  out.predicted_mhz = threshold_with_mu(base.j_hop_mhz, base.lambda_mhz, mu_mhz).value_mhz;
  return out;
}

}  // namespace mosaic
