#include "spectral.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "parallel.hpp"

namespace mosaic {

const char* state_class_name(state_class c) {
  switch (c) {
    case state_class::localized: return "localized";
    case state_class::critical: return "critical";
    case state_class::extended: return "extended";
    default: return "unresolved";
  }
}

SpectrumRecord analyze_spectrum(const MosaicParams& p, const ClassCuts& cuts) {
  Eigen::MatrixXd h = build_matrix(p);
  Eigensystem es = diagonalize(h);
  SpectrumRecord rec;
  rec.energies = es.energies;
  rec.states = es.vectors;
  const auto n = es.energies.size();
  rec.d_values.reserve(n);
  rec.classes.reserve(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::VectorXd dens = es.vectors.col(k).cwiseAbs2();
    double d = fractal_dimension_density(dens);
    rec.d_values.push_back(d);
    state_class c = state_class::critical;
    if (d < cuts.d_loc) c = state_class::localized;
    else if (d > cuts.d_ext) c = state_class::extended;
    rec.classes.push_back(c);
  }
  return rec;
}

ScalingResult classify_by_scaling(const MosaicParams& tmpl, const std::vector<int>& sizes,
                                  double q_lo, double q_hi, const ScalingThresholds& th) {
  if (sizes.size() < 3) throw error(errc::invalid_params, "scaling fit needs at least 3 sizes");
  for (size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1])
      throw error(errc::invalid_params, "sizes must be strictly increasing");
  if (!(q_lo >= 0.0) || !(q_hi <= 1.0) || !(q_lo < q_hi))
    throw error(errc::invalid_params, "quantile window must satisfy 0 <= q_lo < q_hi <= 1");

  ScalingResult res;
  for (int n : sizes) {
    MosaicParams p = tmpl;
    p.n_sites = n;
    if (!tmpl.long_range.empty()) {
      // a complete uniform pattern (every site, one gap, one strength) is
      // regenerated at each size; anything else is kept only where it fits
      const auto& first = tmpl.long_range.front();
      int gap = first.n - first.m;
      bool uniform = gap >= 2 && first.m == 1 &&
                     static_cast<int>(tmpl.long_range.size()) == tmpl.n_sites - gap;
      if (uniform) {
        for (size_t i = 0; i < tmpl.long_range.size() && uniform; ++i) {
          const auto& b = tmpl.long_range[i];
          uniform = b.m == static_cast<int>(i) + 1 && b.n - b.m == gap &&
                    b.strength_mhz == first.strength_mhz;
        }
      }
      if (uniform) {
        std::vector<LongRangeBond> lr;
        for (int m = 1; m + gap <= n; ++m) lr.push_back({m, m + gap, first.strength_mhz});
        p.long_range = std::move(lr);
      } else {
        std::vector<LongRangeBond> lr;
        for (const auto& b : tmpl.long_range)
          if (b.m <= n && b.n <= n) lr.push_back(b);
        p.long_range = std::move(lr);
      }
    }
    Eigensystem es = diagonalize(build_matrix(p));
    int k0 = static_cast<int>(std::floor(q_lo * n));
    int k1 = static_cast<int>(std::ceil(q_hi * n));
    if (k1 <= k0) throw error(errc::invalid_params, "quantile window empty at size " + std::to_string(n));
    double acc = 0.0;
    for (int k = k0; k < k1; ++k)
      acc += fractal_dimension_density(es.vectors.col(k).cwiseAbs2());
    res.d_means.push_back(acc / (k1 - k0));
  }

  // least-squares lines of D against 1/ln N (intercept = infinite-size
  // estimate) and against ln N (plateau drift)
  const size_t m = sizes.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, tx = 0, txx = 0, txy = 0;
  for (size_t i = 0; i < m; ++i) {
    double ln = std::log(static_cast<double>(sizes[i]));
    double x = 1.0 / ln;
    sx += x; sy += res.d_means[i]; sxx += x * x; sxy += x * res.d_means[i];
    tx += ln; txx += ln * ln; txy += ln * res.d_means[i];
  }
  double denom = m * sxx - sx * sx;
  double slope_inv = (m * sxy - sx * sy) / denom;
  res.intercept = (sy - slope_inv * sx) / m;
  res.slope_ln_n = (m * txy - tx * sy) / (m * txx - tx * tx);

  double d_largest = res.d_means.back();
  if (res.intercept > th.extended_gate) {
    res.cls = state_class::extended;
  } else if (res.intercept < th.localized_gate) {
    res.cls = state_class::localized;
  } else if (std::fabs(res.slope_ln_n) < th.drift_tol && d_largest > th.plateau_lo &&
             d_largest < th.plateau_hi) {
    res.cls = state_class::critical;
  }
  return res;
}

LyapunovResult lyapunov_exponent(const MosaicParams& p, double energy_radns,
                                 long long chain_length) {
  validate(p);
  if (!p.long_range.empty())
    throw error(errc::invalid_params, "transfer matrix is defined for the nearest-neighbour model only");
  if (chain_length < 100000)
    throw error(errc::invalid_params, "chain_length must be at least 1e5 for a converged exponent");

  const double two_pi_alpha = 2.0 * kPi * p.alpha;
  const double wj = omega_radns(p.j_hop_mhz);
  const double wl = omega_radns(p.lambda_mhz);
  const double wv = omega_radns(p.v0_mhz);

  // seed off the coordinate axes: at E = 0 with V0 = 0 the sublattices
  // decouple and a (1, 0) start would track the decaying branch
  double psi = 0.8, psi_prev = 0.6;
  double j_prev = wl;  // fictitious bond 0, boundary term of order 1/L
  double acc = 0.0;
  for (long long j = 1; j <= chain_length; ++j) {
    double bond, pot;
    if (j % 2 == 1) {
      bond = wl;
      pot = wv == 0.0 ? 0.0 : 2.0 * wv * std::cos(two_pi_alpha * (j - 1) + p.theta);
    } else {
      double c = std::cos(two_pi_alpha * j + p.theta);
      bond = 2.0 * wj * c;
      pot = 2.0 * wv * c;
    }
    if (bond == 0.0) throw error(errc::singular_bond, "exactly zero coupling at bond " + std::to_string(j));
    double next = ((energy_radns - pot) * psi - j_prev * psi_prev) / bond;
    psi_prev = psi;
    psi = next;
    j_prev = bond;
    if (j % 16 == 0) {
      double norm = std::hypot(psi, psi_prev);
      acc += std::log(norm);
      psi /= norm;
      psi_prev /= norm;
    }
  }
  acc += std::log(std::hypot(psi, psi_prev));
  return {energy_radns, acc / static_cast<double>(chain_length), chain_length};
}

MeScanResult mobility_edge_scan(const MosaicParams& p, const std::vector<double>& energies_radns,
                                long long chain_length, double tau, int workers) {
  if (energies_radns.empty()) throw error(errc::invalid_params, "energy grid must be nonempty");
  MeScanResult res;
  res.points.resize(energies_radns.size());
  parallel_for(energies_radns.size(), workers, [&](size_t i) {
    LyapunovResult r = lyapunov_exponent(p, energies_radns[i], chain_length);
    res.points[i] = {r.energy_radns, r.gamma,
                     r.gamma < tau ? state_class::critical : state_class::localized};
  });

  double lo = 0.0, hi = 0.0;
  bool any = false;
  for (const auto& pt : res.points) {
    if (pt.gamma < tau) {
      if (!any || pt.energy_radns < lo) lo = pt.energy_radns;
      if (!any || pt.energy_radns > hi) hi = pt.energy_radns;
      any = true;
    }
  }
  res.crossing_found = any;
  if (any) {
    res.crossing_minus = lo;
    res.crossing_plus = hi;
  }
  return res;
}

RatioCount localized_critical_ratio(const SpectrumRecord& spec, double lambda_mhz,
                                    double edge_tol_radns) {
  if (edge_tol_radns < 0.0) throw error(errc::invalid_params, "edge tolerance must be non-negative");
  double edge = omega_radns(lambda_mhz);
  RatioCount rc;
  for (Eigen::Index k = 0; k < spec.energies.size(); ++k) {
    double a = std::fabs(spec.energies[k]);
    if (std::fabs(a - edge) <= edge_tol_radns) ++rc.n_edge;
    else if (a > edge) ++rc.n_localized;
    else ++rc.n_critical;
  }
  return rc;
}

double knee_point(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 3)
    throw error(errc::invalid_params, "knee needs at least 3 samples");
  double x0 = xs.front(), x1 = xs.back();
  double ymin = *std::min_element(ys.begin(), ys.end());
  double ymax = *std::max_element(ys.begin(), ys.end());
  if (!(x1 > x0) || !(ymax > ymin)) throw error(errc::invalid_params, "knee needs spread in x and y");
  double best = -1.0;
  size_t best_i = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double xn = (xs[i] - x0) / (x1 - x0);
    double yn = (ys[i] - ymin) / (ymax - ymin);
    if (yn - xn > best) {
      best = yn - xn;
      best_i = i;
    }
  }
  return xs[best_i];
}

}  // namespace mosaic
