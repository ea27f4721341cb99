#pragma once

#include <vector>

#include "dynamics.hpp"

namespace mosaic {

enum class state_class { localized, critical, extended, unresolved };

const char* state_class_name(state_class c);

struct SpectrumRecord {
  Eigen::VectorXd energies;       // ascending, rad/ns
  Eigen::MatrixXd states;         // orthonormal columns
  std::vector<double> d_values;   // per-state participation dimension
  std::vector<state_class> classes;
};

// single-size heuristic labels: D below d_loc is localized, above d_ext
// extended, critical in between
struct ClassCuts {
  double d_loc = 0.25;
  double d_ext = 0.85;
};

SpectrumRecord analyze_spectrum(const MosaicParams& p, const ClassCuts& cuts = {});

// finite-size scaling over a matched eigenstate window. The window is given
// as spectral quantiles (fractions of the sorted spectrum), which keeps the
// same band content across sizes; fixed energy windows drift between
// Fibonacci sizes and can misclassify.
struct ScalingThresholds {
  double extended_gate = 0.9;   // on the 1/ln N extrapolated intercept
  double localized_gate = 0.1;  // on the same intercept
  double drift_tol = 0.05;      // |dD/d ln N| for a critical plateau
  double plateau_lo = 0.1;      // D at largest size must sit inside
  double plateau_hi = 0.9;
};

struct ScalingResult {
  state_class cls = state_class::unresolved;
  double intercept = 0.0;    // extrapolation of D against 1/ln N
  double slope_ln_n = 0.0;   // drift of D per unit ln N
  std::vector<double> d_means;
};

ScalingResult classify_by_scaling(const MosaicParams& tmpl, const std::vector<int>& sizes,
                                  double q_lo, double q_hi,
                                  const ScalingThresholds& th = {});

struct LyapunovResult {
  double energy_radns = 0.0;
  double gamma = 0.0;
  long long chain_length = 0;
};

// transfer-matrix Lyapunov exponent on the semi-infinite chain; long-range
// couplings are not representable here and are rejected
LyapunovResult lyapunov_exponent(const MosaicParams& p, double energy_radns, long long chain_length);

struct MeScanPoint {
  double energy_radns = 0.0;
  double gamma = 0.0;
  state_class cls = state_class::unresolved;  // localized vs critical by gamma against tau
};

struct MeScanResult {
  std::vector<MeScanPoint> points;
  bool crossing_found = false;
  double crossing_minus = 0.0;  // outermost |E| with gamma below tau, signed
  double crossing_plus = 0.0;
};

MeScanResult mobility_edge_scan(const MosaicParams& p, const std::vector<double>& energies_radns,
                                long long chain_length, double tau = 0.15, int workers = 0);

struct RatioCount {
  int n_localized = 0;  // |E| > omega(lambda)
  int n_critical = 0;   // |E| < omega(lambda)
  int n_edge = 0;       // within edge_tol of the edge, counted separately
};

RatioCount localized_critical_ratio(const SpectrumRecord& spec, double lambda_mhz,
                                    double edge_tol_radns);

// normalized knee locator (largest deviation above the chord), used for
// transition-point estimates on sweep curves
double knee_point(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace mosaic
