#pragma once

#include <vector>

#include "lattice.hpp"

namespace mosaic {

// critical-extended threshold for uniform NNN coupling, MHz in and out
double threshold_nnn(double j_mhz, double lambda_mhz);

struct MuThreshold {
  double value_mhz = 0.0;
  bool advisory_large_mu = false;  // the closed form loses accuracy for mu > lambda
};

// threshold with an additional next-next-nearest-neighbour strength mu;
// a negative radicand is outside the formula's validity and is an error
MuThreshold threshold_with_mu(double j_mhz, double lambda_mhz, double mu_mhz);

struct ThresholdRow {
  double j_nn_mhz = 0.0;
  double d_bar = 0.0;
  double n_r_bar = 0.0;
};

struct ThresholdVerification {
  bool found = false;
  double onset_j_nn_mhz = 0.0;   // first grid point where the detector fires
  double predicted_mhz = 0.0;    // closed-form threshold for comparison
  double d_reference = 0.0;      // d_bar at the grid point nearest J_nn = lambda
  std::vector<ThresholdRow> rows;
};

// sweeps uniform NNN strength over the grid (MHz, ascending) with a fixed
// uniform NNNN strength mu on top, running the single-site quench at j0.
// Detector: first grid point with n_r_bar > 0.05 and d_bar > 0.9 * reference,
// the reference being d_bar where J_nn is closest to lambda.
ThresholdVerification verify_threshold(const MosaicParams& base, const std::vector<double>& j_nn_grid_mhz,
                                       double mu_mhz, int j0, double tf_ns, double dt_ns,
                                       int workers = 0);

}  // namespace mosaic
