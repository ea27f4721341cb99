#pragma once

#include <string>
#include <vector>

#include "dynamics.hpp"

namespace mosaic {

enum class sweep_axis { lambda_mhz, j_hop_mhz, lr_scale, dimer_phase };
enum class protocol_kind { quench_single, quench_dimer, comb };

const char* sweep_axis_name(sweep_axis a);
const char* protocol_name(protocol_kind p);

struct SweepPlan {
  MosaicParams base;
  sweep_axis axis = sweep_axis::lambda_mhz;
  std::vector<double> grid;
  protocol_kind protocol = protocol_kind::quench_single;
  int j0 = 14;           // quench_single launch site
  int dimer_n = 12;      // quench_dimer left site
  double dimer_phi = 0;  // quench_dimer phase (overridden on the phase axis)
  int comb_period = 6;
  int comb_offset = 1;
  double tf_ns = 300.0;
  double dt_ns = 1.0;
};

void validate(const SweepPlan& plan);

struct SweepRow {
  double param = 0.0;
  double d_bar = 0.0;
  double m_integrated = 0.0;
  double n_r_bar = 0.0;
  double init_energy_radns = 0.0;
  bool failed = false;     // per-point failures recorded here, sweep continues
  std::string message;
};

std::vector<SweepRow> run_sweep(const SweepPlan& plan, int workers = 0);

// dimer quenches across the mobility edge at fixed parameters; one row per
// (position, sign); the param column carries the signed position. Rows come
// back ordered by initial energy.
std::vector<SweepRow> me_quench_scan(const MosaicParams& base,
                                     const std::vector<std::pair<int, int>>& states, double tf_ns,
                                     double dt_ns, int workers = 0);

}  // namespace mosaic
