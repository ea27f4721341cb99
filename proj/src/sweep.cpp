#include "sweep.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "parallel.hpp"

namespace mosaic {

const char* sweep_axis_name(sweep_axis a) {
  switch (a) {
    case sweep_axis::lambda_mhz: return "lambda_mhz";
    case sweep_axis::j_hop_mhz: return "j_hop_mhz";
    case sweep_axis::lr_scale: return "lr_scale";
    default: return "dimer_phase";
  }
}

const char* protocol_name(protocol_kind p) {
  switch (p) {
    case protocol_kind::quench_single: return "quench_single";
    case protocol_kind::quench_dimer: return "quench_dimer";
    default: return "comb";
  }
}

void validate(const SweepPlan& plan) {
  validate(plan.base);
  if (plan.grid.empty()) throw error(errc::invalid_params, "sweep grid must be nonempty");
  for (size_t i = 1; i < plan.grid.size(); ++i)
    if (plan.grid[i] < plan.grid[i - 1])
      throw error(errc::invalid_params, "sweep grid must be sorted ascending");
  switch (plan.protocol) {
    case protocol_kind::quench_single:
      if (plan.j0 < 1 || plan.j0 > plan.base.n_sites)
        throw error(errc::invalid_params, "j0 out of range for base.n_sites");
      break;
    case protocol_kind::quench_dimer:
      if (plan.dimer_n < 1 || plan.dimer_n + 1 > plan.base.n_sites)
        throw error(errc::invalid_params, "dimer_n out of range for base.n_sites");
      break;
    case protocol_kind::comb:
      if (plan.comb_offset < 1 || plan.comb_offset > plan.base.n_sites || plan.comb_period < 1)
        throw error(errc::invalid_params, "comb protocol indices out of range");
      break;
  }
  if (plan.axis == sweep_axis::lr_scale && plan.base.long_range.empty())
    throw error(errc::invalid_params, "lr_scale axis needs a long-range template in base");
  if (plan.axis == sweep_axis::dimer_phase && plan.protocol != protocol_kind::quench_dimer)
    throw error(errc::invalid_params, "dimer_phase axis requires the quench_dimer protocol");
  if (plan.axis == sweep_axis::lambda_mhz || plan.axis == sweep_axis::j_hop_mhz) {
    for (double g : plan.grid)
      if (g < 0.0) throw error(errc::invalid_params, "coupling grid values must be non-negative");
    if (plan.axis == sweep_axis::j_hop_mhz && plan.grid.front() <= 0.0)
      throw error(errc::invalid_params, "j_hop grid values must be positive");
  }
}

namespace {

SweepRow eval_point(const SweepPlan& plan, double g) {
  MosaicParams p = plan.base;
  double phi = plan.dimer_phi;
  switch (plan.axis) {
    case sweep_axis::lambda_mhz: p.lambda_mhz = g; break;
    case sweep_axis::j_hop_mhz: p.j_hop_mhz = g; break;
    case sweep_axis::lr_scale:
      for (auto& b : p.long_range) b.strength_mhz *= g;
      break;
    case sweep_axis::dimer_phase: phi = g; break;
  }
  Eigen::MatrixXd h = build_matrix(p);
  EvolutionRecord rec;
  switch (plan.protocol) {
    case protocol_kind::quench_single:
      rec = evolve_record(h, make_single(p.n_sites, plan.j0), plan.j0, plan.tf_ns, plan.dt_ns);
      break;
    case protocol_kind::quench_dimer:
      rec = evolve_record(h, make_dimer(p.n_sites, plan.dimer_n, phi), plan.dimer_n, plan.tf_ns,
                          plan.dt_ns);
      break;
    case protocol_kind::comb:
      rec = evolve_comb_record(h, comb_sites(p.n_sites, plan.comb_period, plan.comb_offset),
                               plan.tf_ns, plan.dt_ns);
      break;
  }
  SweepRow row;
  row.param = g;
  row.d_bar = rec.d_bar;
  row.m_integrated = rec.m_integrated;
  row.n_r_bar = rec.n_r_bar;
  row.init_energy_radns = rec.init_energy_radns;
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepPlan& plan, int workers) {
  validate(plan);
  std::vector<SweepRow> rows(plan.grid.size());
  parallel_for(plan.grid.size(), workers, [&](size_t i) {
    try {
      rows[i] = eval_point(plan, plan.grid[i]);
    } catch (const std::exception& e) {
      rows[i].param = plan.grid[i];
      rows[i].failed = true;
      rows[i].message = e.what();
    }
  });
  return rows;
}

std::vector<SweepRow> me_quench_scan(const MosaicParams& base,
                                     const std::vector<std::pair<int, int>>& states, double tf_ns,
                                     double dt_ns, int workers) {
  validate(base);
  if (states.empty()) throw error(errc::invalid_params, "state list must be nonempty");
  for (const auto& [n, sign] : states) {
    if (n < 1 || n + 1 > base.n_sites) throw error(errc::invalid_params, "dimer position out of range");
    if (sign != 1 && sign != -1) throw error(errc::invalid_params, "sign must be +1 or -1");
  }
  Eigen::MatrixXd h = build_matrix(base);
  std::vector<SweepRow> rows(states.size());
  parallel_for(states.size(), workers, [&](size_t i) {
    auto [n, sign] = states[i];
    double phi = sign > 0 ? 0.0 : kPi;
    EvolutionRecord rec = evolve_record(h, make_dimer(base.n_sites, n, phi), n, tf_ns, dt_ns);
    SweepRow row;
    row.param = sign > 0 ? n : -n;
    row.d_bar = rec.d_bar;
    row.m_integrated = rec.m_integrated;
    row.n_r_bar = rec.n_r_bar;
    row.init_energy_radns = rec.init_energy_radns;
    rows[i] = row;
  });
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return a.init_energy_radns < b.init_energy_radns;
  });
  return rows;
}

}  // namespace mosaic
