#include "mosaic/mosaic_c.h"

#include <cstring>
#include <string>

#include "error.hpp"
#include "io.hpp"
#include "presets.hpp"
#include "rg.hpp"
#include "spectral.hpp"
#include "sweep.hpp"
#include "version.hpp"

struct mosaic_params {
  mosaic::MosaicParams v;
};

struct mosaic_record {
  mosaic::EvolutionRecord v;
};

struct mosaic_spectrum {
  mosaic::SpectrumRecord v;
};

struct mosaic_sweep {
  std::vector<mosaic::SweepRow> rows;
};

namespace {

thread_local std::string g_last_error;

int32_t code_of(const mosaic::error& e) {
  using mosaic::errc;
  switch (e.code()) {
    case errc::invalid_params: return MOSAIC_ERR_INVALID_PARAMS;
    case errc::index_range: return MOSAIC_ERR_INDEX_RANGE;
    case errc::dimension_mismatch: return MOSAIC_ERR_DIMENSION;
    case errc::singular_bond: return MOSAIC_ERR_SINGULAR_BOND;
    case errc::eigensolver_failure: return MOSAIC_ERR_EIGENSOLVER;
    case errc::rg_domain: return MOSAIC_ERR_RG_DOMAIN;
    case errc::io_failure: return MOSAIC_ERR_IO;
    case errc::parse_failure: return MOSAIC_ERR_PARSE;
    case errc::unknown_preset: return MOSAIC_ERR_UNKNOWN_PRESET;
    default: return MOSAIC_ERR_INTERNAL;
  }
}

template <typename Fn>
int32_t guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return MOSAIC_OK;
  } catch (const mosaic::error& e) {
    g_last_error = e.what();
    return code_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MOSAIC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return MOSAIC_ERR_INTERNAL;
  }
}

int32_t null_arg(const char* what) {
  g_last_error = std::string(what) + " must not be NULL";
  return MOSAIC_ERR_NULL_ARGUMENT;
}

int32_t class_code(mosaic::state_class c) {
  switch (c) {
    case mosaic::state_class::localized: return MOSAIC_CLASS_LOCALIZED;
    case mosaic::state_class::critical: return MOSAIC_CLASS_CRITICAL;
    case mosaic::state_class::extended: return MOSAIC_CLASS_EXTENDED;
    default: return MOSAIC_CLASS_UNRESOLVED;
  }
}

int32_t record_time_index(const mosaic_record* rec, int32_t i) {
  if (i < 0 || static_cast<size_t>(i) >= rec->v.times.size())
    throw mosaic::error(mosaic::errc::index_range, "time index out of range");
  return i;
}

int32_t spectrum_index(const mosaic_spectrum* s, int32_t k) {
  if (k < 0 || k >= s->v.energies.size())
    throw mosaic::error(mosaic::errc::index_range, "state index out of range");
  return k;
}

mosaic::sweep_axis axis_of(int32_t a) {
  switch (a) {
    case MOSAIC_AXIS_LAMBDA_MHZ: return mosaic::sweep_axis::lambda_mhz;
    case MOSAIC_AXIS_J_HOP_MHZ: return mosaic::sweep_axis::j_hop_mhz;
    case MOSAIC_AXIS_LR_SCALE: return mosaic::sweep_axis::lr_scale;
    case MOSAIC_AXIS_DIMER_PHASE: return mosaic::sweep_axis::dimer_phase;
    default: throw mosaic::error(mosaic::errc::invalid_params, "unknown sweep axis code");
  }
}

mosaic::protocol_kind protocol_of(int32_t p) {
  switch (p) {
    case MOSAIC_PROTOCOL_SINGLE: return mosaic::protocol_kind::quench_single;
    case MOSAIC_PROTOCOL_DIMER: return mosaic::protocol_kind::quench_dimer;
    case MOSAIC_PROTOCOL_COMB: return mosaic::protocol_kind::comb;
    default: throw mosaic::error(mosaic::errc::invalid_params, "unknown protocol code");
  }
}

}  // namespace

extern "C" {

const char* mosaic_version(void) { return mosaic::kVersion; }

const char* mosaic_last_error_message(void) { return g_last_error.c_str(); }

/* ---- parameters ------------------------------------------------------- */

mosaic_params* mosaic_params_new(void) { return new (std::nothrow) mosaic_params(); }

void mosaic_params_free(mosaic_params* p) { delete p; }

int32_t mosaic_params_copy(const mosaic_params* p, mosaic_params** out) {
  if (!p) return null_arg("params");
  if (!out) return null_arg("out");
  return guarded([&] { *out = new mosaic_params{p->v}; });
}

#define MOSAIC_SETTER(fname, field, ctype)                  \
  int32_t fname(mosaic_params* p, ctype value) {            \
    if (!p) return null_arg("params");                      \
    return guarded([&] { p->v.field = value; });            \
  }

MOSAIC_SETTER(mosaic_params_set_n_sites, n_sites, int32_t)
MOSAIC_SETTER(mosaic_params_set_j_mhz, j_hop_mhz, double)
MOSAIC_SETTER(mosaic_params_set_lambda_mhz, lambda_mhz, double)
MOSAIC_SETTER(mosaic_params_set_v0_mhz, v0_mhz, double)
MOSAIC_SETTER(mosaic_params_set_theta, theta, double)
MOSAIC_SETTER(mosaic_params_set_alpha, alpha, double)

#undef MOSAIC_SETTER

int32_t mosaic_params_set_alpha_rational(mosaic_params* p, int64_t num, int64_t den) {
  if (!p) return null_arg("params");
  return guarded([&] {
    if (num <= 0 || den <= 0 || num >= den)
      throw mosaic::error(mosaic::errc::invalid_params, "rational alpha needs 0 < num < den");
    p->v.alpha = static_cast<double>(num) / static_cast<double>(den);
  });
}

int32_t mosaic_params_set_periodic(mosaic_params* p, int32_t periodic) {
  if (!p) return null_arg("params");
  return guarded([&] { p->v.periodic = periodic != 0; });
}

int32_t mosaic_params_clear_long_range(mosaic_params* p) {
  if (!p) return null_arg("params");
  return guarded([&] { p->v.long_range.clear(); });
}

int32_t mosaic_params_add_long_range(mosaic_params* p, int32_t m, int32_t n, double strength_mhz) {
  if (!p) return null_arg("params");
  return guarded([&] { p->v.long_range.push_back({m, n, strength_mhz}); });
}

int32_t mosaic_params_add_nnn_uniform(mosaic_params* p, double strength_mhz) {
  if (!p) return null_arg("params");
  return guarded([&] {
    auto lr = mosaic::nnn_uniform(p->v.n_sites, strength_mhz);
    p->v.long_range.insert(p->v.long_range.end(), lr.begin(), lr.end());
  });
}

int32_t mosaic_params_add_nnnn_uniform(mosaic_params* p, double strength_mhz) {
  if (!p) return null_arg("params");
  return guarded([&] {
    auto lr = mosaic::nnnn_uniform(p->v.n_sites, strength_mhz);
    p->v.long_range.insert(p->v.long_range.end(), lr.begin(), lr.end());
  });
}

int32_t mosaic_params_validate(const mosaic_params* p) {
  if (!p) return null_arg("params");
  return guarded([&] { mosaic::validate(p->v); });
}

#define MOSAIC_GETTER(fname, expr, ctype)                     \
  int32_t fname(const mosaic_params* p, ctype* out) {         \
    if (!p) return null_arg("params");                        \
    if (!out) return null_arg("out");                         \
    return guarded([&] { *out = (expr); });                   \
  }

MOSAIC_GETTER(mosaic_params_get_n_sites, p->v.n_sites, int32_t)
MOSAIC_GETTER(mosaic_params_get_j_mhz, p->v.j_hop_mhz, double)
MOSAIC_GETTER(mosaic_params_get_lambda_mhz, p->v.lambda_mhz, double)
MOSAIC_GETTER(mosaic_params_get_v0_mhz, p->v.v0_mhz, double)
MOSAIC_GETTER(mosaic_params_get_theta, p->v.theta, double)
MOSAIC_GETTER(mosaic_params_get_alpha, p->v.alpha, double)
MOSAIC_GETTER(mosaic_params_get_periodic, p->v.periodic ? 1 : 0, int32_t)
MOSAIC_GETTER(mosaic_params_long_range_count, static_cast<int32_t>(p->v.long_range.size()), int32_t)

#undef MOSAIC_GETTER

/* ---- lattice queries --------------------------------------------------- */

int32_t mosaic_coupling_at(const mosaic_params* p, int32_t bond, double* out_mhz) {
  if (!p) return null_arg("params");
  if (!out_mhz) return null_arg("out_mhz");
  return guarded([&] { *out_mhz = mosaic::coupling_at(p->v, bond); });
}

int32_t mosaic_potential_at(const mosaic_params* p, int32_t site, double* out_mhz) {
  if (!p) return null_arg("params");
  if (!out_mhz) return null_arg("out_mhz");
  return guarded([&] { *out_mhz = mosaic::potential_at(p->v, site); });
}

int32_t mosaic_find_idz_bonds(const mosaic_params* p, double epsilon, int32_t* out_bonds,
                              int32_t capacity, int32_t* out_count) {
  if (!p) return null_arg("params");
  if (!out_count) return null_arg("out_count");
  if (capacity > 0 && !out_bonds) return null_arg("out_bonds");
  return guarded([&] {
    auto bonds = mosaic::find_idz_bonds(p->v, epsilon);
    *out_count = static_cast<int32_t>(bonds.size());
    int32_t n = std::min<int32_t>(capacity, *out_count);
    for (int32_t i = 0; i < n; ++i) out_bonds[i] = bonds[i];
  });
}

int32_t mosaic_fibonacci_approximant(int32_t k, int64_t* out_num, int64_t* out_den) {
  if (!out_num || !out_den) return null_arg("out_num/out_den");
  return guarded([&] {
    auto [num, den] = mosaic::fibonacci_approximant(k);
    *out_num = num;
    *out_den = den;
  });
}

double mosaic_omega_radns(double f_mhz) { return mosaic::omega_radns(f_mhz); }

/* ---- time evolution ----------------------------------------------------- */

int32_t mosaic_evolve_single(const mosaic_params* p, int32_t j0, double tf_ns, double dt_ns,
                             mosaic_record** out) {
  if (!p) return null_arg("params");
  if (!out) return null_arg("out");
  return guarded([&] {
    Eigen::MatrixXd h = mosaic::build_matrix(p->v);
    auto rec = mosaic::evolve_record(h, mosaic::make_single(p->v.n_sites, j0), j0, tf_ns, dt_ns);
    *out = new mosaic_record{std::move(rec)};
  });
}

int32_t mosaic_evolve_dimer(const mosaic_params* p, int32_t n, double phi, double tf_ns,
                            double dt_ns, mosaic_record** out) {
  if (!p) return null_arg("params");
  if (!out) return null_arg("out");
  return guarded([&] {
    Eigen::MatrixXd h = mosaic::build_matrix(p->v);
    auto rec = mosaic::evolve_record(h, mosaic::make_dimer(p->v.n_sites, n, phi), n, tf_ns, dt_ns);
    *out = new mosaic_record{std::move(rec)};
  });
}

int32_t mosaic_evolve_comb(const mosaic_params* p, int32_t period, int32_t offset, double tf_ns,
                           double dt_ns, mosaic_record** out) {
  if (!p) return null_arg("params");
  if (!out) return null_arg("out");
  return guarded([&] {
    Eigen::MatrixXd h = mosaic::build_matrix(p->v);
    auto sites = mosaic::comb_sites(p->v.n_sites, period, offset);
    *out = new mosaic_record{mosaic::evolve_comb_record(h, sites, tf_ns, dt_ns)};
  });
}

void mosaic_record_free(mosaic_record* rec) { delete rec; }

int32_t mosaic_record_num_times(const mosaic_record* rec, int32_t* out) {
  if (!rec) return null_arg("record");
  if (!out) return null_arg("out");
  return guarded([&] { *out = static_cast<int32_t>(rec->v.times.size()); });
}

int32_t mosaic_record_num_sites(const mosaic_record* rec, int32_t* out) {
  if (!rec) return null_arg("record");
  if (!out) return null_arg("out");
  return guarded([&] { *out = static_cast<int32_t>(rec->v.densities.cols()); });
}

int32_t mosaic_record_time(const mosaic_record* rec, int32_t i, double* out_ns) {
  if (!rec) return null_arg("record");
  if (!out_ns) return null_arg("out_ns");
  return guarded([&] { *out_ns = rec->v.times[record_time_index(rec, i)]; });
}

int32_t mosaic_record_density(const mosaic_record* rec, int32_t i, int32_t site, double* out) {
  if (!rec) return null_arg("record");
  if (!out) return null_arg("out");
  return guarded([&] {
    record_time_index(rec, i);
    if (site < 1 || site > rec->v.densities.cols())
      throw mosaic::error(mosaic::errc::index_range, "site index out of range");
    *out = rec->v.densities(i, site - 1);
  });
}

int32_t mosaic_record_d(const mosaic_record* rec, int32_t i, double* out) {
  if (!rec) return null_arg("record");
  if (!out) return null_arg("out");
  return guarded([&] { *out = rec->v.d_trace[record_time_index(rec, i)]; });
}

int32_t mosaic_record_w(const mosaic_record* rec, int32_t i, double* out) {
  if (!rec) return null_arg("record");
  if (!out) return null_arg("out");
  return guarded([&] { *out = rec->v.w_trace[record_time_index(rec, i)]; });
}

#define MOSAIC_RECORD_SCALAR(fname, field)                     \
  int32_t fname(const mosaic_record* rec, double* out) {       \
    if (!rec) return null_arg("record");                       \
    if (!out) return null_arg("out");                          \
    return guarded([&] { *out = rec->v.field; });              \
  }

MOSAIC_RECORD_SCALAR(mosaic_record_d_bar, d_bar)
MOSAIC_RECORD_SCALAR(mosaic_record_m_integrated, m_integrated)
MOSAIC_RECORD_SCALAR(mosaic_record_n_r_bar, n_r_bar)
MOSAIC_RECORD_SCALAR(mosaic_record_init_energy, init_energy_radns)

#undef MOSAIC_RECORD_SCALAR

int32_t mosaic_record_write_csv(const mosaic_record* rec, const char* path) {
  if (!rec) return null_arg("record");
  if (!path) return null_arg("path");
  return guarded([&] { mosaic::write_trace_csv(rec->v, path); });
}

/* ---- spectrum ----------------------------------------------------------- */

int32_t mosaic_spectrum_compute(const mosaic_params* p, mosaic_spectrum** out) {
  if (!p) return null_arg("params");
  if (!out) return null_arg("out");
  return guarded([&] { *out = new mosaic_spectrum{mosaic::analyze_spectrum(p->v)}; });
}

void mosaic_spectrum_free(mosaic_spectrum* s) { delete s; }

int32_t mosaic_spectrum_size(const mosaic_spectrum* s, int32_t* out) {
  if (!s) return null_arg("spectrum");
  if (!out) return null_arg("out");
  return guarded([&] { *out = static_cast<int32_t>(s->v.energies.size()); });
}

int32_t mosaic_spectrum_energy(const mosaic_spectrum* s, int32_t k, double* out_radns) {
  if (!s) return null_arg("spectrum");
  if (!out_radns) return null_arg("out_radns");
  return guarded([&] { *out_radns = s->v.energies[spectrum_index(s, k)]; });
}

int32_t mosaic_spectrum_d_value(const mosaic_spectrum* s, int32_t k, double* out) {
  if (!s) return null_arg("spectrum");
  if (!out) return null_arg("out");
  return guarded([&] { *out = s->v.d_values[spectrum_index(s, k)]; });
}

int32_t mosaic_spectrum_class(const mosaic_spectrum* s, int32_t k, int32_t* out_class) {
  if (!s) return null_arg("spectrum");
  if (!out_class) return null_arg("out_class");
  return guarded([&] { *out_class = class_code(s->v.classes[spectrum_index(s, k)]); });
}

int32_t mosaic_spectrum_amplitude(const mosaic_spectrum* s, int32_t k, int32_t site, double* out) {
  if (!s) return null_arg("spectrum");
  if (!out) return null_arg("out");
  return guarded([&] {
    spectrum_index(s, k);
    if (site < 1 || site > s->v.states.rows())
      throw mosaic::error(mosaic::errc::index_range, "site index out of range");
    *out = s->v.states(site - 1, k);
  });
}

int32_t mosaic_spectrum_write_csv(const mosaic_spectrum* s, const char* path) {
  if (!s) return null_arg("spectrum");
  if (!path) return null_arg("path");
  return guarded([&] { mosaic::write_spectrum_csv(s->v, path); });
}

int32_t mosaic_localized_critical_ratio(const mosaic_spectrum* s, double lambda_mhz,
                                        double edge_tol_radns, int32_t* out_localized,
                                        int32_t* out_critical, int32_t* out_edge) {
  if (!s) return null_arg("spectrum");
  if (!out_localized || !out_critical || !out_edge) return null_arg("count outputs");
  return guarded([&] {
    auto rc = mosaic::localized_critical_ratio(s->v, lambda_mhz, edge_tol_radns);
    *out_localized = rc.n_localized;
    *out_critical = rc.n_critical;
    *out_edge = rc.n_edge;
  });
}

/* ---- transfer matrix ---------------------------------------------------- */

int32_t mosaic_lyapunov_gamma(const mosaic_params* p, double energy_radns, int64_t chain_length,
                              double* out_gamma) {
  if (!p) return null_arg("params");
  if (!out_gamma) return null_arg("out_gamma");
  return guarded([&] {
    *out_gamma = mosaic::lyapunov_exponent(p->v, energy_radns, chain_length).gamma;
  });
}

int32_t mosaic_me_scan(const mosaic_params* p, const double* energies_radns, int32_t count,
                       int64_t chain_length, double tau, int32_t workers, double* out_gamma,
                       int32_t* out_class, int32_t* out_found, double* out_crossing_minus,
                       double* out_crossing_plus) {
  if (!p) return null_arg("params");
  if (!energies_radns) return null_arg("energies_radns");
  if (!out_gamma || !out_class || !out_found || !out_crossing_minus || !out_crossing_plus)
    return null_arg("outputs");
  return guarded([&] {
    if (count <= 0)
      throw mosaic::error(mosaic::errc::invalid_params, "energy count must be positive");
    std::vector<double> grid(energies_radns, energies_radns + count);
    auto res = mosaic::mobility_edge_scan(p->v, grid, chain_length, tau, workers);
    for (int32_t i = 0; i < count; ++i) {
      out_gamma[i] = res.points[i].gamma;
      out_class[i] = class_code(res.points[i].cls);
    }
    *out_found = res.crossing_found ? 1 : 0;
    *out_crossing_minus = res.crossing_minus;
    *out_crossing_plus = res.crossing_plus;
  });
}

/* ---- transition criteria ------------------------------------------------ */

int32_t mosaic_threshold_nnn(double j_mhz, double lambda_mhz, double* out_mhz) {
  if (!out_mhz) return null_arg("out_mhz");
  return guarded([&] { *out_mhz = mosaic::threshold_nnn(j_mhz, lambda_mhz); });
}

int32_t mosaic_threshold_with_mu(double j_mhz, double lambda_mhz, double mu_mhz, double* out_mhz,
                                 int32_t* out_advisory_large_mu) {
  if (!out_mhz) return null_arg("out_mhz");
  return guarded([&] {
    auto t = mosaic::threshold_with_mu(j_mhz, lambda_mhz, mu_mhz);
    *out_mhz = t.value_mhz;
    if (out_advisory_large_mu) *out_advisory_large_mu = t.advisory_large_mu ? 1 : 0;
  });
}

int32_t mosaic_verify_threshold(const mosaic_params* base, const double* j_nn_grid_mhz,
                                int32_t count, double mu_mhz, int32_t j0, double tf_ns,
                                double dt_ns, int32_t workers, int32_t* out_found,
                                double* out_onset_mhz, double* out_predicted_mhz,
                                double* out_d_reference, double* out_rows_d_bar,
                                double* out_rows_n_r_bar) {
  if (!base) return null_arg("params");
  if (!j_nn_grid_mhz) return null_arg("j_nn_grid_mhz");
  if (!out_found || !out_onset_mhz || !out_predicted_mhz) return null_arg("outputs");
  return guarded([&] {
    if (count <= 0) throw mosaic::error(mosaic::errc::invalid_params, "grid count must be positive");
    std::vector<double> grid(j_nn_grid_mhz, j_nn_grid_mhz + count);
    auto v = mosaic::verify_threshold(base->v, grid, mu_mhz, j0, tf_ns, dt_ns, workers);
    *out_found = v.found ? 1 : 0;
    *out_onset_mhz = v.onset_j_nn_mhz;
    *out_predicted_mhz = v.predicted_mhz;
    if (out_d_reference) *out_d_reference = v.d_reference;
    for (int32_t i = 0; i < count; ++i) {
      if (out_rows_d_bar) out_rows_d_bar[i] = v.rows[i].d_bar;
      if (out_rows_n_r_bar) out_rows_n_r_bar[i] = v.rows[i].n_r_bar;
    }
  });
}

/* ---- sweeps ------------------------------------------------------------- */

int32_t mosaic_sweep_run(const mosaic_params* base, int32_t axis, const double* grid,
                         int32_t count, int32_t protocol, int32_t j0, int32_t dimer_n,
                         double dimer_phi, int32_t comb_period, int32_t comb_offset, double tf_ns,
                         double dt_ns, int32_t workers, mosaic_sweep** out) {
  if (!base) return null_arg("params");
  if (!grid) return null_arg("grid");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (count <= 0) throw mosaic::error(mosaic::errc::invalid_params, "grid count must be positive");
    mosaic::SweepPlan plan;
    plan.base = base->v;
    plan.axis = axis_of(axis);
    plan.grid.assign(grid, grid + count);
    plan.protocol = protocol_of(protocol);
    plan.j0 = j0;
    plan.dimer_n = dimer_n;
    plan.dimer_phi = dimer_phi;
    plan.comb_period = comb_period;
    plan.comb_offset = comb_offset;
    plan.tf_ns = tf_ns;
    plan.dt_ns = dt_ns;
    *out = new mosaic_sweep{mosaic::run_sweep(plan, workers)};
  });
}

int32_t mosaic_me_quench_scan(const mosaic_params* base, const int32_t* positions,
                              const int32_t* signs, int32_t count, double tf_ns, double dt_ns,
                              int32_t workers, mosaic_sweep** out) {
  if (!base) return null_arg("params");
  if (!positions || !signs) return null_arg("positions/signs");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (count <= 0) throw mosaic::error(mosaic::errc::invalid_params, "state count must be positive");
    std::vector<std::pair<int, int>> states;
    states.reserve(count);
    for (int32_t i = 0; i < count; ++i) states.emplace_back(positions[i], signs[i]);
    *out = new mosaic_sweep{mosaic::me_quench_scan(base->v, states, tf_ns, dt_ns, workers)};
  });
}

void mosaic_sweep_free(mosaic_sweep* sw) { delete sw; }

int32_t mosaic_sweep_num_rows(const mosaic_sweep* sw, int32_t* out) {
  if (!sw) return null_arg("sweep");
  if (!out) return null_arg("out");
  return guarded([&] { *out = static_cast<int32_t>(sw->rows.size()); });
}

int32_t mosaic_sweep_row(const mosaic_sweep* sw, int32_t i, double* out_param, double* out_d_bar,
                         double* out_m, double* out_n_r, double* out_energy_radns,
                         int32_t* out_failed) {
  if (!sw) return null_arg("sweep");
  return guarded([&] {
    if (i < 0 || static_cast<size_t>(i) >= sw->rows.size())
      throw mosaic::error(mosaic::errc::index_range, "row index out of range");
    const auto& r = sw->rows[i];
    if (out_param) *out_param = r.param;
    if (out_d_bar) *out_d_bar = r.d_bar;
    if (out_m) *out_m = r.m_integrated;
    if (out_n_r) *out_n_r = r.n_r_bar;
    if (out_energy_radns) *out_energy_radns = r.init_energy_radns;
    if (out_failed) *out_failed = r.failed ? 1 : 0;
  });
}

int32_t mosaic_sweep_write_csv(const mosaic_sweep* sw, const char* path) {
  if (!sw) return null_arg("sweep");
  if (!path) return null_arg("path");
  return guarded([&] { mosaic::write_sweep_csv(sw->rows, path); });
}

/* ---- presets ------------------------------------------------------------ */

int32_t mosaic_preset_count(void) {
  return static_cast<int32_t>(mosaic::preset_names().size());
}

const char* mosaic_preset_name(int32_t index) {
  static const std::vector<std::string> names = mosaic::preset_names();
  if (index < 0 || static_cast<size_t>(index) >= names.size()) return nullptr;
  return names[index].c_str();
}

int32_t mosaic_preset_kind(const char* name, int32_t* out_kind) {
  if (!name) return null_arg("name");
  if (!out_kind) return null_arg("out_kind");
  return guarded([&] {
    switch (mosaic::preset_kind_of(name)) {
      case mosaic::preset_kind::evolve: *out_kind = MOSAIC_PRESET_EVOLVE; break;
      case mosaic::preset_kind::sweep: *out_kind = MOSAIC_PRESET_SWEEP; break;
      default: *out_kind = MOSAIC_PRESET_QUENCH; break;
    }
  });
}

int32_t mosaic_preset_evolve_info(const char* name, mosaic_params** out_params,
                                  int32_t* out_protocol, int32_t* out_j0, int32_t* out_comb_period,
                                  int32_t* out_comb_offset, double* out_tf_ns, double* out_dt_ns) {
  if (!name) return null_arg("name");
  if (!out_params) return null_arg("out_params");
  return guarded([&] {
    auto ep = mosaic::evolve_preset(name);
    *out_params = new mosaic_params{ep.params};
    if (out_protocol)
      *out_protocol = ep.protocol == mosaic::protocol_kind::comb ? MOSAIC_PROTOCOL_COMB
                                                                 : MOSAIC_PROTOCOL_SINGLE;
    if (out_j0) *out_j0 = ep.j0;
    if (out_comb_period) *out_comb_period = ep.comb_period;
    if (out_comb_offset) *out_comb_offset = ep.comb_offset;
    if (out_tf_ns) *out_tf_ns = ep.tf_ns;
    if (out_dt_ns) *out_dt_ns = ep.dt_ns;
  });
}

int32_t mosaic_preset_sweep_info(const char* name, mosaic_params** out_params, int32_t* out_axis,
                                 int32_t* out_protocol, int32_t* out_j0, int32_t* out_dimer_n,
                                 int32_t* out_comb_period, int32_t* out_comb_offset,
                                 double* out_tf_ns, double* out_dt_ns, double* out_grid,
                                 int32_t capacity, int32_t* out_grid_len) {
  if (!name) return null_arg("name");
  if (!out_params) return null_arg("out_params");
  if (!out_grid_len) return null_arg("out_grid_len");
  if (capacity > 0 && !out_grid) return null_arg("out_grid");
  return guarded([&] {
    auto plan = mosaic::sweep_preset(name);
    *out_params = new mosaic_params{plan.base};
    if (out_axis) {
      switch (plan.axis) {
        case mosaic::sweep_axis::lambda_mhz: *out_axis = MOSAIC_AXIS_LAMBDA_MHZ; break;
        case mosaic::sweep_axis::j_hop_mhz: *out_axis = MOSAIC_AXIS_J_HOP_MHZ; break;
        case mosaic::sweep_axis::lr_scale: *out_axis = MOSAIC_AXIS_LR_SCALE; break;
        default: *out_axis = MOSAIC_AXIS_DIMER_PHASE; break;
      }
    }
    if (out_protocol) {
      switch (plan.protocol) {
        case mosaic::protocol_kind::quench_single: *out_protocol = MOSAIC_PROTOCOL_SINGLE; break;
        case mosaic::protocol_kind::quench_dimer: *out_protocol = MOSAIC_PROTOCOL_DIMER; break;
        default: *out_protocol = MOSAIC_PROTOCOL_COMB; break;
      }
    }
    if (out_j0) *out_j0 = plan.j0;
    if (out_dimer_n) *out_dimer_n = plan.dimer_n;
    if (out_comb_period) *out_comb_period = plan.comb_period;
    if (out_comb_offset) *out_comb_offset = plan.comb_offset;
    if (out_tf_ns) *out_tf_ns = plan.tf_ns;
    if (out_dt_ns) *out_dt_ns = plan.dt_ns;
    *out_grid_len = static_cast<int32_t>(plan.grid.size());
    int32_t n = std::min<int32_t>(capacity, *out_grid_len);
    for (int32_t i = 0; i < n; ++i) out_grid[i] = plan.grid[i];
  });
}

int32_t mosaic_preset_quench_info(const char* name, mosaic_params** out_params,
                                  int32_t* out_positions, int32_t* out_signs, int32_t capacity,
                                  int32_t* out_count, double* out_tf_ns, double* out_dt_ns) {
  if (!name) return null_arg("name");
  if (!out_params) return null_arg("out_params");
  if (!out_count) return null_arg("out_count");
  if (capacity > 0 && (!out_positions || !out_signs)) return null_arg("out_positions/out_signs");
  return guarded([&] {
    auto qp = mosaic::quench_preset(name);
    *out_params = new mosaic_params{qp.base};
    *out_count = static_cast<int32_t>(qp.states.size());
    int32_t n = std::min<int32_t>(capacity, *out_count);
    for (int32_t i = 0; i < n; ++i) {
      out_positions[i] = qp.states[i].first;
      out_signs[i] = qp.states[i].second;
    }
    if (out_tf_ns) *out_tf_ns = qp.tf_ns;
    if (out_dt_ns) *out_dt_ns = qp.dt_ns;
  });
}

/* ---- manifests ----------------------------------------------------------- */

int32_t mosaic_write_manifest(const char* path, const mosaic_params* p, const char* protocol,
                              double tf_ns, double dt_ns, const char* rows_sorted_by,
                              double wall_seconds) {
  if (!path) return null_arg("path");
  if (!p) return null_arg("params");
  if (!protocol) return null_arg("protocol");
  return guarded([&] {
    mosaic::RunManifest m;
    m.tool = std::string("mosaic ") + mosaic::kVersion;
    m.protocol = protocol;
    m.params = p->v;
    m.tf_ns = tf_ns;
    m.dt_ns = dt_ns;
    m.rows_sorted_by = rows_sorted_by ? rows_sorted_by : "grid";
    m.wall_seconds = wall_seconds;
    mosaic::write_manifest(m, path);
  });
}

}  // extern "C"
