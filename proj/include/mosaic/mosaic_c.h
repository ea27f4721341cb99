/* C interface to the mosaic-lattice simulator.
 *
 * All functions return a status code (MOSAIC_OK on success) unless noted;
 * outputs go through pointer arguments. On failure the thread-local message
 * from mosaic_last_error_message() describes what went wrong. Handles are
 * opaque and must be released with their matching _free function. Couplings
 * are plain frequencies in MHz; energies are angular (rad/ns); times are ns;
 * sites and bonds are 1-based.
 */

#ifndef MOSAIC_C_H
#define MOSAIC_C_H

#include <stdint.h>

#if defined(__cplusplus)
extern "C" {
#endif

enum {
  MOSAIC_OK = 0,
  MOSAIC_ERR_INVALID_PARAMS = 1,
  MOSAIC_ERR_INDEX_RANGE = 2,
  MOSAIC_ERR_DIMENSION = 3,
  MOSAIC_ERR_SINGULAR_BOND = 4,
  MOSAIC_ERR_EIGENSOLVER = 5,
  MOSAIC_ERR_RG_DOMAIN = 6,
  MOSAIC_ERR_IO = 7,
  MOSAIC_ERR_PARSE = 8,
  MOSAIC_ERR_UNKNOWN_PRESET = 9,
  MOSAIC_ERR_NULL_ARGUMENT = 10,
  MOSAIC_ERR_INTERNAL = 11
};

enum {
  MOSAIC_CLASS_LOCALIZED = 0,
  MOSAIC_CLASS_CRITICAL = 1,
  MOSAIC_CLASS_EXTENDED = 2,
  MOSAIC_CLASS_UNRESOLVED = 3
};

enum {
  MOSAIC_AXIS_LAMBDA_MHZ = 0,
  MOSAIC_AXIS_J_HOP_MHZ = 1,
  MOSAIC_AXIS_LR_SCALE = 2,
  MOSAIC_AXIS_DIMER_PHASE = 3
};

enum {
  MOSAIC_PROTOCOL_SINGLE = 0,
  MOSAIC_PROTOCOL_DIMER = 1,
  MOSAIC_PROTOCOL_COMB = 2
};

enum {
  MOSAIC_PRESET_EVOLVE = 0,
  MOSAIC_PRESET_SWEEP = 1,
  MOSAIC_PRESET_QUENCH = 2
};

/* library version string, never NULL */
const char* mosaic_version(void);

/* message for the last failure on this thread; empty string if none */
const char* mosaic_last_error_message(void);

/* ---- parameters ------------------------------------------------------- */

typedef struct mosaic_params mosaic_params;

/* defaults: N=24, J=4 MHz, lambda=4 MHz, V0=0, theta=pi/5, golden alpha */
mosaic_params* mosaic_params_new(void);
void mosaic_params_free(mosaic_params* p);
int32_t mosaic_params_copy(const mosaic_params* p, mosaic_params** out);

int32_t mosaic_params_set_n_sites(mosaic_params* p, int32_t n_sites);
int32_t mosaic_params_set_j_mhz(mosaic_params* p, double j_mhz);
int32_t mosaic_params_set_lambda_mhz(mosaic_params* p, double lambda_mhz);
int32_t mosaic_params_set_v0_mhz(mosaic_params* p, double v0_mhz);
int32_t mosaic_params_set_theta(mosaic_params* p, double theta);
int32_t mosaic_params_set_alpha(mosaic_params* p, double alpha);
/* rational approximant alpha = num/den, for commensurate-ring studies */
int32_t mosaic_params_set_alpha_rational(mosaic_params* p, int64_t num, int64_t den);
int32_t mosaic_params_set_periodic(mosaic_params* p, int32_t periodic);
int32_t mosaic_params_clear_long_range(mosaic_params* p);
int32_t mosaic_params_add_long_range(mosaic_params* p, int32_t m, int32_t n, double strength_mhz);
int32_t mosaic_params_add_nnn_uniform(mosaic_params* p, double strength_mhz);
int32_t mosaic_params_add_nnnn_uniform(mosaic_params* p, double strength_mhz);
/* full validation, same checks every run entry point performs */
int32_t mosaic_params_validate(const mosaic_params* p);

int32_t mosaic_params_get_n_sites(const mosaic_params* p, int32_t* out);
int32_t mosaic_params_get_j_mhz(const mosaic_params* p, double* out);
int32_t mosaic_params_get_lambda_mhz(const mosaic_params* p, double* out);
int32_t mosaic_params_get_v0_mhz(const mosaic_params* p, double* out);
int32_t mosaic_params_get_theta(const mosaic_params* p, double* out);
int32_t mosaic_params_get_alpha(const mosaic_params* p, double* out);
int32_t mosaic_params_get_periodic(const mosaic_params* p, int32_t* out);
int32_t mosaic_params_long_range_count(const mosaic_params* p, int32_t* out);

/* ---- lattice queries --------------------------------------------------- */

int32_t mosaic_coupling_at(const mosaic_params* p, int32_t bond, double* out_mhz);
int32_t mosaic_potential_at(const mosaic_params* p, int32_t site, double* out_mhz);
/* writes up to capacity bond indices; *out_count is the total found */
int32_t mosaic_find_idz_bonds(const mosaic_params* p, double epsilon, int32_t* out_bonds,
                              int32_t capacity, int32_t* out_count);
int32_t mosaic_fibonacci_approximant(int32_t k, int64_t* out_num, int64_t* out_den);
/* angular frequency (rad/ns) of a plain frequency (MHz) */
double mosaic_omega_radns(double f_mhz);

/* ---- time evolution ----------------------------------------------------- */

typedef struct mosaic_record mosaic_record;

int32_t mosaic_evolve_single(const mosaic_params* p, int32_t j0, double tf_ns, double dt_ns,
                             mosaic_record** out);
int32_t mosaic_evolve_dimer(const mosaic_params* p, int32_t n, double phi, double tf_ns,
                            double dt_ns, mosaic_record** out);
int32_t mosaic_evolve_comb(const mosaic_params* p, int32_t period, int32_t offset, double tf_ns,
                           double dt_ns, mosaic_record** out);
void mosaic_record_free(mosaic_record* rec);

int32_t mosaic_record_num_times(const mosaic_record* rec, int32_t* out);
int32_t mosaic_record_num_sites(const mosaic_record* rec, int32_t* out);
int32_t mosaic_record_time(const mosaic_record* rec, int32_t i, double* out_ns);
int32_t mosaic_record_density(const mosaic_record* rec, int32_t i, int32_t site, double* out);
int32_t mosaic_record_d(const mosaic_record* rec, int32_t i, double* out);
int32_t mosaic_record_w(const mosaic_record* rec, int32_t i, double* out);
int32_t mosaic_record_d_bar(const mosaic_record* rec, double* out);
int32_t mosaic_record_m_integrated(const mosaic_record* rec, double* out);
int32_t mosaic_record_n_r_bar(const mosaic_record* rec, double* out);
int32_t mosaic_record_init_energy(const mosaic_record* rec, double* out_radns);
int32_t mosaic_record_write_csv(const mosaic_record* rec, const char* path);

/* ---- spectrum ----------------------------------------------------------- */

typedef struct mosaic_spectrum mosaic_spectrum;

int32_t mosaic_spectrum_compute(const mosaic_params* p, mosaic_spectrum** out);
void mosaic_spectrum_free(mosaic_spectrum* s);
int32_t mosaic_spectrum_size(const mosaic_spectrum* s, int32_t* out);
int32_t mosaic_spectrum_energy(const mosaic_spectrum* s, int32_t k, double* out_radns);
int32_t mosaic_spectrum_d_value(const mosaic_spectrum* s, int32_t k, double* out);
int32_t mosaic_spectrum_class(const mosaic_spectrum* s, int32_t k, int32_t* out_class);
int32_t mosaic_spectrum_amplitude(const mosaic_spectrum* s, int32_t k, int32_t site, double* out);
int32_t mosaic_spectrum_write_csv(const mosaic_spectrum* s, const char* path);
/* counts of |E| above/below omega(lambda); near-edge states (within
 * edge_tol_radns) are reported separately */
int32_t mosaic_localized_critical_ratio(const mosaic_spectrum* s, double lambda_mhz,
                                        double edge_tol_radns, int32_t* out_localized,
                                        int32_t* out_critical, int32_t* out_edge);

/* ---- transfer matrix ---------------------------------------------------- */

int32_t mosaic_lyapunov_gamma(const mosaic_params* p, double energy_radns, int64_t chain_length,
                              double* out_gamma);
/* per-energy gamma plus class (gamma < tau reads as critical); crossing
 * outputs hold the outermost below-tau energies when found */
int32_t mosaic_me_scan(const mosaic_params* p, const double* energies_radns, int32_t count,
                       int64_t chain_length, double tau, int32_t workers, double* out_gamma,
                       int32_t* out_class, int32_t* out_found, double* out_crossing_minus,
                       double* out_crossing_plus);

/* ---- transition criteria ------------------------------------------------ */

int32_t mosaic_threshold_nnn(double j_mhz, double lambda_mhz, double* out_mhz);
int32_t mosaic_threshold_with_mu(double j_mhz, double lambda_mhz, double mu_mhz, double* out_mhz,
                                 int32_t* out_advisory_large_mu);
/* out_d_reference and the two row arrays (count entries each) may be NULL */
int32_t mosaic_verify_threshold(const mosaic_params* base, const double* j_nn_grid_mhz,
                                int32_t count, double mu_mhz, int32_t j0, double tf_ns,
                                double dt_ns, int32_t workers, int32_t* out_found,
                                double* out_onset_mhz, double* out_predicted_mhz,
                                double* out_d_reference, double* out_rows_d_bar,
                                double* out_rows_n_r_bar);

/* ---- sweeps ------------------------------------------------------------- */

typedef struct mosaic_sweep mosaic_sweep;

int32_t mosaic_sweep_run(const mosaic_params* base, int32_t axis, const double* grid,
                         int32_t count, int32_t protocol, int32_t j0, int32_t dimer_n,
                         double dimer_phi, int32_t comb_period, int32_t comb_offset, double tf_ns,
                         double dt_ns, int32_t workers, mosaic_sweep** out);
/* dimer quenches across the mobility edge; signs entries are +1/-1 and rows
 * come back sorted by initial energy with param = signed position */
int32_t mosaic_me_quench_scan(const mosaic_params* base, const int32_t* positions,
                              const int32_t* signs, int32_t count, double tf_ns, double dt_ns,
                              int32_t workers, mosaic_sweep** out);
void mosaic_sweep_free(mosaic_sweep* sw);
int32_t mosaic_sweep_num_rows(const mosaic_sweep* sw, int32_t* out);
/* any output pointer may be NULL to skip that column */
int32_t mosaic_sweep_row(const mosaic_sweep* sw, int32_t i, double* out_param, double* out_d_bar,
                         double* out_m, double* out_n_r, double* out_energy_radns,
                         int32_t* out_failed);
int32_t mosaic_sweep_write_csv(const mosaic_sweep* sw, const char* path);

/* ---- presets ------------------------------------------------------------ */

/* number of known presets; names retrieved by index */
int32_t mosaic_preset_count(void);
const char* mosaic_preset_name(int32_t index); /* NULL when out of range */
int32_t mosaic_preset_kind(const char* name, int32_t* out_kind);

/* evolve presets: parameters plus protocol description */
int32_t mosaic_preset_evolve_info(const char* name, mosaic_params** out_params,
                                  int32_t* out_protocol, int32_t* out_j0, int32_t* out_comb_period,
                                  int32_t* out_comb_offset, double* out_tf_ns, double* out_dt_ns);
/* sweep presets: grid copied into caller storage (capacity entries);
 * *out_grid_len is the full length regardless */
int32_t mosaic_preset_sweep_info(const char* name, mosaic_params** out_params, int32_t* out_axis,
                                 int32_t* out_protocol, int32_t* out_j0, int32_t* out_dimer_n,
                                 int32_t* out_comb_period, int32_t* out_comb_offset,
                                 double* out_tf_ns, double* out_dt_ns, double* out_grid,
                                 int32_t capacity, int32_t* out_grid_len);
/* quench presets: positions/signs copied into caller storage */
int32_t mosaic_preset_quench_info(const char* name, mosaic_params** out_params,
                                  int32_t* out_positions, int32_t* out_signs, int32_t capacity,
                                  int32_t* out_count, double* out_tf_ns, double* out_dt_ns);

/* ---- manifests ----------------------------------------------------------- */

int32_t mosaic_write_manifest(const char* path, const mosaic_params* p, const char* protocol,
                              double tf_ns, double dt_ns, const char* rows_sorted_by,
                              double wall_seconds);

#if defined(__cplusplus)
}
#endif

#endif /* MOSAIC_C_H */
