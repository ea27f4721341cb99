#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "mosaic/mosaic_c.h"

namespace {

struct Params {
  mosaic_params* p = nullptr;
  Params() : p(mosaic_params_new()) { REQUIRE(p != nullptr); }
  ~Params() { mosaic_params_free(p); }
  Params(const Params&) = delete;
  Params& operator=(const Params&) = delete;
  operator mosaic_params*() { return p; }
  operator const mosaic_params*() const { return p; }
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("version and error message lifecycle") {
  CHECK(std::string(mosaic_version()) == "1.0.0");

  Params p;
  CHECK(mosaic_params_set_n_sites(p, -3) == MOSAIC_OK);
  CHECK(mosaic_params_validate(p) == MOSAIC_ERR_INVALID_PARAMS);
  std::string msg = mosaic_last_error_message();
  CHECK(msg.find("n_sites") != std::string::npos);
  // a successful call clears the sticky message
  CHECK(mosaic_params_set_n_sites(p, 24) == MOSAIC_OK);
  CHECK(mosaic_params_validate(p) == MOSAIC_OK);
  CHECK(std::string(mosaic_last_error_message()).empty());
}

TEST_CASE("parameter handles") {
  Params p;
  int32_t n = 0;
  double x = 0.0;
  CHECK(mosaic_params_get_n_sites(p, &n) == MOSAIC_OK);
  CHECK(n == 24);
  CHECK(mosaic_params_get_j_mhz(p, &x) == MOSAIC_OK);
  CHECK(x == 4.0);
  CHECK(mosaic_params_get_lambda_mhz(p, &x) == MOSAIC_OK);
  CHECK(x == 4.0);
  CHECK(mosaic_params_get_v0_mhz(p, &x) == MOSAIC_OK);
  CHECK(x == 0.0);
  int32_t flag = 1;
  CHECK(mosaic_params_get_periodic(p, &flag) == MOSAIC_OK);
  CHECK(flag == 0);

  CHECK(mosaic_params_set_lambda_mhz(p, 10.0) == MOSAIC_OK);
  mosaic_params* copy = nullptr;
  CHECK(mosaic_params_copy(p, &copy) == MOSAIC_OK);
  REQUIRE(copy != nullptr);
  CHECK(mosaic_params_set_lambda_mhz(p, 1.0) == MOSAIC_OK);
  CHECK(mosaic_params_get_lambda_mhz(copy, &x) == MOSAIC_OK);
  CHECK(x == 10.0);
  mosaic_params_free(copy);

  CHECK(mosaic_params_add_nnn_uniform(p, 2.0) == MOSAIC_OK);
  int32_t cnt = 0;
  CHECK(mosaic_params_long_range_count(p, &cnt) == MOSAIC_OK);
  CHECK(cnt == 22);
  CHECK(mosaic_params_clear_long_range(p) == MOSAIC_OK);
  CHECK(mosaic_params_long_range_count(p, &cnt) == MOSAIC_OK);
  CHECK(cnt == 0);

  CHECK(mosaic_params_get_n_sites(nullptr, &n) == MOSAIC_ERR_NULL_ARGUMENT);
  CHECK(mosaic_params_get_n_sites(p, nullptr) == MOSAIC_ERR_NULL_ARGUMENT);
  CHECK(std::string(mosaic_last_error_message()).find("NULL") != std::string::npos);
}

TEST_CASE("rational modulation frequency") {
  Params p;
  CHECK(mosaic_params_set_alpha_rational(p, 89, 144) == MOSAIC_OK);
  double a = 0.0;
  CHECK(mosaic_params_get_alpha(p, &a) == MOSAIC_OK);
  CHECK(a == 89.0 / 144.0);
  CHECK(mosaic_params_set_alpha_rational(p, 0, 144) == MOSAIC_ERR_INVALID_PARAMS);
  CHECK(mosaic_params_set_alpha_rational(p, 144, 89) == MOSAIC_ERR_INVALID_PARAMS);
  CHECK(mosaic_params_set_alpha_rational(p, 5, 5) == MOSAIC_ERR_INVALID_PARAMS);
}

TEST_CASE("lattice queries") {
  Params p;
  CHECK(mosaic_params_set_n_sites(p, 56) == MOSAIC_OK);
  CHECK(mosaic_params_set_j_mhz(p, 1.0) == MOSAIC_OK);
  CHECK(mosaic_params_set_lambda_mhz(p, 1.0) == MOSAIC_OK);

  double v = 0.0;
  CHECK(mosaic_coupling_at(p, 14, &v) == MOSAIC_OK);
  CHECK(std::fabs(v - 0.031111099597251154) < 1e-12);
  CHECK(mosaic_coupling_at(p, 0, &v) == MOSAIC_ERR_INDEX_RANGE);
  CHECK(mosaic_potential_at(p, 57, &v) == MOSAIC_ERR_INDEX_RANGE);

  int32_t bonds[8] = {0};
  int32_t count = 0;
  CHECK(mosaic_find_idz_bonds(p, 0.10, nullptr, 0, &count) == MOSAIC_OK);
  CHECK(count == 3);
  CHECK(mosaic_find_idz_bonds(p, 0.10, bonds, 2, &count) == MOSAIC_OK);
  CHECK(count == 3);
  CHECK(bonds[0] == 14);
  CHECK(bonds[1] == 48);
  CHECK(bonds[2] == 0);
  CHECK(mosaic_find_idz_bonds(p, 0.10, bonds, 8, &count) == MOSAIC_OK);
  CHECK(bonds[2] == 52);

  int64_t num = 0, den = 0;
  CHECK(mosaic_fibonacci_approximant(4, &num, &den) == MOSAIC_OK);
  CHECK(num == 5);
  CHECK(den == 8);
  CHECK(mosaic_fibonacci_approximant(0, &num, &den) == MOSAIC_ERR_INVALID_PARAMS);

  CHECK(mosaic_omega_radns(1.0) == doctest::Approx(0.006283185307179587).epsilon(1e-15));
}

TEST_CASE("single-site evolution record") {
  Params p;
  CHECK(mosaic_params_set_lambda_mhz(p, 10.0) == MOSAIC_OK);
  mosaic_record* rec = nullptr;
  REQUIRE(mosaic_evolve_single(p, 14, 300.0, 1.0, &rec) == MOSAIC_OK);

  int32_t nt = 0, ns = 0;
  CHECK(mosaic_record_num_times(rec, &nt) == MOSAIC_OK);
  CHECK(nt == 301);
  CHECK(mosaic_record_num_sites(rec, &ns) == MOSAIC_OK);
  CHECK(ns == 24);

  double v = -1.0;
  CHECK(mosaic_record_time(rec, 0, &v) == MOSAIC_OK);
  CHECK(v == 0.0);
  CHECK(mosaic_record_time(rec, 300, &v) == MOSAIC_OK);
  CHECK(v == 300.0);
  CHECK(mosaic_record_density(rec, 0, 14, &v) == MOSAIC_OK);
  CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mosaic_record_density(rec, 0, 13, &v) == MOSAIC_OK);
  CHECK(std::fabs(v) < 1e-14);
  CHECK(mosaic_record_d(rec, 0, &v) == MOSAIC_OK);
  CHECK(std::fabs(v) < 1e-12);
  CHECK(mosaic_record_w(rec, 0, &v) == MOSAIC_OK);
  CHECK(std::fabs(v) < 1e-12);

  CHECK(mosaic_record_d_bar(rec, &v) == MOSAIC_OK);
  CHECK(std::fabs(v - 0.343666) < 1e-5);
  CHECK(mosaic_record_n_r_bar(rec, &v) == MOSAIC_OK);
  CHECK(std::fabs(v - 0.001388) < 1e-5);
  CHECK(mosaic_record_m_integrated(rec, &v) == MOSAIC_OK);
  CHECK(std::fabs(v - 1.296473) < 1e-5);
  CHECK(mosaic_record_init_energy(rec, &v) == MOSAIC_OK);

  CHECK(mosaic_record_time(rec, -1, &v) == MOSAIC_ERR_INDEX_RANGE);
  CHECK(mosaic_record_time(rec, 301, &v) == MOSAIC_ERR_INDEX_RANGE);
  CHECK(mosaic_record_density(rec, 0, 0, &v) == MOSAIC_ERR_INDEX_RANGE);
  CHECK(mosaic_record_density(rec, 0, 25, &v) == MOSAIC_ERR_INDEX_RANGE);

  const char* path = "capi_trace.csv";
  CHECK(mosaic_record_write_csv(rec, path) == MOSAIC_OK);
  CHECK(slurp(path).rfind("t_ns,n_1,", 0) == 0);
  std::remove(path);
  mosaic_record_free(rec);

  mosaic_record* bad = nullptr;
  CHECK(mosaic_evolve_single(p, 0, 300.0, 1.0, &bad) == MOSAIC_ERR_INDEX_RANGE);
  CHECK(bad == nullptr);
  CHECK(mosaic_evolve_single(p, 14, 300.0, 7.0, &bad) == MOSAIC_ERR_INVALID_PARAMS);
  CHECK(mosaic_evolve_single(p, 14, 300.0, 1.0, nullptr) == MOSAIC_ERR_NULL_ARGUMENT);
}

TEST_CASE("dimer evolution reproduces the asymmetry") {
  Params p;
  CHECK(mosaic_params_set_lambda_mhz(p, 1.0) == MOSAIC_OK);
  CHECK(mosaic_params_set_v0_mhz(p, 4.0) == MOSAIC_OK);

  mosaic_record* plus = nullptr;
  mosaic_record* minus = nullptr;
  REQUIRE(mosaic_evolve_dimer(p, 12, 0.0, 300.0, 1.0, &plus) == MOSAIC_OK);
  REQUIRE(mosaic_evolve_dimer(p, 12, 3.14159265358979323846, 300.0, 1.0, &minus) == MOSAIC_OK);
  double dp = 0.0, dm = 0.0;
  CHECK(mosaic_record_d_bar(plus, &dp) == MOSAIC_OK);
  CHECK(mosaic_record_d_bar(minus, &dm) == MOSAIC_OK);
  CHECK(std::fabs(dp - 0.0053) < 1e-3);
  CHECK(std::fabs(dm - 0.1268) < 1e-3);
  mosaic_record_free(plus);
  mosaic_record_free(minus);
}

TEST_CASE("comb evolution") {
  Params p;
  CHECK(mosaic_params_set_n_sites(p, 56) == MOSAIC_OK);
  CHECK(mosaic_params_set_lambda_mhz(p, 10.0) == MOSAIC_OK);
  mosaic_record* rec = nullptr;
  REQUIRE(mosaic_evolve_comb(p, 6, 1, 300.0, 1.0, &rec) == MOSAIC_OK);
  double v = 0.0;
  CHECK(mosaic_record_d(rec, 60, &v) == MOSAIC_OK);
  CHECK(std::fabs(v - 0.832006) < 1e-5);
  double total = 0.0;
  for (int site = 1; site <= 56; ++site) {
    CHECK(mosaic_record_density(rec, 60, site, &v) == MOSAIC_OK);
    total += v;
  }
  CHECK(std::fabs(total - 10.0) < 1e-9);
  mosaic_record_free(rec);
}

TEST_CASE("spectrum handles") {
  Params p;
  CHECK(mosaic_params_set_lambda_mhz(p, 10.0) == MOSAIC_OK);
  mosaic_spectrum* s = nullptr;
  REQUIRE(mosaic_spectrum_compute(p, &s) == MOSAIC_OK);
  int32_t n = 0;
  CHECK(mosaic_spectrum_size(s, &n) == MOSAIC_OK);
  CHECK(n == 24);

  double prev = -1e9;
  for (int k = 0; k < 24; ++k) {
    double e = 0.0;
    CHECK(mosaic_spectrum_energy(s, k, &e) == MOSAIC_OK);
    CHECK(e >= prev);
    prev = e;
    int32_t cls = -1;
    CHECK(mosaic_spectrum_class(s, k, &cls) == MOSAIC_OK);
    CHECK(cls == MOSAIC_CLASS_CRITICAL);
  }
  double d0 = 0.0;
  CHECK(mosaic_spectrum_d_value(s, 0, &d0) == MOSAIC_OK);
  CHECK(d0 > 0.25);
  double norm = 0.0;
  for (int site = 1; site <= 24; ++site) {
    double a = 0.0;
    CHECK(mosaic_spectrum_amplitude(s, 0, site, &a) == MOSAIC_OK);
    norm += a * a;
  }
  CHECK(std::fabs(norm - 1.0) < 1e-12);
  CHECK(mosaic_spectrum_energy(s, 24, &d0) == MOSAIC_ERR_INDEX_RANGE);
  CHECK(mosaic_spectrum_amplitude(s, 0, 0, &d0) == MOSAIC_ERR_INDEX_RANGE);

  const char* path = "capi_spectrum.csv";
  CHECK(mosaic_spectrum_write_csv(s, path) == MOSAIC_OK);
  CHECK(slurp(path).rfind("k,E_radns,D,class", 0) == 0);
  std::remove(path);
  mosaic_spectrum_free(s);
}

TEST_CASE("state count ratio at the Fibonacci ring size") {
  Params p;
  CHECK(mosaic_params_set_n_sites(p, 144) == MOSAIC_OK);
  CHECK(mosaic_params_set_lambda_mhz(p, 6.0) == MOSAIC_OK);
  CHECK(mosaic_params_set_v0_mhz(p, 4.0) == MOSAIC_OK);
  mosaic_spectrum* s = nullptr;
  REQUIRE(mosaic_spectrum_compute(p, &s) == MOSAIC_OK);
  int32_t loc = 0, crit = 0, edge = 0;
  CHECK(mosaic_localized_critical_ratio(s, 6.0, 1e-9, &loc, &crit, &edge) == MOSAIC_OK);
  CHECK(loc == 72);
  CHECK(crit == 72);
  CHECK(edge == 0);
  mosaic_spectrum_free(s);
}

TEST_CASE("transfer-matrix exponent") {
  Params p;
  CHECK(mosaic_params_set_lambda_mhz(p, 1.0) == MOSAIC_OK);
  double g = 0.0;
  CHECK(mosaic_lyapunov_gamma(p, 0.05, 100000, &g) == MOSAIC_OK);
  CHECK(std::fabs(g - 0.6931471805599453) < 5e-3);
  CHECK(mosaic_lyapunov_gamma(p, 0.05, 10, &g) == MOSAIC_ERR_INVALID_PARAMS);
  CHECK(mosaic_lyapunov_gamma(p, 0.05, 100000, nullptr) == MOSAIC_ERR_NULL_ARGUMENT);

  Params zero;
  CHECK(mosaic_params_set_lambda_mhz(zero, 0.0) == MOSAIC_OK);
  CHECK(mosaic_lyapunov_gamma(zero, 0.05, 100000, &g) == MOSAIC_ERR_SINGULAR_BOND);
}

TEST_CASE("mobility edge scan over a localized lattice") {
  Params p;
  CHECK(mosaic_params_set_lambda_mhz(p, 1.0) == MOSAIC_OK);
  const double grid[3] = {-0.02, 0.0, 0.02};
  double gamma[3] = {0};
  int32_t cls[3] = {0};
  int32_t found = -1;
  double lo = 0.0, hi = 0.0;
  REQUIRE(mosaic_me_scan(p, grid, 3, 100000, 0.15, 0, gamma, cls, &found, &lo, &hi) == MOSAIC_OK);
  CHECK(found == 0);
  for (int i = 0; i < 3; ++i) {
    CHECK(gamma[i] > 0.15);
    CHECK(cls[i] == MOSAIC_CLASS_LOCALIZED);
  }
  CHECK(mosaic_me_scan(p, nullptr, 3, 100000, 0.15, 0, gamma, cls, &found, &lo, &hi) ==
        MOSAIC_ERR_NULL_ARGUMENT);
  CHECK(mosaic_me_scan(p, grid, 0, 100000, 0.15, 0, gamma, cls, &found, &lo, &hi) ==
        MOSAIC_ERR_INVALID_PARAMS);
}

TEST_CASE("threshold formulas") {
  double v = 0.0;
  CHECK(mosaic_threshold_nnn(4.0, 10.0, &v) == MOSAIC_OK);
  CHECK(v == doctest::Approx(std::sqrt(40.0)).epsilon(1e-15));
  CHECK(mosaic_threshold_nnn(-1.0, 10.0, &v) == MOSAIC_ERR_INVALID_PARAMS);

  int32_t advisory = 0;
  CHECK(mosaic_threshold_with_mu(4.0, 10.0, 3.72, &v, &advisory) == MOSAIC_OK);
  CHECK(std::fabs(v - 4.0 * 0.4183300132670378) < 1e-9);
  CHECK(advisory == 0);
  CHECK(mosaic_threshold_with_mu(4.0, 1.0, 2.0, &v, &advisory) == MOSAIC_OK);
  CHECK(advisory == 1);
  CHECK(mosaic_threshold_with_mu(1.0, 10.0, 10.1, &v, &advisory) == MOSAIC_ERR_RG_DOMAIN);
}

TEST_CASE("empirical threshold verification") {
  Params p;
  CHECK(mosaic_params_set_lambda_mhz(p, 10.0) == MOSAIC_OK);
  std::vector<double> grid;
  for (int i = 0; i <= 25; ++i) grid.push_back(0.4 * i);
  int32_t found = 0;
  double onset = 0.0, predicted = 0.0, dref = 0.0;
  std::vector<double> dbars(grid.size()), nrs(grid.size());
  REQUIRE(mosaic_verify_threshold(p, grid.data(), (int32_t)grid.size(), 0.0, 14, 300.0, 1.0, 0,
                                  &found, &onset, &predicted, &dref, dbars.data(),
                                  nrs.data()) == MOSAIC_OK);
  CHECK(found == 1);
  CHECK(onset == doctest::Approx(6.4).epsilon(1e-12));
  CHECK(predicted == doctest::Approx(std::sqrt(40.0)).epsilon(1e-12));
  CHECK(std::fabs(dref - 0.7713) < 1e-3);
  CHECK(dbars.back() == dref);
  CHECK(nrs.back() > 0.2);
  // row buffers are optional
  REQUIRE(mosaic_verify_threshold(p, grid.data(), (int32_t)grid.size(), 0.0, 14, 300.0, 1.0, 0,
                                  &found, &onset, &predicted, nullptr, nullptr,
                                  nullptr) == MOSAIC_OK);
  CHECK(found == 1);
}

TEST_CASE("sweep handles") {
  Params p;
  const double grid[3] = {0.0, 4.0, 10.0};
  mosaic_sweep* sw = nullptr;
  REQUIRE(mosaic_sweep_run(p, MOSAIC_AXIS_LAMBDA_MHZ, grid, 3, MOSAIC_PROTOCOL_SINGLE, 14, 12, 0.0,
                           6, 1, 300.0, 1.0, 0, &sw) == MOSAIC_OK);
  int32_t rows = 0;
  CHECK(mosaic_sweep_num_rows(sw, &rows) == MOSAIC_OK);
  CHECK(rows == 3);
  double param = 0.0, d = 0.0;
  int32_t failed = 1;
  CHECK(mosaic_sweep_row(sw, 1, &param, &d, nullptr, nullptr, nullptr, &failed) == MOSAIC_OK);
  CHECK(param == 4.0);
  CHECK(std::fabs(d - 0.434025) < 1e-5);
  CHECK(failed == 0);
  CHECK(mosaic_sweep_row(sw, 3, &param, &d, nullptr, nullptr, nullptr, &failed) ==
        MOSAIC_ERR_INDEX_RANGE);

  const char* path = "capi_sweep.csv";
  CHECK(mosaic_sweep_write_csv(sw, path) == MOSAIC_OK);
  CHECK(slurp(path).rfind("param,d_bar,", 0) == 0);
  std::remove(path);
  mosaic_sweep_free(sw);

  CHECK(mosaic_sweep_run(p, 9, grid, 3, MOSAIC_PROTOCOL_SINGLE, 14, 12, 0.0, 6, 1, 300.0, 1.0, 0,
                         &sw) == MOSAIC_ERR_INVALID_PARAMS);
}

TEST_CASE("quench scan across the edge") {
  Params p;
  CHECK(mosaic_params_set_lambda_mhz(p, 1.0) == MOSAIC_OK);
  CHECK(mosaic_params_set_v0_mhz(p, 4.0) == MOSAIC_OK);
  const int32_t positions[2] = {12, 12};
  const int32_t signs[2] = {1, -1};
  mosaic_sweep* sw = nullptr;
  REQUIRE(mosaic_me_quench_scan(p, positions, signs, 2, 300.0, 1.0, 0, &sw) == MOSAIC_OK);
  int32_t rows = 0;
  CHECK(mosaic_sweep_num_rows(sw, &rows) == MOSAIC_OK);
  CHECK(rows == 2);
  double e0 = 0.0, e1 = 0.0, d0 = 0.0, d1 = 0.0;
  CHECK(mosaic_sweep_row(sw, 0, nullptr, &d0, nullptr, nullptr, &e0, nullptr) == MOSAIC_OK);
  CHECK(mosaic_sweep_row(sw, 1, nullptr, &d1, nullptr, nullptr, &e1, nullptr) == MOSAIC_OK);
  CHECK(e0 <= e1);
  CHECK(std::fabs(std::min(d0, d1) - 0.0053) < 1e-3);
  CHECK(std::fabs(std::max(d0, d1) - 0.1268) < 1e-3);
  mosaic_sweep_free(sw);
}

TEST_CASE("preset catalogue") {
  CHECK(mosaic_preset_count() == 11);
  CHECK(std::string(mosaic_preset_name(0)) == "fig2a");
  CHECK(std::string(mosaic_preset_name(10)) == "fig4c");
  CHECK(mosaic_preset_name(11) == nullptr);
  CHECK(mosaic_preset_name(-1) == nullptr);

  int32_t kind = -1;
  CHECK(mosaic_preset_kind("fig2b", &kind) == MOSAIC_OK);
  CHECK(kind == MOSAIC_PRESET_EVOLVE);
  CHECK(mosaic_preset_kind("fig3b", &kind) == MOSAIC_OK);
  CHECK(kind == MOSAIC_PRESET_SWEEP);
  CHECK(mosaic_preset_kind("fig4c", &kind) == MOSAIC_OK);
  CHECK(kind == MOSAIC_PRESET_QUENCH);
  CHECK(mosaic_preset_kind("fig9z", &kind) == MOSAIC_ERR_UNKNOWN_PRESET);
  CHECK(!std::string(mosaic_last_error_message()).empty());
}

TEST_CASE("preset descriptions") {
  mosaic_params* params = nullptr;
  int32_t protocol = -1, j0 = 0, period = 0, offset = 0;
  double tf = 0.0, dt = 0.0;
  REQUIRE(mosaic_preset_evolve_info("fig2c", &params, &protocol, &j0, &period, &offset, &tf,
                                    &dt) == MOSAIC_OK);
  CHECK(protocol == MOSAIC_PROTOCOL_COMB);
  CHECK(period == 6);
  CHECK(offset == 1);
  CHECK(tf == 300.0);
  CHECK(dt == 1.0);
  int32_t n = 0;
  double lam = 0.0;
  CHECK(mosaic_params_get_n_sites(params, &n) == MOSAIC_OK);
  CHECK(n == 56);
  CHECK(mosaic_params_get_lambda_mhz(params, &lam) == MOSAIC_OK);
  CHECK(lam == 10.0);
  mosaic_params_free(params);

  CHECK(mosaic_preset_evolve_info("fig3b", &params, &protocol, &j0, &period, &offset, &tf, &dt) ==
        MOSAIC_ERR_UNKNOWN_PRESET);

  int32_t axis = -1, dimer_n = 0, grid_len = 0;
  double grid[40] = {0};
  REQUIRE(mosaic_preset_sweep_info("fig3b", &params, &axis, &protocol, &j0, &dimer_n, &period,
                                   &offset, &tf, &dt, grid, 40, &grid_len) == MOSAIC_OK);
  CHECK(axis == MOSAIC_AXIS_LAMBDA_MHZ);
  CHECK(protocol == MOSAIC_PROTOCOL_SINGLE);
  CHECK(j0 == 14);
  CHECK(grid_len == 21);
  CHECK(grid[0] == 0.0);
  CHECK(grid[20] == 10.0);
  mosaic_params_free(params);

  // short buffers truncate the copy but still report the full length
  REQUIRE(mosaic_preset_sweep_info("fig4b", &params, &axis, &protocol, &j0, &dimer_n, &period,
                                   &offset, &tf, &dt, grid, 8, &grid_len) == MOSAIC_OK);
  CHECK(axis == MOSAIC_AXIS_DIMER_PHASE);
  CHECK(protocol == MOSAIC_PROTOCOL_DIMER);
  CHECK(dimer_n == 12);
  CHECK(grid_len == 32);
  mosaic_params_free(params);

  int32_t positions[8] = {0}, signs[8] = {0}, count = 0;
  REQUIRE(mosaic_preset_quench_info("fig4c", &params, positions, signs, 8, &count, &tf, &dt) ==
          MOSAIC_OK);
  CHECK(count == 7);
  CHECK(positions[0] == 4);
  CHECK(positions[6] == 18);
  CHECK(signs[5] == 1);
  CHECK(signs[6] == -1);
  double v0 = 0.0;
  CHECK(mosaic_params_get_v0_mhz(params, &v0) == MOSAIC_OK);
  CHECK(v0 == 4.0);
  CHECK(mosaic_params_get_lambda_mhz(params, &lam) == MOSAIC_OK);
  CHECK(lam == 6.0);
  mosaic_params_free(params);
}

TEST_CASE("manifest writer") {
  Params p;
  const char* path = "capi_manifest.txt";
  REQUIRE(mosaic_write_manifest(path, p, "quench_single", 300.0, 1.0, "time", 0.0) == MOSAIC_OK);
  auto text = slurp(path);
  CHECK(text.rfind("schema_version = 1\ntool = mosaic 1.0.0\n", 0) == 0);
  CHECK(text.find("protocol = quench_single\n") != std::string::npos);
  CHECK(text.find("long_range = none\n") != std::string::npos);
  CHECK(text.find("rows_sorted_by = time\n") != std::string::npos);
  std::remove(path);
  CHECK(mosaic_write_manifest("no_such_dir/m.txt", p, "x", 0.0, 0.0, "grid", 0.0) ==
        MOSAIC_ERR_IO);
}
