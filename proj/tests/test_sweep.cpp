#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "doctest.h"
#include "error.hpp"
#include "presets.hpp"
#include "spectral.hpp"
#include "sweep.hpp"

using mosaic::errc;
using mosaic::MosaicParams;
using mosaic::protocol_kind;
using mosaic::sweep_axis;
using mosaic::SweepPlan;

namespace {

bool code_is(errc want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const mosaic::error& e) {
    return e.code() == want;
  }
  return false;
}

}  // namespace

TEST_CASE("axis and protocol names") {
  CHECK(std::string(mosaic::sweep_axis_name(sweep_axis::lambda_mhz)) == "lambda_mhz");
  CHECK(std::string(mosaic::sweep_axis_name(sweep_axis::lr_scale)) == "lr_scale");
  CHECK(std::string(mosaic::protocol_name(protocol_kind::quench_single)) == "quench_single");
  CHECK(std::string(mosaic::protocol_name(protocol_kind::comb)) == "comb");
}

TEST_CASE("plan validation") {
  SweepPlan plan;
  plan.base.n_sites = 24;
  plan.grid = {0.0, 1.0, 2.0};
  CHECK_NOTHROW(mosaic::validate(plan));

  auto bad = [&](auto mutate) {
    SweepPlan q = plan;
    mutate(q);
    return code_is(errc::invalid_params, [&] { mosaic::validate(q); });
  };
  CHECK(bad([](SweepPlan& q) { q.grid.clear(); }));
  CHECK(bad([](SweepPlan& q) { q.grid = {2.0, 1.0, 3.0}; }));
  CHECK(bad([](SweepPlan& q) { q.grid = {-1.0, 1.0}; }));
  CHECK(bad([](SweepPlan& q) { q.axis = sweep_axis::j_hop_mhz; q.grid = {0.0, 1.0}; }));
  CHECK(bad([](SweepPlan& q) { q.axis = sweep_axis::lr_scale; }));  // no template bonds
  CHECK(bad([](SweepPlan& q) { q.axis = sweep_axis::dimer_phase; }));  // wrong protocol
  CHECK(bad([](SweepPlan& q) { q.j0 = 25; }));
  CHECK(bad([](SweepPlan& q) { q.protocol = protocol_kind::quench_dimer; q.dimer_n = 24; }));
  CHECK(bad([](SweepPlan& q) { q.protocol = protocol_kind::comb; q.comb_offset = 25; }));
}

TEST_CASE("per-point failures are recorded, not thrown") {
  SweepPlan plan;
  plan.base.n_sites = 8;
  plan.j0 = 4;
  plan.grid = {1.0, 2.0};
  plan.tf_ns = 10.0;
  plan.dt_ns = 3.0;  // passes plan validation, fails inside every evolution
  auto rows = mosaic::run_sweep(plan);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    CHECK(r.failed);
    CHECK(!r.message.empty());
  }
  CHECK(rows[0].param == 1.0);
  CHECK(rows[1].param == 2.0);
}

TEST_CASE("single-point sweep") {
  SweepPlan plan;
  plan.base.n_sites = 24;
  plan.grid = {4.0};
  auto rows = mosaic::run_sweep(plan);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].param == 4.0);
  CHECK(!rows[0].failed);
}

TEST_CASE("coupling sweep reproduces the transition curve") {
  auto plan = mosaic::sweep_preset("fig3b");
  auto rows = mosaic::run_sweep(plan);
  REQUIRE(rows.size() == 21);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(!rows[i].failed);
    CHECK(rows[i].param == doctest::Approx(0.5 * double(i)).epsilon(1e-14));
  }
  CHECK(std::fabs(rows[0].d_bar - 0.011406) < 1e-5);
  CHECK(std::fabs(rows[2].d_bar - 0.037507) < 1e-5);
  CHECK(std::fabs(rows[2].m_integrated - 0.078647) < 1e-5);
  CHECK(std::fabs(rows[2].n_r_bar - 0.017159) < 1e-5);
  CHECK(std::fabs(rows[8].d_bar - 0.434025) < 1e-5);
  CHECK(std::fabs(rows[8].m_integrated - 1.505814) < 1e-5);
  CHECK(std::fabs(rows[20].d_bar - 0.343666) < 1e-5);
  CHECK(std::fabs(rows[20].n_r_bar - 0.001388) < 1e-5);

  // both observables put the knee at lambda = J
  std::vector<double> xs, ds, ms;
  for (const auto& r : rows) {
    xs.push_back(r.param);
    ds.push_back(r.d_bar);
    ms.push_back(r.m_integrated);
  }
  CHECK(mosaic::knee_point(xs, ds) == 4.0);
  CHECK(mosaic::knee_point(xs, ms) == 4.0);
}

TEST_CASE("long-range scale sweep") {
  auto plan = mosaic::sweep_preset("fig3c");
  auto rows = mosaic::run_sweep(plan);
  REQUIRE(rows.size() == 26);
  // scale zero reduces to the bare critical lattice
  SweepPlan bare = mosaic::sweep_preset("fig3b");
  bare.grid = {10.0};
  auto ref = mosaic::run_sweep(bare);
  CHECK(rows[0].d_bar == ref[0].d_bar);
  CHECK(rows[0].n_r_bar == ref[0].n_r_bar);
  // full experimental strength saturates both observables
  CHECK(std::fabs(rows[25].d_bar - 0.764673) < 1e-5);
  CHECK(rows[25].n_r_bar > 0.2);
  CHECK(rows[25].d_bar > rows[0].d_bar);
}

TEST_CASE("coupling sweep on the long-range lattice") {
  auto plan = mosaic::sweep_preset("fig3d");
  auto rows = mosaic::run_sweep(plan);
  REQUIRE(rows.size() == 21);
  CHECK(std::fabs(rows[0].d_bar - 0.627477) < 1e-5);
  CHECK(std::fabs(rows[0].m_integrated - 2.146634) < 1e-5);
  CHECK(std::fabs(rows[0].n_r_bar - 0.418910) < 1e-5);
  CHECK(std::fabs(rows[20].d_bar - 0.771067) < 1e-5);
  CHECK(std::fabs(rows[20].n_r_bar - 0.378856) < 1e-5);
  // nnn at 2.5 J sits above threshold everywhere, so no row localizes
  for (const auto& r : rows) CHECK(r.d_bar > 0.5);
}

TEST_CASE("dimer phase sweep") {
  auto plan = mosaic::sweep_preset("fig4b");
  auto rows = mosaic::run_sweep(plan);
  REQUIRE(rows.size() == 32);
  CHECK(rows[16].param == mosaic::kPi);

  size_t best = 0;
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].m_integrated > rows[best].m_integrated) best = i;
  CHECK(best == 16);
  CHECK(std::fabs(rows[16].m_integrated - 0.4710) < 2e-3);
  CHECK(std::fabs(rows[0].m_integrated - 0.0066) < 1e-3);
  CHECK(std::fabs(rows[8].m_integrated - 0.261554) < 1e-5);
  CHECK(std::fabs(rows[24].m_integrated - 0.216116) < 1e-5);
  CHECK(rows[16].m_integrated > 10.0 * rows[0].m_integrated);
  // conjugate phases agree only up to a finite-window remainder that
  // shrinks with tf; at 300 ns it peaks near pi/2
  for (size_t k = 1; k < 16; ++k)
    CHECK(std::fabs(rows[k].m_integrated - rows[32 - k].m_integrated) < 0.05);
  CHECK(std::fabs(rows[15].m_integrated - rows[17].m_integrated) < 0.01);

  // the symmetric and antisymmetric dimers bracket the asymmetry
  CHECK(std::fabs(rows[0].d_bar - 0.0053) < 1e-3);
  CHECK(std::fabs(rows[16].d_bar - 0.1268) < 1e-3);
}

TEST_CASE("workers do not change sweep results") {
  SweepPlan plan;
  plan.base.n_sites = 24;
  plan.grid = {0.0, 2.0, 4.0, 6.0};
  auto serial = mosaic::run_sweep(plan, 1);
  auto threaded = mosaic::run_sweep(plan, 3);
  REQUIRE(serial.size() == threaded.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].d_bar == threaded[i].d_bar);
    CHECK(serial[i].m_integrated == threaded[i].m_integrated);
    CHECK(serial[i].n_r_bar == threaded[i].n_r_bar);
    CHECK(serial[i].init_energy_radns == threaded[i].init_energy_radns);
  }
}

TEST_CASE("quench scan across the mobility edge") {
  auto q = mosaic::quench_preset("fig4c");
  auto rows = mosaic::me_quench_scan(q.base, q.states, q.tf_ns, q.dt_ns);
  REQUIRE(rows.size() == 7);
  for (size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i - 1].init_energy_radns <= rows[i].init_energy_radns);

  std::vector<double> params;
  for (const auto& r : rows) params.push_back(r.param);
  std::sort(params.begin(), params.end());
  CHECK(params == std::vector<double>{-18.0, 4.0, 8.0, 10.0, 12.0, 16.0, 18.0});

  // three initial states land inside the mobility edges and spread; the
  // other four stay put. Both observables split the same way.
  int spread_d = 0, spread_m = 0;
  for (const auto& r : rows) {
    if (r.d_bar > 0.25) ++spread_d;
    if (r.m_integrated > 0.5) ++spread_m;
    CHECK((r.d_bar > 0.25) == (r.m_integrated > 0.5));
  }
  CHECK(spread_d == 3);
  CHECK(spread_m == 3);
  double dmax = 0.0;
  for (const auto& r : rows) dmax = std::max(dmax, r.d_bar);
  CHECK(std::fabs(dmax - 0.3325) < 2e-3);
}

TEST_CASE("quench scan input validation") {
  auto q = mosaic::quench_preset("fig4c");
  CHECK(code_is(errc::invalid_params, [&] { mosaic::me_quench_scan(q.base, {}, 300.0, 1.0); }));
  CHECK(code_is(errc::invalid_params,
                [&] { mosaic::me_quench_scan(q.base, {{24, 1}}, 300.0, 1.0); }));
  CHECK(code_is(errc::invalid_params,
                [&] { mosaic::me_quench_scan(q.base, {{12, 0}}, 300.0, 1.0); }));
}
