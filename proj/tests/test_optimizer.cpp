#include <doctest.h>

#include <cmath>
#include <numbers>

#include "btzotto/error.hpp"
#include "btzotto/optimizer.hpp"
#include "oracles.hpp"

using namespace btzotto;

namespace {

// `fig 3` defaults: M = 0.01, zeta = -1, omega_c = 0.1, tau_h = 0.2, tau_c = 0.5, T_h = 2.
CycleConfig fig3_template(int zeta = -1) {
  CycleConfig c;
  c.omega_c = 0.1;
  c.omega_h = 0.15;
  c.hot = {2.0, 0.01, zeta};
  c.cold = {1.0, 0.01, zeta};
  c.tau_h = 0.2;
  c.tau_c = 0.5;
  return c;
}

// `fig 5` defaults: M = 0.01, zeta = -1, omega_h = 0.5, tau_h = tau_c = 0.2, T_h = 2.
CycleConfig fig5_template(int zeta = -1) {
  CycleConfig c;
  c.omega_c = 0.1;
  c.omega_h = 0.5;
  c.hot = {2.0, 0.01, zeta};
  c.cold = {1.0, 0.01, zeta};
  c.tau_h = 0.2;
  c.tau_c = 0.2;
  return c;
}

}  // namespace

TEST_SUITE("optimizer") {
  TEST_CASE("maximize_scalar closed-form maxima") {
    const OptimumReport q = maximize_scalar([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0);
    CHECK(std::abs(q.argmax - 0.3) <= 1e-8);
    CHECK_FALSE(q.near_edge);
    const OptimumReport s = maximize_scalar([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(std::abs(s.argmax - std::numbers::pi / 2) <= 1e-8);
    CHECK(s.objective_value == doctest::Approx(1.0));
    CHECK(s.bracket_lo == 0.0);
    CHECK(s.iterations > 0);
  }

  TEST_CASE("pre-scan escapes a local maximum") {
    // Global peak at 0.8 next to a broader local one at 0.2.
    auto f = [](double x) {
      return std::exp(-50 * (x - 0.2) * (x - 0.2)) + 1.5 * std::exp(-2000 * (x - 0.8) * (x - 0.8));
    };
    CHECK(std::abs(maximize_scalar(f, 0.0, 1.0).argmax - 0.8) < 1e-7);
  }

  TEST_CASE("edge maxima are flagged") {
    const OptimumReport r = maximize_scalar([](double x) { return x; }, 0.0, 1.0);
    CHECK(r.near_edge);
    CHECK(r.argmax == doctest::Approx(1.0));
  }

  TEST_CASE("maximize_scalar errors") {
    CHECK_THROWS_AS((void)maximize_scalar([](double) { return 2.0; }, 0.0, 1.0), FlatObjectiveError);
    CHECK_THROWS_AS((void)maximize_scalar([](double x) { return x; }, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS((void)maximize_scalar([](double x) { return std::log(x - 0.5); }, 0.0, 1.0),
                    DomainError);
  }

  TEST_CASE("determinism") {
    auto f = [](double x) { return std::sin(3 * x) * std::exp(-x); };
    const OptimumReport a = maximize_scalar(f, 0.0, 2.0);
    const OptimumReport b = maximize_scalar(f, 0.0, 2.0);
    CHECK(a.argmax == b.argmax);
    CHECK(a.evaluations == b.evaluations);
  }

  TEST_CASE("engine power optimum agrees with a dense grid scan") {
    CycleConfig cfg = fig3_template();
    cfg.cold.temperature = 1.0;  // T_c / T_h = 0.5
    const EngineOptimum opt = optimize_engine(cfg);
    const auto window = engine_window(cfg.omega_c, cfg.t_hot(), cfg.t_cold());
    REQUIRE(window);
    auto power = [&](double wh) {
      CycleConfig c = cfg;
      c.omega_h = wh;
      return run_cycle(c).w_tot / c.tau_cycle();
    };
    // Coarse-to-fine oracle: 1e3-point scan, then 1e3 points around its best.
    const auto coarse = oracle::brute_force_argmax(power, window->first * (1 + 1e-9), window->second, 1000);
    const auto fine = oracle::brute_force_argmax(power, coarse.argmax - coarse.spacing,
                                                 coarse.argmax + coarse.spacing, 1000);
    CHECK(std::abs(opt.power.argmax - fine.argmax) < 1e-4);
    CHECK(opt.power.objective_value >= fine.value - 1e-12);
    REQUIRE(opt.power.efficiency_or_cop_at_opt);
    CHECK(*opt.power.efficiency_or_cop_at_opt == doctest::Approx(1.0 - 0.1 / opt.power.argmax));
    CHECK(*opt.power.efficiency_or_cop_at_opt <= opt.bounds.eta_carnot);
  }

  TEST_CASE("power vanishes at both ends of the asymptotic engine window") {
    CycleConfig cfg = fig3_template();
    cfg.cold.temperature = 1.0;
    cfg.tau_h = 200.0;
    cfg.tau_c = 200.0;
    for (const double wh : {0.1 * (1 + 1e-7), 0.2 * (1 - 1e-7)}) {
      CycleConfig c = cfg;
      c.omega_h = wh;
      CHECK(std::abs(run_cycle(c).w_tot) < 1e-7);
    }
  }

  TEST_CASE("emp_curve collapses near equal temperatures and respects Carnot") {
    const std::vector<double> ratios{0.2, 0.5, 0.8, 0.995};
    const auto rows = emp_curve(fig3_template(), ratios);
    REQUIRE(rows.size() == ratios.size());
    for (const auto& row : rows) {
      REQUIRE(row.eta_star);
      CHECK(*row.eta_star > 0.0);
      CHECK(*row.eta_star <= row.eta_carnot);
    }
    CHECK(*rows.back().eta_star < 0.005);
  }

  TEST_CASE("emp_curve leaves rows outside (0, 1) empty") {
    const std::vector<double> ratios{1.2};
    const auto rows = emp_curve(fig3_template(), ratios);
    CHECK_FALSE(rows[0].eta_star);
    CHECK(std::isnan(rows[0].eta_carnot));
  }

  TEST_CASE("cop_curve bounds") {
    const std::vector<double> ratios{0.2, 0.5, 0.8};
    const auto rows = cop_curve(fig5_template(), ratios);
    for (const auto& row : rows) {
      REQUIRE(row.eps_star);
      REQUIRE(row.eps_eco);
      CHECK(*row.eps_star > 0.0);
      CHECK(*row.eps_star <= row.cop_carnot);
      CHECK(*row.eps_eco <= row.cop_carnot * (1 + 1e-9));
    }
  }

  TEST_CASE("optimize with an empty window is a regime error") {
    CycleConfig cfg = fig3_template();
    cfg.cold.temperature = cfg.hot.temperature;
    CHECK_THROWS_AS((void)optimize_engine(cfg), RegimeError);
    CHECK_THROWS_AS((void)optimize_fridge(cfg), RegimeError);
  }

  TEST_CASE("grid") {
    const Grid g{0.0, 1.0, 5};
    const auto p = g.points();
    REQUIRE(p.size() == 5);
    CHECK(p[2] == 0.5);
    CHECK(p[4] == 1.0);
    CHECK_THROWS_AS((void)Grid({0.0, 1.0, 1}).points(), DomainError);
    CHECK_THROWS_AS((void)Grid({1.0, 0.0, 3}).points(), DomainError);
  }

  TEST_CASE("run_sweep rate_vs_T layout and ordering") {
    SweepSpec spec;
    spec.kind = SweepKind::RateVsT;
    spec.omega = 0.1;
    spec.cycle.hot.mass = 0.01;
    spec.grid = {0.01, 2.0, 12};
    const Dataset ds = run_sweep(spec);
    REQUIRE(ds.columns == std::vector<std::string>{"T", "rate_zeta-1", "rate_zeta0", "rate_zeta1"});
    REQUIRE(ds.rows.size() == 12);
    for (const auto& row : ds.rows) {
      CHECK(row[1] > row[2]);
      CHECK(row[2] > row[3]);
      CHECK(row[3] > 0.0);
    }
  }

  TEST_CASE("run_sweep work_vs_tau_h reaches the asymptote") {
    SweepSpec spec;
    spec.kind = SweepKind::WorkVsTauH;
    spec.cycle.omega_c = 0.1;
    spec.cycle.omega_h = 1.0;
    spec.cycle.hot = {2.0, 0.01, 0};
    spec.cycle.cold = {0.1, 0.01, 0};
    spec.grid = {0.0, 40.0, 9};
    const Dataset ds = run_sweep(spec);
    REQUIRE(ds.columns.size() == 4);
    CHECK(ds.columns[0] == "tau_h");
    for (std::size_t j = 1; j < 4; ++j) {
      CHECK(ds.rows.front()[j] == 0.0);
      CHECK(std::abs(ds.rows.back()[j] - 0.097739) < 1e-4);
    }
  }

  TEST_CASE("run_sweep is bit-reproducible") {
    SweepSpec spec;
    spec.kind = SweepKind::CustomGrid;
    spec.variable = "omega_h";
    spec.cycle = fig3_template();
    spec.grid = {0.12, 0.9, 4};
    spec.zeta_list = {1};
    const Dataset a = run_sweep(spec);
    const Dataset b = run_sweep(spec);
    CHECK(a.columns == b.columns);
    CHECK(a.rows == b.rows);
    CHECK(a.columns[0] == "omega_h");
    CHECK(a.columns.size() == 6);
  }

  TEST_CASE("sweep spec validation") {
    SweepSpec spec;
    spec.zeta_list = {2};
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.zeta_list = {0};
    spec.kind = SweepKind::CustomGrid;
    spec.variable = "banana";
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.kind = SweepKind::EmpVsRatio;
    spec.grid = {0.0, 1.0, 4};
    CHECK_THROWS_AS(spec.validate(), DomainError);
    CHECK(sweep_kind_from_string("cop_vs_ratio") == SweepKind::CopVsRatio);
    CHECK_THROWS_AS((void)sweep_kind_from_string("fig9"), DomainError);
  }
}
