// Acceptance checks, one PASS/FAIL line per criterion.
//   btzotto_acceptance               run all
//   btzotto_acceptance -c 2 -c 3     run a subset
// Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "btzotto/optimizer.hpp"
#include "btzotto/specfun.hpp"
#include "oracles.hpp"

using namespace btzotto;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

constexpr std::array<int, 3> kZetas{-1, 0, 1};

// 1: conical function against the hypergeometric series
Outcome special_function() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> uxi(0.0, 5.0);
  std::uniform_real_distribution<double> ux(1.0, 2.9);
  double worst = 0.0;
  double worst_xi = 0.0, worst_x = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double xi = uxi(rng);
    double x = ux(rng);
    while (x <= 1.0) x = ux(rng);
    const double ref = oracle::hypergeometric_conical(xi, x);
    const double got = specfun::conical_p({xi, x});
    const double rel = std::abs(got - ref) / std::abs(ref);
    if (!(rel <= worst)) {
      worst = rel;
      worst_xi = xi;
      worst_x = x;
    }
  }
  return {worst < 1e-8, fmt("max rel err %.2e at xi=%.4f x=%.4f (200 points)", worst, worst_xi, worst_x)};
}

const std::vector<double> kGridOmega{0.05, 0.1, 0.5, 1.0};
const std::vector<double> kGridT{0.05, 0.1, 0.5, 2.0};

// 2: detailed balance on the 48-point grid
Outcome detailed_balance() {
  double worst = 0.0;
  for (const double w : kGridOmega) {
    for (const double t : kGridT) {
      for (const int z : kZetas) {
        const BathSpec b{t, 0.01, z};
        const double up = transition_rate(w, b);
        const double down = transition_rate(-w, b);
        worst = std::max(worst, std::abs(up * std::exp(w / t) - down) / down);
      }
    }
  }
  return {worst < 1e-10, fmt("max residual %.2e over 48 points", worst)};
}

// 3: kappa = -tanh(omega / 2T) on the same grid
Outcome kappa_identity() {
  double worst = 0.0;
  for (const double w : kGridOmega) {
    for (const double t : kGridT) {
      for (const int z : kZetas) {
        const RateData r = rate_data(w, {t, 0.01, z});
        worst = std::max(worst, std::abs(r.kappa + std::tanh(w / (2.0 * t))));
      }
    }
  }
  return {worst < 1e-9, fmt("max |kappa + tanh| %.2e over 48 points", worst)};
}

SweepSpec fig1_spec(int n_max) {
  SweepSpec s;
  s.kind = SweepKind::RateVsT;
  s.omega = 0.1;
  s.cycle.hot.mass = 0.01;
  s.cycle.hot.n_max = n_max;
  s.grid = {0.01, 2.0, 200};
  return s;
}

// 4: rate-vs-temperature dataset
Outcome rate_dataset() {
  const Dataset a = run_sweep(fig1_spec(200));
  const Dataset b = run_sweep(fig1_spec(400));
  bool positive = true, ordered = true;
  double drift = 0.0;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    const auto& r = a.rows[i];  // T, zeta -1, 0, 1
    positive = positive && r[1] > 0.0 && r[2] > 0.0 && r[3] > 0.0;
    ordered = ordered && r[1] > r[2] && r[2] > r[3];
    for (int k = 1; k <= 3; ++k) {
      drift = std::max(drift, std::abs(r[k] - b.rows[i][k]) / std::abs(r[k]));
    }
  }
  return {positive && ordered && drift <= 1e-10,
          fmt("positive=%d ordered=%d rel change under 2x n_max %.2e (200 temperatures)", positive,
              ordered, drift)};
}

CycleConfig fig2_config(int zeta) {
  CycleConfig c;
  c.omega_h = 1.0;
  c.omega_c = 0.1;
  c.hot = {2.0, 0.01, zeta};
  c.cold = {0.1, 0.01, zeta};
  return c;
}

// 5: work asymptote and boundary-condition ordering at short times
Outcome work_asymptote() {
  constexpr double target = 0.097739;
  double worst = 0.0;
  std::map<int, double> gamma_h;
  std::map<int, CycleRates> rates;
  for (const int z : kZetas) {
    CycleConfig c = fig2_config(z);
    rates[z] = cycle_rates(c);
    gamma_h[z] = rates[z].hot.gamma;
    // every tau_h beyond gamma_h tau_h = 20
    for (const double gt : {20.0, 25.0, 40.0}) {
      c.tau_h = gt / gamma_h[z];
      worst = std::max(worst, std::abs(run_cycle(c, rates[z]).w_tot - target));
    }
  }
  // ordering while the slowest curve has gamma_h tau_h <= 1
  const double t_end = 1.0 / std::min({gamma_h[-1], gamma_h[0], gamma_h[1]});
  bool neumann_largest = true;
  for (int i = 1; i <= 200; ++i) {
    std::map<int, double> w;
    for (const int z : kZetas) {
      CycleConfig c = fig2_config(z);
      c.tau_h = t_end * i / 200.0;
      w[z] = run_cycle(c, rates[z]).w_tot;
    }
    neumann_largest = neumann_largest && w[-1] > w[0] && w[-1] > w[1];
  }
  return {worst < 1e-4 && neumann_largest,
          fmt("max |W_tot - %.6f| %.2e; zeta=-1 largest on (0, %.3f]: %d", target, worst, t_end,
              neumann_largest)};
}

// 6: cooling asymptote with a long hot stroke, and the slower zeta = 1 approach
Outcome cooling_asymptote() {
  constexpr double target = 0.0193083;
  SweepSpec s;
  s.kind = SweepKind::CoolPowerVsTauC;
  s.cycle.omega_h = 0.5;
  s.cycle.omega_c = 0.1;
  s.cycle.hot = {0.2, 0.01};
  s.cycle.cold = {0.1, 0.01};
  s.cycle.tau_h = 10.0;
  s.grid = {0.0, 200.0, 20001};
  const Dataset d = run_sweep(s);
  double worst = 0.0;
  std::map<int, double> t99;
  for (std::size_t k = 0; k < kZetas.size(); ++k) {
    const int z = kZetas[k];
    const double g = cycle_rates(s.cycle.with_zeta(z)).cold.gamma;
    t99[z] = NAN;
    for (const auto& row : d.rows) {
      if (std::isnan(t99[z]) && row[k + 1] >= 0.99 * target) t99[z] = row[0];
      if (g * row[0] >= 20.0) worst = std::max(worst, std::abs(row[k + 1] - target));
    }
  }
  const bool slower = t99[1] > t99[-1];
  return {worst < 1e-5 && slower,
          fmt("max |Q_c - %.7f| %.2e beyond gamma_c tau_c = 20; 99%% reached at tau_c %.2f (zeta=-1) "
              "vs %.2f (zeta=1)",
              target, worst, t99[-1], t99[1])};
}

// 7: first law over random cycles
Outcome first_law() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> uz(-1, 1);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    CycleConfig c;
    const double mass = 0.001 + 0.1 * u(rng);
    const int z = uz(rng);
    c.omega_c = 0.01 + u(rng);
    c.omega_h = c.omega_c * (1.01 + 4.0 * u(rng));
    c.cold = {0.02 + u(rng), mass, z};
    c.hot = {c.cold.temperature * (1.01 + 4.0 * u(rng)), mass, z};
    c.tau_h = 10.0 * u(rng);
    c.tau_c = 10.0 * u(rng);
    const CycleResult r = run_cycle(c);
    worst = std::max(worst, std::abs(r.w1 + r.qh + r.w3 + r.qc - r.delta_u));
  }
  return {worst < 1e-12, fmt("max |W1+Qh+W3+Qc-dU| %.2e over 1000 cycles", worst)};
}

std::vector<double> ratio_grid() { return Grid{0.02, 0.98, 25}.points(); }

// 8: engine optimization on the 25-point ratio grid
Outcome engine_optimization() {
  CycleConfig t;
  t.omega_c = 0.1;
  t.hot = {2.0, 0.01};
  t.tau_h = 0.2;
  t.tau_c = 0.5;
  const auto ratios = ratio_grid();
  std::map<int, std::vector<EmpRow>> rows;
  for (const int z : kZetas) rows[z] = emp_curve(t.with_zeta(z), ratios);
  bool bounded = true;
  int above_ca = 0;
  double spread = 0.0;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    const EmpRow& r = rows[-1][i];
    bounded = bounded && r.eta_star && *r.eta_star > 0.0 && *r.eta_star <= r.eta_carnot;
    if (i > 0 && i + 1 < ratios.size() && r.eta_star && *r.eta_star > r.eta_ca) ++above_ca;
    for (const int z : {0, 1}) {
      const auto& o = rows[z][i].eta_star;
      spread = std::max(spread, (o && r.eta_star) ? std::abs(*o - *r.eta_star) : INFINITY);
    }
  }
  const bool pass = bounded && above_ca > 0 && spread <= 1e-4;
  return {pass, fmt("(a) 0 < eta* <= eta_C: %d; (b) eta* > eta_CA at %d interior points; "
                    "(c) max |eta*(zeta) - eta*(-1)| = %.2e (need <= 1e-4)",
                    bounded, above_ca, spread)};
}

// 9: refrigerator optimization on the 25-point ratio grid
Outcome fridge_optimization() {
  CycleConfig t;
  t.omega_h = 0.5;
  t.hot = {2.0, 0.01, -1};
  t.cold = {1.0, 0.01, -1};
  t.tau_h = 0.2;
  t.tau_c = 0.2;
  const auto ratios = ratio_grid();
  const auto rows = cop_curve(t, ratios);
  bool bounded = true, eco_above = true, above_yan = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const CopRow& r = rows[i];
    bounded = bounded && r.eps_star && *r.eps_star > 0.0 && *r.eps_star <= r.cop_carnot;
    if (i == 0 || i + 1 == rows.size()) continue;
    eco_above = eco_above && r.eps_star && r.eps_eco && *r.eps_eco >= *r.eps_star;
    above_yan = above_yan && r.eps_star && r.eps_eco && *r.eps_star > r.cop_yan &&
                *r.eps_eco > r.cop_yan;
  }
  return {bounded && eco_above && above_yan,
          fmt("0 < eps* <= eps_C: %d; eps_E >= eps* (interior): %d; both > eps_yan (interior): %d",
              bounded, eco_above, above_yan)};
}

// 10: golden-section optimizer against a dense scan
Outcome optimizer_oracle() {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_excess = -INFINITY;
  for (int k = 0; k < 10; ++k) {
    const double lo = -2.0 + 2.0 * u(rng);
    const double hi = lo + 0.5 + 3.0 * u(rng);
    const double c = lo + (0.1 + 0.8 * u(rng)) * (hi - lo);
    const double w = 0.1 + 0.5 * u(rng);
    const double tilt = 0.2 * (u(rng) - 0.5);
    const double amp = 0.05 * u(rng);
    const double freq = 1.0 + 5.0 * u(rng);
    std::function<double(double)> f;
    switch (k % 3) {
      case 0:  // bump on a tilt with a small ripple
        f = [=](double x) {
          return std::exp(-(x - c) * (x - c) / (2 * w * w)) + tilt * x + amp * std::sin(freq * x);
        };
        break;
      case 1:  // skewed: x^a e^{-b x} shape around c
        f = [=](double x) {
          const double y = (x - lo) / (c - lo);
          return y * std::exp(1.0 - y) + 0.1 * amp * std::cos(freq * x);
        };
        break;
      default:  // negative quartic well
        f = [=](double x) {
          const double d = (x - c) / w;
          return -d * d * (1.0 + 0.3 * d * d) + tilt * x;
        };
    }
    const OptimumReport rep = maximize_scalar(f, lo, hi);
    const auto grid = oracle::brute_force_argmax(f, lo, hi, 100000);
    const double allowed = kDefaultGapTol + grid.spacing;
    worst_excess = std::max(worst_excess, std::abs(rep.argmax - grid.argmax) - allowed);
  }
  return {worst_excess <= 0.0,
          fmt("max |argmax - grid argmax| - (tol + spacing) = %.2e over 10 objectives", worst_excess)};
}

// 11: Fourier transform of the pulled-back Wightman function
Outcome fourier_oracle() {
  const BathSpec b{0.1, 0.01, 0};
  constexpr double omega = 0.1;
  const double direct = transition_rate(omega, b);
  // Gamma_eps = Gamma (1 + omega eps + ...): Richardson on eps, eps/2, eps/4
  const double eps = 0.4;
  const double g1 = oracle::fourier_rate(omega, b, eps);
  const double g2 = oracle::fourier_rate(omega, b, eps / 2);
  const double g4 = oracle::fourier_rate(omega, b, eps / 4);
  const double r12 = 2 * g2 - g1;
  const double r24 = 2 * g4 - g2;
  const double extrapolated = (4 * r24 - r12) / 3;
  const double rel = std::abs(extrapolated - direct) / direct;
  return {rel < 0.01, fmt("Fourier %.10f vs image sum %.10f, rel diff %.2e", extrapolated, direct, rel)};
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
  double budget_s;  // runtime limit, 0 = none
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "conical function vs hypergeometric series", special_function, 5.0},
      {2, "detailed balance", detailed_balance, 10.0},
      {3, "kappa identity", kappa_identity, 0.0},
      {4, "rate vs temperature dataset", rate_dataset, 0.0},
      {5, "work asymptote", work_asymptote, 0.0},
      {6, "cooling asymptote", cooling_asymptote, 0.0},
      {7, "first law", first_law, 0.0},
      {8, "engine optimization", engine_optimization, 60.0},
      {9, "refrigerator optimization", fridge_optimization, 0.0},
      {10, "optimizer vs grid scan", optimizer_oracle, 0.0},
      {11, "Fourier oracle", fourier_oracle, 0.0},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"btzotto acceptance checks"};
  std::vector<int> only;
  app.add_option("-c,--criterion", only, "criterion number (repeatable)")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);
  const std::set<int> selected(only.begin(), only.end());

  int failures = 0;
  for (const Criterion& c : criteria()) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0.0 && secs > c.budget_s) {
      o.pass = false;
      o.detail += fmt("; over the %.0f s budget", c.budget_s);
    }
    std::printf("criterion %2d %s  %s: %s [%.2f s]\n", c.id, o.pass ? "PASS" : "FAIL", c.title,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
