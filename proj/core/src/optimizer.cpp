#include "btzotto/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "btzotto/error.hpp"

namespace btzotto {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kFlatSpread = 1e-14;
constexpr double kEdgeFlag = 1e-6;
constexpr int kMaxGoldenIterations = 500;
// The engine window is open at omega_h = omega_c where the cycle degenerates.
constexpr double kWindowShrink = 1e-9;

// Cycle evaluations along one gap with the other isochore's rates held fixed.
// Memoized because the power and ecological searches share their pre-scan.
class GapProblem {
 public:
  enum class Varying { HotGap, ColdGap };

  GapProblem(const CycleConfig& cfg, Varying varying) : cfg_(cfg), varying_(varying) {
    if (varying_ == Varying::HotGap) {
      fixed_ = rate_data(cfg_.omega_c, cfg_.cold);
    } else {
      fixed_ = rate_data(cfg_.omega_h, cfg_.hot);
    }
  }

  const CycleConfig& config_at(double gap) {
    scratch_ = cfg_;
    (varying_ == Varying::HotGap ? scratch_.omega_h : scratch_.omega_c) = gap;
    return scratch_;
  }

  const CycleResult& at(double gap) {
    auto it = memo_.find(gap);
    if (it != memo_.end()) return it->second;
    const CycleConfig& c = config_at(gap);
    CycleRates rates;
    if (varying_ == Varying::HotGap) {
      rates = {rate_data(gap, c.hot), fixed_};
    } else {
      rates = {fixed_, rate_data(gap, c.cold)};
    }
    return memo_.emplace(gap, run_cycle(c, rates)).first->second;
  }

  double tau() const { return cfg_.tau_cycle(); }
  const CycleConfig& base() const { return cfg_; }

 private:
  CycleConfig cfg_;
  CycleConfig scratch_;
  Varying varying_;
  RateData fixed_;
  std::map<double, CycleResult> memo_;
};

void require_running_cycle(const CycleConfig& cfg) {
  if (!(cfg.tau_cycle() > 0.0)) {
    throw RegimeError("optimizer: cycle duration tau_h + tau_c must be > 0");
  }
}

}  // namespace

OptimumReport maximize_scalar(const std::function<double(double)>& f, double lo, double hi,
                              double tol, int prescan) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw DomainError("maximize_scalar: need finite lo < hi");
  }
  if (!(tol > 0.0)) throw DomainError("maximize_scalar: tol must be > 0");
  if (prescan < 3) throw DomainError("maximize_scalar: pre-scan needs at least 3 points");

  OptimumReport rep;
  rep.bracket_lo = lo;
  rep.bracket_hi = hi;

  auto eval = [&](double x) {
    const double v = f(x);
    ++rep.evaluations;
    if (!std::isfinite(v)) {
      throw DomainError("maximize_scalar: objective is not finite at x = " + std::to_string(x));
    }
    return v;
  };

  std::vector<double> xs(prescan);
  std::vector<double> fs(prescan);
  for (int i = 0; i < prescan; ++i) {
    xs[i] = i == prescan - 1 ? hi : lo + (hi - lo) * i / (prescan - 1);
    fs[i] = eval(xs[i]);
  }
  const auto [min_it, max_it] = std::minmax_element(fs.begin(), fs.end());
  if (*max_it - *min_it < kFlatSpread) {
    throw FlatObjectiveError("maximize_scalar: objective is flat on [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]");
  }
  const auto best = static_cast<int>(std::distance(fs.begin(), max_it));
  double best_x = xs[best];
  double best_f = fs[best];

  double a = xs[std::max(best - 1, 0)];
  double b = xs[std::min(best + 1, prescan - 1)];
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > tol && rep.iterations < kMaxGoldenIterations) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
    ++rep.iterations;
  }
  for (const auto& [x, v] : {std::pair{c, fc}, std::pair{d, fd}}) {
    if (v > best_f) {
      best_f = v;
      best_x = x;
    }
  }

  rep.argmax = best_x;
  rep.objective_value = best_f;
  rep.near_edge = best_x - lo < kEdgeFlag || hi - best_x < kEdgeFlag;
  return rep;
}

EngineOptimum optimize_engine(const CycleConfig& cfg, const OptimizerSettings& settings) {
  const auto window = engine_window(cfg.omega_c, cfg.t_hot(), cfg.t_cold());
  if (!window) throw RegimeError("optimize_engine: empty engine window (need T_c < T_h)");
  require_running_cycle(cfg);
  CycleConfig base = cfg;
  base.omega_h = window->second;  // any valid gap; replaced per evaluation
  base.validate();

  GapProblem problem(base, GapProblem::Varying::HotGap);
  const double tau = problem.tau();
  const double tc = cfg.t_cold();
  const double lo = window->first * (1.0 + kWindowShrink);
  const double hi = window->second;

  EngineOptimum out;
  out.bounds = reference_bounds(cfg.t_hot(), tc);
  out.power = maximize_scalar([&](double wh) { return problem.at(wh).w_tot / tau; }, lo, hi,
                              settings.tol, settings.prescan);
  out.ecological = maximize_scalar(
      [&](double wh) {
        const CycleResult& r = problem.at(wh);
        return (r.w_tot - tc * r.entropy_per_cycle) / tau;
      },
      lo, hi, settings.tol, settings.prescan);
  out.power.efficiency_or_cop_at_opt = 1.0 - cfg.omega_c / out.power.argmax;
  out.ecological.efficiency_or_cop_at_opt = 1.0 - cfg.omega_c / out.ecological.argmax;
  return out;
}

FridgeOptimum optimize_fridge(const CycleConfig& cfg, const OptimizerSettings& settings) {
  const auto window = fridge_window(cfg.omega_h, cfg.t_hot(), cfg.t_cold());
  if (!window || !(window->second > kFridgeGapFloor)) {
    throw RegimeError("optimize_fridge: empty refrigerator window");
  }
  require_running_cycle(cfg);
  CycleConfig base = cfg;
  base.omega_c = window->second;
  base.validate();

  GapProblem problem(base, GapProblem::Varying::ColdGap);
  const double tau = problem.tau();
  const double wh = cfg.omega_h;
  const double lo = kFridgeGapFloor;
  const double hi = window->second;

  FridgeOptimum out;
  out.bounds = reference_bounds(cfg.t_hot(), cfg.t_cold());
  const double carnot_weight = out.bounds.cop_carnot * cfg.t_hot();
  out.chi = maximize_scalar(
      [&](double wc) {
        const CycleResult& r = problem.at(wc);
        return wc / (wh - wc) * r.qc / tau;
      },
      lo, hi, settings.tol, settings.prescan);
  out.ecological = maximize_scalar(
      [&](double wc) {
        const CycleResult& r = problem.at(wc);
        return (r.qc - carnot_weight * r.entropy_per_cycle) / tau;
      },
      lo, hi, settings.tol, settings.prescan);
  out.chi.efficiency_or_cop_at_opt = out.chi.argmax / (wh - out.chi.argmax);
  out.ecological.efficiency_or_cop_at_opt =
      out.ecological.argmax / (wh - out.ecological.argmax);
  return out;
}

std::vector<EmpRow> emp_curve(const CycleConfig& tmpl, std::span<const double> ratios,
                              const OptimizerSettings& settings) {
  std::vector<EmpRow> rows;
  rows.reserve(ratios.size());
  const double th = tmpl.t_hot();
  for (const double ratio : ratios) {
    EmpRow row;
    row.ratio = ratio;
    row.eta_carnot = kNaN;
    row.eta_ca = kNaN;
    if (ratio > 0.0 && ratio < 1.0) {
      const ReferenceBounds b = reference_bounds(th, ratio * th);
      row.eta_carnot = b.eta_carnot;
      row.eta_ca = b.eta_ca;
      CycleConfig cfg = tmpl;
      cfg.cold.temperature = ratio * th;
      try {
        const EngineOptimum opt = optimize_engine(cfg, settings);
        row.eta_star = opt.power.efficiency_or_cop_at_opt;
        row.eta_eco = opt.ecological.efficiency_or_cop_at_opt;
      } catch (const RegimeError&) {
      } catch (const FlatObjectiveError&) {
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<CopRow> cop_curve(const CycleConfig& tmpl, std::span<const double> ratios,
                              const OptimizerSettings& settings) {
  std::vector<CopRow> rows;
  rows.reserve(ratios.size());
  const double th = tmpl.t_hot();
  for (const double ratio : ratios) {
    CopRow row;
    row.ratio = ratio;
    row.cop_carnot = kNaN;
    row.cop_yan = kNaN;
    if (ratio > 0.0 && ratio < 1.0) {
      const ReferenceBounds b = reference_bounds(th, ratio * th);
      row.cop_carnot = b.cop_carnot;
      row.cop_yan = b.cop_yan;
      CycleConfig cfg = tmpl;
      cfg.cold.temperature = ratio * th;
      try {
        const FridgeOptimum opt = optimize_fridge(cfg, settings);
        row.eps_star = opt.chi.efficiency_or_cop_at_opt;
        row.eps_eco = opt.ecological.efficiency_or_cop_at_opt;
      } catch (const RegimeError&) {
      } catch (const FlatObjectiveError&) {
      }
    }
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------

std::string to_string(SweepKind k) {
  switch (k) {
    case SweepKind::RateVsT: return "rate_vs_T";
    case SweepKind::WorkVsTauH: return "work_vs_tau_h";
    case SweepKind::CoolPowerVsTauC: return "coolpower_vs_tau_c";
    case SweepKind::EmpVsRatio: return "emp_vs_ratio";
    case SweepKind::CopVsRatio: return "cop_vs_ratio";
    case SweepKind::CustomGrid: return "custom_grid";
  }
  return "unknown";
}

SweepKind sweep_kind_from_string(const std::string& s) {
  for (const SweepKind k : {SweepKind::RateVsT, SweepKind::WorkVsTauH, SweepKind::CoolPowerVsTauC,
                            SweepKind::EmpVsRatio, SweepKind::CopVsRatio, SweepKind::CustomGrid}) {
    if (to_string(k) == s) return k;
  }
  throw DomainError("kind: unknown sweep kind '" + s + "'");
}

void Grid::validate() const {
  if (count < 2) throw DomainError("grid: count must be >= 2");
  if (!std::isfinite(start) || !std::isfinite(stop) || !(start < stop)) {
    throw DomainError("grid: need finite start < stop");
  }
}

std::vector<double> Grid::points() const {
  validate();
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = i == count - 1 ? stop : start + (stop - start) * i / (count - 1);
  }
  return out;
}

namespace {

const std::vector<std::string>& custom_variables() {
  static const std::vector<std::string> vars{"omega_h", "omega_c", "tau_h", "tau_c", "Th", "Tc"};
  return vars;
}

std::string zeta_column(const std::string& metric, int zeta) {
  return metric + "_zeta" + std::to_string(zeta);
}

void set_variable(CycleConfig& cfg, const std::string& var, double v) {
  if (var == "omega_h") cfg.omega_h = v;
  else if (var == "omega_c") cfg.omega_c = v;
  else if (var == "tau_h") cfg.tau_h = v;
  else if (var == "tau_c") cfg.tau_c = v;
  else if (var == "Th") cfg.hot.temperature = v;
  else if (var == "Tc") cfg.cold.temperature = v;
  else throw DomainError("variable: unknown sweep variable '" + var + "'");
}

double value_or_nan(const std::optional<double>& v) { return v ? *v : kNaN; }

}  // namespace

void SweepSpec::validate() const {
  grid.validate();
  if (zeta_list.empty()) throw DomainError("zeta_list: must name at least one boundary condition");
  for (const int z : zeta_list) {
    if (z < -1 || z > 1) throw DomainError("zeta_list: entries must be -1, 0 or 1");
  }
  if (kind == SweepKind::CustomGrid &&
      std::find(custom_variables().begin(), custom_variables().end(), variable) ==
          custom_variables().end()) {
    throw DomainError("variable: unknown sweep variable '" + variable + "'");
  }
  if (kind == SweepKind::RateVsT) {
    if (!(omega > 0.0)) throw DomainError("omega: must be > 0");
    cycle.hot.with_temperature(1.0).validate();
  } else if (kind == SweepKind::EmpVsRatio || kind == SweepKind::CopVsRatio) {
    if (!(grid.start > 0.0) || !(grid.stop < 1.0)) {
      throw DomainError("grid: temperature ratios must lie in (0, 1)");
    }
  } else if (kind != SweepKind::CustomGrid) {
    cycle.validate();
    if (!(grid.start >= 0.0)) throw DomainError("grid: stroke durations must be >= 0");
  }
}

Dataset run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> xs = spec.grid.points();
  Dataset ds;
  ds.rows.assign(xs.size(), {});
  for (std::size_t i = 0; i < xs.size(); ++i) ds.rows[i].push_back(xs[i]);

  switch (spec.kind) {
    case SweepKind::RateVsT: {
      ds.columns.push_back("T");
      for (const int z : spec.zeta_list) {
        ds.columns.push_back(zeta_column("rate", z));
        const BathSpec base = spec.cycle.hot.with_zeta(z);
        for (std::size_t i = 0; i < xs.size(); ++i) {
          ds.rows[i].push_back(transition_rate(spec.omega, base.with_temperature(xs[i])));
        }
      }
      break;
    }
    case SweepKind::WorkVsTauH:
    case SweepKind::CoolPowerVsTauC: {
      const bool work = spec.kind == SweepKind::WorkVsTauH;
      ds.columns.push_back(work ? "tau_h" : "tau_c");
      for (const int z : spec.zeta_list) {
        ds.columns.push_back(zeta_column(work ? "w_tot" : "qc", z));
        CycleConfig cfg = spec.cycle.with_zeta(z);
        const CycleRates rates = cycle_rates(cfg);
        for (std::size_t i = 0; i < xs.size(); ++i) {
          (work ? cfg.tau_h : cfg.tau_c) = xs[i];
          const CycleResult r = run_cycle(cfg, rates);
          ds.rows[i].push_back(work ? r.w_tot : r.qc);
        }
      }
      break;
    }
    case SweepKind::EmpVsRatio: {
      ds.columns.push_back("ratio");
      for (const int z : spec.zeta_list) {
        ds.columns.push_back(zeta_column("eta_star", z));
        ds.columns.push_back(zeta_column("eta_eco", z));
        const auto rows = emp_curve(spec.cycle.with_zeta(z), xs, spec.optimizer);
        for (std::size_t i = 0; i < xs.size(); ++i) {
          ds.rows[i].push_back(value_or_nan(rows[i].eta_star));
          ds.rows[i].push_back(value_or_nan(rows[i].eta_eco));
        }
      }
      ds.columns.push_back("eta_C");
      ds.columns.push_back("eta_CA");
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const ReferenceBounds b = reference_bounds(1.0, xs[i]);
        ds.rows[i].push_back(b.eta_carnot);
        ds.rows[i].push_back(b.eta_ca);
      }
      break;
    }
    case SweepKind::CopVsRatio: {
      ds.columns.push_back("ratio");
      for (const int z : spec.zeta_list) {
        ds.columns.push_back(zeta_column("eps_star", z));
        ds.columns.push_back(zeta_column("eps_eco", z));
        const auto rows = cop_curve(spec.cycle.with_zeta(z), xs, spec.optimizer);
        for (std::size_t i = 0; i < xs.size(); ++i) {
          ds.rows[i].push_back(value_or_nan(rows[i].eps_star));
          ds.rows[i].push_back(value_or_nan(rows[i].eps_eco));
        }
      }
      ds.columns.push_back("eps_C");
      ds.columns.push_back("eps_yan");
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const ReferenceBounds b = reference_bounds(1.0, xs[i]);
        ds.rows[i].push_back(b.cop_carnot);
        ds.rows[i].push_back(b.cop_yan);
      }
      break;
    }
    case SweepKind::CustomGrid: {
      ds.columns.push_back(spec.variable);
      for (const int z : spec.zeta_list) {
        for (const char* m : {"w1", "qh", "w3", "qc", "w_tot"}) ds.columns.push_back(zeta_column(m, z));
        for (std::size_t i = 0; i < xs.size(); ++i) {
          CycleConfig cfg = spec.cycle.with_zeta(z);
          set_variable(cfg, spec.variable, xs[i]);
          const CycleResult r = run_cycle(cfg);
          for (const double v : {r.w1, r.qh, r.w3, r.qc, r.w_tot}) ds.rows[i].push_back(v);
        }
      }
      break;
    }
  }
  return ds;
}

}  // namespace btzotto
