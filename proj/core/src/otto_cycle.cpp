#include "btzotto/otto_cycle.hpp"

#include <cmath>

#include "btzotto/error.hpp"
#include "btzotto/qubit_dynamics.hpp"

namespace btzotto {

std::string to_string(EntropyConvention c) {
  return c == EntropyConvention::Standard ? "standard" : "paper";
}

EntropyConvention entropy_convention_from_string(const std::string& s) {
  if (s == "standard") return EntropyConvention::Standard;
  if (s == "paper") return EntropyConvention::Paper;
  throw DomainError("entropy_convention: expected 'standard' or 'paper', got '" + s + "'");
}

void CycleConfig::validate() const {
  if (!(omega_c > 0.0) || !std::isfinite(omega_c)) throw DomainError("omega_c: must be > 0");
  if (!(omega_h > omega_c) || !std::isfinite(omega_h)) {
    throw DomainError("omega_h: must exceed omega_c");
  }
  hot.validate();
  cold.validate();
  if (!(cold.temperature < hot.temperature)) throw DomainError("Tc: must be below Th");
  if (!(tau_h >= 0.0) || !std::isfinite(tau_h)) throw DomainError("tau_h: must be >= 0");
  if (!(tau_c >= 0.0) || !std::isfinite(tau_c)) throw DomainError("tau_c: must be >= 0");
}

CycleConfig CycleConfig::with_zeta(int zeta) const {
  CycleConfig out = *this;
  out.hot.zeta = zeta;
  out.cold.zeta = zeta;
  return out;
}

CycleRates cycle_rates(const CycleConfig& cfg) {
  cfg.validate();
  return {rate_data(cfg.omega_h, cfg.hot), rate_data(cfg.omega_c, cfg.cold)};
}

double cycle_entropy(const CycleResult& res, const CycleConfig& cfg) {
  const double bh = 1.0 / cfg.t_hot();
  const double bc = 1.0 / cfg.t_cold();
  if (cfg.entropy_convention == EntropyConvention::Standard) {
    return -(bh * res.qh + bc * res.qc);
  }
  return bc * res.qc - bh * res.qh;
}

CycleResult run_cycle(const CycleConfig& cfg) { return run_cycle(cfg, cycle_rates(cfg)); }

CycleResult run_cycle(const CycleConfig& cfg, const CycleRates& rates) {
  cfg.validate();
  const double wh = cfg.omega_h;
  const double wc = cfg.omega_c;

  CycleResult res;
  res.r3_initial = asymptotic_state(wc, cfg.t_cold()).r3;

  // (1) adiabatic expansion: populations frozen, gap omega_c -> omega_h
  res.w1 = 0.5 * (wh - wc) * res.r3_initial;
  // (2) hot isochore at gap omega_h
  res.r3_hot = relax_population(res.r3_initial, rates.hot, cfg.tau_h);
  res.qh = 0.5 * wh * (res.r3_hot - res.r3_initial);
  // (3) adiabatic compression back to omega_c
  res.w3 = 0.5 * (wc - wh) * res.r3_hot;
  // (4) cold isochore at gap omega_c
  res.r3_final = relax_population(res.r3_hot, rates.cold, cfg.tau_c);
  res.qc = 0.5 * wc * (res.r3_final - res.r3_hot);

  res.w_tot = -(res.w1 + res.w3);
  res.delta_u = 0.5 * wc * (res.r3_final - res.r3_initial);
  res.closure_defect = std::abs(res.r3_final - res.r3_initial);
  res.entropy_per_cycle = cycle_entropy(res, cfg);

  if (cfg.tau_cycle() > 0.0) {
    if (res.w_tot > 0.0) res.engine = engine_metrics(res, cfg);
    if (res.qc > 0.0) res.fridge = fridge_metrics(res, cfg);
  }
  return res;
}

EngineMetrics engine_metrics(const CycleResult& res, const CycleConfig& cfg) {
  if (!(res.w_tot > 0.0)) {
    throw RegimeError("engine_metrics: no work extracted (W_tot = " + std::to_string(res.w_tot) +
                      "); the cycle is not running as an engine");
  }
  const double tau = cfg.tau_cycle();
  if (!(tau > 0.0)) throw RegimeError("engine_metrics: zero cycle duration");
  EngineMetrics m;
  m.efficiency = 1.0 - cfg.omega_c / cfg.omega_h;
  m.finite_time_efficiency = res.qh != 0.0 ? res.w_tot / res.qh : 0.0;
  m.power = res.w_tot / tau;
  m.entropy_rate = cycle_entropy(res, cfg) / tau;
  m.ecological = m.power - cfg.t_cold() * m.entropy_rate;
  return m;
}

FridgeMetrics fridge_metrics(const CycleResult& res, const CycleConfig& cfg) {
  if (res.qc < 0.0) {
    throw RegimeError("fridge_metrics: heat flows into the cold bath (Q_c = " +
                      std::to_string(res.qc) + "); the cycle is not refrigerating");
  }
  const double tau = cfg.tau_cycle();
  if (!(tau > 0.0)) throw RegimeError("fridge_metrics: zero cycle duration");
  const ReferenceBounds bounds = reference_bounds(cfg.t_hot(), cfg.t_cold());
  FridgeMetrics m;
  m.cop = cfg.omega_c / (cfg.omega_h - cfg.omega_c);
  m.cooling_power = res.qc / tau;
  m.chi = m.cop * res.qc / tau;
  m.ecological_fridge =
      (res.qc - bounds.cop_carnot * cfg.t_hot() * cycle_entropy(res, cfg)) / tau;
  return m;
}

ReferenceBounds reference_bounds(double t_hot, double t_cold) {
  if (!(t_cold > 0.0)) throw DomainError("reference_bounds: T_c must be > 0");
  if (!(t_cold < t_hot)) throw DomainError("reference_bounds: need T_c < T_h");
  ReferenceBounds b;
  b.eta_carnot = (t_hot - t_cold) / t_hot;
  b.eta_ca = 1.0 - std::sqrt(t_cold / t_hot);
  b.cop_carnot = t_cold / (t_hot - t_cold);
  b.cop_yan = std::sqrt(1.0 + b.cop_carnot) - 1.0;
  return b;
}

std::optional<std::pair<double, double>> engine_window(double omega_c, double t_hot,
                                                       double t_cold) {
  if (!(omega_c > 0.0) || !(t_cold > 0.0) || !(t_cold < t_hot)) return std::nullopt;
  return std::pair{omega_c, omega_c * t_hot / t_cold};
}

std::optional<std::pair<double, double>> fridge_window(double omega_h, double t_hot,
                                                       double t_cold) {
  if (!(omega_h > 0.0) || !(t_cold > 0.0) || !(t_cold < t_hot)) return std::nullopt;
  return std::pair{0.0, omega_h * t_cold / t_hot};
}

}  // namespace btzotto
