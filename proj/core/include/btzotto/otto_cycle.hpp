#pragma once

#include <optional>
#include <string>
#include <utility>

#include "btzotto/btz_response.hpp"

namespace btzotto {

/// How the per-cycle entropy change S entering the ecological functions is formed.
enum class EntropyConvention {
  /// Entropy production sigma = -(Q_h / T_h + Q_c / T_c), nonnegative for a closed cycle.
  Standard,
  /// S = Q_c / T_c - Q_h / T_h, sign as printed in the source formulas.
  Paper,
};

[[nodiscard]] std::string to_string(EntropyConvention c);
[[nodiscard]] EntropyConvention entropy_convention_from_string(const std::string& s);

/// Four-stroke Otto protocol. The hot and cold baths carry their own KMS
/// temperature; mass, boundary condition and truncation are per bath.
struct CycleConfig {
  double omega_c = 0.1;
  double omega_h = 1.0;
  BathSpec hot{2.0};
  BathSpec cold{0.1};
  double tau_h = 1.0;
  double tau_c = 1.0;
  EntropyConvention entropy_convention = EntropyConvention::Standard;

  /// DomainError unless 0 < omega_c < omega_h, 0 < T_c < T_h, tau_h, tau_c >= 0.
  void validate() const;

  [[nodiscard]] double t_hot() const { return hot.temperature; }
  [[nodiscard]] double t_cold() const { return cold.temperature; }
  [[nodiscard]] double tau_cycle() const { return tau_h + tau_c; }
  /// Same configuration with both baths switched to boundary condition zeta.
  [[nodiscard]] CycleConfig with_zeta(int zeta) const;
};

/// Rates on the two isochores: hot bath at gap omega_h, cold bath at omega_c.
struct CycleRates {
  RateData hot;
  RateData cold;
};

[[nodiscard]] CycleRates cycle_rates(const CycleConfig& cfg);

struct EngineMetrics {
  double efficiency = 0.0;              ///< 1 - omega_c / omega_h
  double finite_time_efficiency = 0.0;  ///< -(W1 + W3) / Q_h of this very cycle
  double power = 0.0;                   ///< W_tot / tau_cycle
  double entropy_rate = 0.0;            ///< S / tau_cycle under the configured convention
  double ecological = 0.0;              ///< power - T_c * entropy_rate
};

struct FridgeMetrics {
  double cop = 0.0;                ///< omega_c / (omega_h - omega_c)
  double cooling_power = 0.0;      ///< Q_c / tau_cycle
  double chi = 0.0;                ///< cop * Q_c / tau_cycle
  double ecological_fridge = 0.0;  ///< (Q_c - eps_C T_h S) / tau_cycle
};

struct CycleResult {
  double w1 = 0.0;
  double qh = 0.0;
  double w3 = 0.0;
  double qc = 0.0;
  double w_tot = 0.0;  ///< extracted work -(w1 + w3)
  double r3_initial = 0.0;
  double r3_hot = 0.0;    ///< after the hot isochore
  double r3_final = 0.0;  ///< after the cold isochore
  double delta_u = 0.0;   ///< (omega_c / 2)(r3_final - r3_initial)
  double closure_defect = 0.0;
  double entropy_per_cycle = 0.0;  ///< S under the configured convention
  std::optional<EngineMetrics> engine;  ///< set when w_tot > 0
  std::optional<FridgeMetrics> fridge;  ///< set when qc >= 0 and the cycle ran
};

/// One cycle starting from the cold Gibbs state at (omega_c, T_c).
[[nodiscard]] CycleResult run_cycle(const CycleConfig& cfg);
/// Same, with the isochore rates supplied by the caller.
[[nodiscard]] CycleResult run_cycle(const CycleConfig& cfg, const CycleRates& rates);

/// Per-cycle entropy change under cfg's convention.
[[nodiscard]] double cycle_entropy(const CycleResult& res, const CycleConfig& cfg);

/// RegimeError when res.w_tot <= 0.
[[nodiscard]] EngineMetrics engine_metrics(const CycleResult& res, const CycleConfig& cfg);
/// RegimeError when res.qc < 0.
[[nodiscard]] FridgeMetrics fridge_metrics(const CycleResult& res, const CycleConfig& cfg);

struct ReferenceBounds {
  double eta_carnot = 0.0;
  double eta_ca = 0.0;      ///< Curzon-Ahlborn 1 - sqrt(T_c / T_h)
  double cop_carnot = 0.0;  ///< T_c / (T_h - T_c)
  double cop_yan = 0.0;     ///< sqrt(1 + cop_carnot) - 1
};

[[nodiscard]] ReferenceBounds reference_bounds(double t_hot, double t_cold);

/// Open gap interval on which the asymptotic cycle is an engine:
/// omega_h in (omega_c, omega_c T_h / T_c). Empty (nullopt) when T_c >= T_h.
[[nodiscard]] std::optional<std::pair<double, double>> engine_window(double omega_c,
                                                                     double t_hot,
                                                                     double t_cold);
/// Refrigerator window omega_c in (0, omega_h T_c / T_h); nullopt when T_c >= T_h.
[[nodiscard]] std::optional<std::pair<double, double>> fridge_window(double omega_h,
                                                                     double t_hot,
                                                                     double t_cold);

}  // namespace btzotto
