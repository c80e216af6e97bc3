#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "btzotto/otto_cycle.hpp"

namespace btzotto {

inline constexpr double kDefaultGapTol = 1e-8;
inline constexpr int kDefaultPrescanPoints = 64;
/// Lower end of the refrigerator search window, which is open at omega_c = 0.
inline constexpr double kFridgeGapFloor = 1e-6;

struct OptimumReport {
  double argmax = 0.0;
  double objective_value = 0.0;
  /// Filled by the cycle-level optimizers: efficiency 1 - omega_c / omega_h
  /// (engine) or COP omega_c / (omega_h - omega_c) (refrigerator) at argmax.
  std::optional<double> efficiency_or_cop_at_opt;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool near_edge = false;  ///< argmax within 1e-6 of a bracket end
};

/// Bounded 1-D maximization: a uniform pre-scan of `prescan` points over
/// [lo, hi] picks the best sample, then golden-section search narrows the
/// bracket formed by its two neighbours to width <= tol.
///
/// Throws DomainError for an empty bracket or non-finite objective values,
/// FlatObjectiveError when the pre-scan spread is below 1e-14.
[[nodiscard]] OptimumReport maximize_scalar(const std::function<double(double)>& f, double lo,
                                            double hi, double tol = kDefaultGapTol,
                                            int prescan = kDefaultPrescanPoints);

struct OptimizerSettings {
  double tol = kDefaultGapTol;
  int prescan = kDefaultPrescanPoints;
};

/// Engine optimum over omega_h at the configuration's temperatures; cfg.omega_h
/// is ignored. `power` maximizes P, `ecological` maximizes E = P - T_c S.
struct EngineOptimum {
  OptimumReport power;
  OptimumReport ecological;
  ReferenceBounds bounds;
};

/// Refrigerator optimum over omega_c; cfg.omega_c is ignored. `chi` maximizes
/// the figure of merit, `ecological` the refrigerator ecological function.
struct FridgeOptimum {
  OptimumReport chi;
  OptimumReport ecological;
  ReferenceBounds bounds;
};

/// RegimeError when the engine window (omega_c, omega_c T_h / T_c) is empty.
[[nodiscard]] EngineOptimum optimize_engine(const CycleConfig& cfg,
                                            const OptimizerSettings& settings = {});
/// RegimeError when the refrigerator window is empty.
[[nodiscard]] FridgeOptimum optimize_fridge(const CycleConfig& cfg,
                                            const OptimizerSettings& settings = {});

struct EmpRow {
  double ratio = 0.0;  ///< T_c / T_h
  std::optional<double> eta_star;
  std::optional<double> eta_eco;
  double eta_carnot = 0.0;
  double eta_ca = 0.0;
};

struct CopRow {
  double ratio = 0.0;
  std::optional<double> eps_star;
  std::optional<double> eps_eco;
  double cop_carnot = 0.0;
  double cop_yan = 0.0;
};

/// Efficiency at maximum power and at maximum ecological function along a
/// grid of T_c / T_h, holding T_h = tmpl.hot.temperature. Rows whose window
/// is empty or whose optimization fails keep absent values.
[[nodiscard]] std::vector<EmpRow> emp_curve(const CycleConfig& tmpl,
                                            std::span<const double> ratios,
                                            const OptimizerSettings& settings = {});
/// COP at maximum figure of merit and at maximum ecological function.
[[nodiscard]] std::vector<CopRow> cop_curve(const CycleConfig& tmpl,
                                            std::span<const double> ratios,
                                            const OptimizerSettings& settings = {});

// ---------------------------------------------------------------------------
// Sweeps

enum class SweepKind {
  RateVsT,
  WorkVsTauH,
  CoolPowerVsTauC,
  EmpVsRatio,
  CopVsRatio,
  CustomGrid,
};

[[nodiscard]] std::string to_string(SweepKind k);
[[nodiscard]] SweepKind sweep_kind_from_string(const std::string& s);

/// Inclusive linear grid.
struct Grid {
  double start = 0.0;
  double stop = 1.0;
  int count = 2;

  void validate() const;  ///< DomainError unless count >= 2 and start < stop
  [[nodiscard]] std::vector<double> points() const;
};

struct SweepSpec {
  SweepKind kind = SweepKind::RateVsT;
  /// Template for cycle sweeps; for rate_vs_T the hot bath supplies mass,
  /// truncation controls and nothing else.
  CycleConfig cycle;
  double omega = 0.1;  ///< gap for rate_vs_T
  Grid grid;
  std::vector<int> zeta_list{-1, 0, 1};
  /// custom_grid only: one of omega_h, omega_c, tau_h, tau_c, Th, Tc.
  std::string variable = "tau_h";
  OptimizerSettings optimizer;

  void validate() const;
};

/// Column-oriented result of a sweep; absent values are NaN.
struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

[[nodiscard]] Dataset run_sweep(const SweepSpec& spec);

}  // namespace btzotto
