#pragma once

#include "btzotto/btz_response.hpp"

namespace btzotto {

/// Detector state rho = (I + r . sigma) / 2.
struct BlochVector {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;

  [[nodiscard]] double norm() const;
  /// True when |r| <= 1 + 1e-12.
  [[nodiscard]] bool is_physical() const;
};

/// Isochore duration in units of lambda^{-2}.
struct StrokeClock {
  double tau = 0.0;
};

/// Closed-form GKSL evolution for a stroke of length tau at fixed gap omega.
/// Populations relax as r3 -> e^{-gamma tau} r3 + kappa (1 - e^{-gamma tau});
/// the coherence r1 + i r2 rotates at omega while decaying at gamma / 2.
[[nodiscard]] BlochVector evolve_bloch(const BlochVector& r0, const RateData& rates,
                                       StrokeClock clock, double omega);

/// Population relaxation alone (the r3 component of evolve_bloch).
[[nodiscard]] double relax_population(double r3, const RateData& rates, double tau);

/// Gibbs state (0, 0, -tanh(omega / 2T)) the detector relaxes to.
[[nodiscard]] BlochVector asymptotic_state(double omega, double temperature);

}  // namespace btzotto
