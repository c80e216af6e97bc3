#include "btzotto/qubit_dynamics.hpp"

#include <cmath>

#include "btzotto/error.hpp"

namespace btzotto {

double BlochVector::norm() const { return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3); }

bool BlochVector::is_physical() const { return r1 * r1 + r2 * r2 + r3 * r3 <= 1.0 + 1e-12; }

double relax_population(double r3, const RateData& rates, double tau) {
  if (!(tau >= 0.0)) throw DomainError("stroke duration tau must be >= 0");
  if (!(rates.gamma > 0.0)) throw DomainError("decay rate gamma must be > 0");
  const double decay = std::exp(-rates.gamma * tau);
  const double filled = -std::expm1(-rates.gamma * tau);  // 1 - decay, exact near tau = 0
  return decay * r3 + rates.kappa * filled;
}

BlochVector evolve_bloch(const BlochVector& r0, const RateData& rates, StrokeClock clock,
                         double omega) {
  const double tau = clock.tau;
  BlochVector out;
  out.r3 = relax_population(r0.r3, rates, tau);
  const double damp = std::exp(-0.5 * rates.gamma * tau);
  const double c = std::cos(omega * tau);
  const double s = std::sin(omega * tau);
  // d(r1 + i r2)/dtau = i omega (r1 + i r2) for H = omega sigma_3 / 2.
  out.r1 = damp * (r0.r1 * c - r0.r2 * s);
  out.r2 = damp * (r0.r2 * c + r0.r1 * s);
  return out;
}

BlochVector asymptotic_state(double omega, double temperature) {
  if (!(omega > 0.0)) throw DomainError("asymptotic_state: omega must be > 0");
  if (!(temperature > 0.0)) throw DomainError("asymptotic_state: temperature must be > 0");
  return {0.0, 0.0, -std::tanh(0.5 * omega / temperature)};
}

}  // namespace btzotto
