#include "btzotto/btz_response.hpp"

#include <cmath>
#include <numbers>

#include "btzotto/error.hpp"
#include "btzotto/specfun.hpp"

namespace btzotto {
namespace {

using std::numbers::pi;

constexpr double kTwoPi = 2.0 * pi;

// 1 / (e^x + 1) without overflow for large |x|.
double fermi(double x) {
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

double four_pi2_t2(double temperature) { return kTwoPi * kTwoPi * temperature * temperature; }

}  // namespace

std::string to_string(Boundary b) {
  switch (b) {
    case Boundary::Neumann: return "Neumann";
    case Boundary::Transparent: return "transparent";
    case Boundary::Dirichlet: return "Dirichlet";
  }
  return "unknown";
}

Boundary boundary_from_zeta(int zeta) {
  if (zeta < -1 || zeta > 1) {
    throw DomainError("zeta must be -1, 0 or 1 (got " + std::to_string(zeta) + ")");
  }
  return static_cast<Boundary>(zeta);
}

void BathSpec::validate() const {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw DomainError("temperature: must be a positive finite number");
  }
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw DomainError("mass: must be a positive finite number");
  }
  if (zeta < -1 || zeta > 1) throw DomainError("zeta: must be -1, 0 or 1");
  if (n_max < 0) throw DomainError("n_max: must be >= 0");
  if (!(term_tol > 0.0)) throw DomainError("term_tol: must be > 0");
}

double kms_temperature(double r, double mass) {
  if (!(mass > 0.0)) throw DomainError("kms_temperature: mass must be > 0");
  const double rh = std::sqrt(mass);
  if (!(r > rh)) {
    throw DomainError("kms_temperature: radius must lie outside the horizon r_H = sqrt(M)");
  }
  // r^2 - r_H^2 factored to keep digits just outside the horizon.
  return rh / (kTwoPi * std::sqrt((r - rh) * (r + rh)));
}

double cosh_alpha(int n, double temperature, double mass, ImageSign sign) {
  const double c = four_pi2_t2(temperature);
  const double ch = std::cosh(kTwoPi * n * std::sqrt(mass));
  return sign == ImageSign::Minus ? (1.0 + c) * ch - c : (1.0 + c) * ch + c;
}

double alpha_image(int n, double temperature, double mass, ImageSign sign) {
  const double c = four_pi2_t2(temperature);
  const double a = kTwoPi * std::abs(n) * std::sqrt(mass);
  if (a > 40.0) {
    // cosh(alpha) ~ (1 + c) e^a / 2; corrections are below double resolution.
    return a + std::log1p(c);
  }
  const double sh = std::sinh(0.5 * a);
  double xm1 = 2.0 * (1.0 + c) * sh * sh;  // cosh(alpha^-) - 1
  if (sign == ImageSign::Plus) xm1 += 2.0 * c;
  return std::log1p(xm1 + std::sqrt(xm1 * (xm1 + 2.0)));
}

ImageSum legendre_image_sum(double omega, const BathSpec& bath) {
  bath.validate();
  const double t = bath.temperature;
  const double m = bath.mass;
  const double zeta = bath.zeta;
  const double xi = std::abs(omega) / (kTwoPi * t);
  const double tol = specfun::kDefaultConicalTol;

  auto pair_term = [&](int n) {
    const double pm = specfun::conical_p_alpha(xi, alpha_image(n, t, m, ImageSign::Minus), tol);
    if (zeta == 0.0) return pm;
    const double pp = specfun::conical_p_alpha(xi, alpha_image(n, t, m, ImageSign::Plus), tol);
    return pm - zeta * pp;
  };

  ImageSum out;
  out.value = pair_term(0);
  out.truncated = bath.n_max == 0;
  for (int n = 1; n <= bath.n_max; ++n) {
    // |P_{-1/2+i xi}| <= P_{-1/2} and P decreases in its argument, so this
    // bounds the +n and -n contributions together.
    const double envelope = 2.0 * (1.0 + std::abs(zeta)) *
                            specfun::conical_p_envelope_alpha(alpha_image(n, t, m, ImageSign::Minus));
    if (envelope < bath.term_tol) {
      out.truncated = false;
      return out;
    }
    out.value += 2.0 * pair_term(n);
    out.terms = n;
    out.truncated = true;
  }
  return out;
}

double transition_rate(double omega, const BathSpec& bath) {
  if (omega == 0.0 || !std::isfinite(omega)) {
    throw DomainError("transition_rate: omega must be finite and nonzero");
  }
  const ImageSum sum = legendre_image_sum(omega, bath);
  return 0.5 * fermi(omega / bath.temperature) * sum.value;
}

RateData rate_data(double omega, const BathSpec& bath) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("rate_data: gap omega must be positive and finite");
  }
  const ImageSum sum = legendre_image_sum(omega, bath);
  const double x = omega / bath.temperature;
  RateData r;
  r.gamma_plus = 0.5 * fermi(x) * sum.value;
  r.gamma_minus = 0.5 * fermi(-x) * sum.value;
  r.gamma = r.gamma_plus + r.gamma_minus;
  r.kappa = (r.gamma_plus - r.gamma_minus) / r.gamma;
  r.truncated = sum.truncated;
  return r;
}

std::complex<double> wightman_pullback(double s, const BathSpec& bath, double epsilon) {
  bath.validate();
  if (!(epsilon > 0.0)) throw DomainError("wightman_pullback: epsilon must be > 0");
  using cplx = std::complex<double>;
  const double c = four_pi2_t2(bath.temperature);
  const double zeta = bath.zeta;
  const cplx z = kTwoPi * bath.temperature * cplx(s, -epsilon);
  const cplx shz = std::sinh(0.5 * z);
  const cplx time_part = (2.0 / c) * shz * shz;  // (cosh z - 1) / c
  const double root_m = std::sqrt(bath.mass);

  auto image = [&](int n) {
    const double sh = std::sinh(0.5 * kTwoPi * n * root_m);
    const cplx sigma = 2.0 * (1.0 + 1.0 / c) * sh * sh - time_part;
    cplx k = 1.0 / std::sqrt(sigma);
    if (zeta != 0.0) k -= zeta / std::sqrt(sigma + 2.0);
    return k;
  };

  cplx sum = image(0);
  for (int n = 1; n <= bath.n_max; ++n) {
    const cplx term = 2.0 * image(n);
    sum += term;
    if (std::abs(term) < bath.term_tol) break;
  }
  return sum / (4.0 * std::numbers::sqrt2 * pi);
}

}  // namespace btzotto
