#include "btzotto/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "btzotto/error.hpp"
#include "quadrature.hpp"

namespace btzotto::specfun {
namespace {

using std::numbers::pi;

// acosh(x) without the loss of digits near x = 1 or overflow for huge x.
double stable_acosh(double x) {
  if (x > 1e8) return std::log(2.0 * x);
  const double xm1 = x - 1.0;
  return std::log1p(xm1 + std::sqrt(xm1 * (x + 1.0)));
}

// 1/cosh(a/2) evaluated without overflow.
double sech_half(double alpha) {
  const double h = 0.5 * alpha;
  if (h > 350.0) return 2.0 * std::exp(-h);
  return 1.0 / std::cosh(h);
}

double agm(double a, double b) {
  for (int i = 0; i < 64; ++i) {
    const double am = 0.5 * (a + b);
    const double gm = std::sqrt(a * b);
    if (std::abs(am - gm) <= 4.0 * std::numeric_limits<double>::epsilon() * am) return am;
    a = am;
    b = gm;
  }
  return 0.5 * (a + b);
}

// e^{h/2} / sqrt(sinh(h) / h), finite for every h >= 0.
double kernel_weight(double h) {
  if (h < 0.5) {
    const double s = h > 0.0 ? std::sinh(h) / h : 1.0;
    return std::exp(0.5 * h) / std::sqrt(s);
  }
  return std::sqrt(2.0 * h / -std::expm1(-2.0 * h));
}

void require_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw DomainError("conical_p: tolerance must be a positive finite number");
  }
}

}  // namespace

double conical_p_envelope_alpha(double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("conical_p_envelope: alpha must be >= 0");
  if (alpha == 0.0) return 1.0;
  if (std::isinf(alpha)) return 0.0;
  const double k = sech_half(alpha);
  return k / agm(k, 1.0);
}

double conical_p_envelope(double x) {
  if (!(x >= 1.0)) {
    throw DomainError("conical_p_envelope: argument x = " + std::to_string(x) + " < 1");
  }
  if (std::isinf(x)) return 0.0;
  return conical_p_envelope_alpha(stable_acosh(x));
}

double conical_p_alpha(double xi, double alpha, double tol) {
  require_tol(tol);
  if (!std::isfinite(xi)) throw DomainError("conical_p: order parameter xi must be finite");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("conical_p: alpha = acosh(x) must be finite and >= 0");
  }
  if (alpha == 0.0) return 1.0;
  if (xi == 0.0) return conical_p_envelope_alpha(alpha);

  // After t = alpha - u^2 and pulling e^{-alpha/2} out of the kernel:
  //   P = (4/pi) e^{-alpha/2} Int_0^{sqrt(alpha)} w(u^2/2) cos(xi (alpha - u^2)) / sqrt(D(u)) du
  // with D(u) = 1 - exp(-2 (alpha - u^2/2)) and w the bounded kernel_weight.
  const double scale = (4.0 / pi) * std::exp(-0.5 * alpha);
  if (scale == 0.0) return 0.0;
  const auto integrand = [xi, alpha](double u) {
    const double u2 = u * u;
    const double h = 0.5 * u2;
    const double d = -std::expm1(-2.0 * (alpha - h));
    return kernel_weight(h) * std::cos(xi * (alpha - u2)) / std::sqrt(d);
  };
  const double inner_tol = tol / scale;
  const auto res = detail::integrate_gk15(integrand, 0.0, std::sqrt(alpha), inner_tol);
  return scale * res.value;
}

double conical_p(const ConicalArgs& args) {
  require_tol(args.tol);
  if (!(args.x >= 1.0) || !std::isfinite(args.x)) {
    throw DomainError("conical_p: argument x = " + std::to_string(args.x) +
                      " outside [1, inf)");
  }
  if (args.x == 1.0) return 1.0;
  return conical_p_alpha(args.xi, stable_acosh(args.x), args.tol);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw DomainError("integrate_adaptive: need finite a < b");
  }
  if (!(tol > 0.0)) throw DomainError("integrate_adaptive: tol must be > 0");
  // t = b - u^2 maps (a, b) onto (0, sqrt(b - a)) and absorbs (b - t)^{-1/2}.
  const auto smoothed = [&f, b](double u) { return 2.0 * u * f(b - u * u); };
  return detail::integrate_gk15(smoothed, 0.0, std::sqrt(b - a), tol).value;
}

}  // namespace btzotto::specfun
