#pragma once

#include <functional>

namespace btzotto::specfun {

inline constexpr double kDefaultConicalTol = 1e-10;

/// Arguments of the conical (Mehler) function P_{-1/2 + i xi}(x).
struct ConicalArgs {
  double xi = 0.0;
  double x = 1.0;  ///< must satisfy x >= 1
  double tol = kDefaultConicalTol;  ///< absolute accuracy target
};

/// Conical function P_{-1/2 + i xi}(x) for real xi and x >= 1.
///
/// Evaluated from the Mehler-Dirichlet representation
///
///   P_{-1/2+i xi}(cosh a) = (sqrt 2 / pi) * Int_0^a cos(xi t) / sqrt(cosh a - cosh t) dt
///
/// after the substitution t = a - u^2, which removes the inverse square root
/// at t = a. The result is real, even in xi and bounded in magnitude by
/// P_{-1/2}(x) (see conical_p_envelope).
///
/// Throws DomainError for x < 1, non-finite input or tol <= 0, and
/// ConvergenceError when the quadrature budget runs out.
[[nodiscard]] double conical_p(const ConicalArgs& args);

/// Same as conical_p with the argument given as alpha = acosh(x) >= 0.
/// Avoids the cancellation in acosh(x) close to x = 1 and the overflow of
/// cosh(alpha) for large alpha.
[[nodiscard]] double conical_p_alpha(double xi, double alpha, double tol = kDefaultConicalTol);

/// P_{-1/2}(x) = 1 / AGM(1, sqrt((1 + x) / 2)), the xi = 0 member of the family.
/// Since |cos(xi t)| <= 1 in the Mehler-Dirichlet kernel this is also an upper
/// bound on |P_{-1/2+i xi}(x)| for every real xi.
[[nodiscard]] double conical_p_envelope(double x);

/// Envelope in terms of alpha = acosh(x); valid for any alpha >= 0 without overflow.
[[nodiscard]] double conical_p_envelope_alpha(double alpha);

/// Integral of f over (a, b) to absolute accuracy tol.
///
/// f may carry an integrable inverse-square-root singularity at the upper
/// endpoint b; the map t = b - u^2 turns that into a smooth integrand before
/// adaptive Gauss-Kronrod quadrature. f is never evaluated at b itself.
[[nodiscard]] double integrate_adaptive(const std::function<double(double)>& f, double a,
                                        double b, double tol);

}  // namespace btzotto::specfun
