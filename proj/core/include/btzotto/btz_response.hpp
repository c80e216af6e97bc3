#pragma once

#include <complex>
#include <string>

namespace btzotto {

/// Field boundary condition at AdS infinity, with the values used as the
/// weight zeta of the (sigma + 2)^{-1/2} image term.
enum class Boundary : int { Neumann = -1, Transparent = 0, Dirichlet = 1 };

[[nodiscard]] std::string to_string(Boundary b);
[[nodiscard]] Boundary boundary_from_zeta(int zeta);  // DomainError unless zeta in {-1, 0, 1}

inline constexpr int kDefaultImageCap = 200;
inline constexpr double kDefaultTermTol = 1e-12;

/// A BTZ heat bath: a static detector sees the Hartle-Hawking state as thermal
/// at the local KMS temperature. Units: AdS length l = 1.
struct BathSpec {
  double temperature = 0.1;  ///< local KMS temperature T > 0
  double mass = 0.01;        ///< BTZ mass parameter M > 0
  int zeta = 0;              ///< -1 Neumann, 0 transparent, +1 Dirichlet
  int n_max = kDefaultImageCap;
  double term_tol = kDefaultTermTol;

  /// Throws DomainError naming the offending field.
  void validate() const;

  [[nodiscard]] BathSpec with_temperature(double t) const {
    BathSpec out = *this;
    out.temperature = t;
    return out;
  }
  [[nodiscard]] BathSpec with_zeta(int z) const {
    BathSpec out = *this;
    out.zeta = z;
    return out;
  }
};

/// Detector response at one gap.
struct RateData {
  double gamma_plus = 0.0;   ///< excitation rate Gamma(Omega)
  double gamma_minus = 0.0;  ///< de-excitation rate Gamma(-Omega)
  double gamma = 0.0;        ///< decay rate Gamma(Omega) + Gamma(-Omega)
  double kappa = 0.0;        ///< (Gamma(Omega) - Gamma(-Omega)) / gamma
  bool truncated = false;    ///< image sum stopped at n_max before term_tol
};

/// Result of the Legendre image sum Sum_n [P(cosh a_n^-) - zeta P(cosh a_n^+)].
struct ImageSum {
  double value = 0.0;
  int terms = 0;           ///< largest image index included
  bool truncated = false;  ///< n_max reached with the last pair still >= term_tol
};

enum class ImageSign { Minus, Plus };

/// Local KMS (Tolman) temperature sqrt(M) / (2 pi sqrt(r^2 - M)) of a static
/// detector at radius r. DomainError unless r > sqrt(M).
[[nodiscard]] double kms_temperature(double r, double mass);

/// cosh(alpha_n^-/+) = (1 + 4 pi^2 T^2) cosh(2 pi n sqrt(M)) -/+ 4 pi^2 T^2.
[[nodiscard]] double cosh_alpha(int n, double temperature, double mass, ImageSign sign);

/// alpha_n^-/+ itself; accurate where cosh_alpha rounds to 1 and where it overflows.
[[nodiscard]] double alpha_image(int n, double temperature, double mass, ImageSign sign);

/// The even-in-Omega Legendre image sum entering the rate, evaluated at
/// order parameter xi = |Omega| / (2 pi T).
[[nodiscard]] ImageSum legendre_image_sum(double omega, const BathSpec& bath);

/// Transition rate Gamma(omega) of a static detector; omega may be negative
/// (de-excitation). Detailed balance Gamma(w) = e^{-w/T} Gamma(-w) holds by
/// construction since only the Fermi factor sees the sign of omega.
[[nodiscard]] double transition_rate(double omega, const BathSpec& bath);

/// Gamma(+-omega), gamma and kappa for a gap omega > 0.
[[nodiscard]] RateData rate_data(double omega, const BathSpec& bath);

/// Image-sum Wightman function pulled back to the static worldline, at proper
/// time separation s - i epsilon. Validation oracle for transition_rate; uses
/// the principal square-root branch.
[[nodiscard]] std::complex<double> wightman_pullback(double s, const BathSpec& bath,
                                                     double epsilon);

}  // namespace btzotto
