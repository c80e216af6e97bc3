#pragma once

// Global adaptive Gauss-Kronrod (7/15) quadrature with an absolute tolerance.
// Internal to the core library; callers go through specfun::integrate_adaptive.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "btzotto/error.hpp"

namespace btzotto::detail {

inline constexpr int kMaxQuadratureIntervals = 4000;

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

template <class F>
QuadratureResult integrate_gk15(F&& f, double a, double b, double tol,
                                int max_intervals = kMaxQuadratureIntervals) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;

  struct Piece {
    double lo, hi, value, error;
    bool operator<(const Piece& other) const { return error < other.error; }
  };

  auto rule = [&f](double lo, double hi) {
    double err = 0.0;
    const double v = Rule::integrate(f, lo, hi, 0, 0.0, &err);
    if (!std::isfinite(v) || !std::isfinite(err)) {
      throw ConvergenceError("integrate_gk15: integrand not finite on [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]");
    }
    return Piece{lo, hi, v, err};
  };

  std::priority_queue<Piece> pieces;
  pieces.push(rule(a, b));
  double total = pieces.top().value;
  double total_error = pieces.top().error;
  int count = 1;

  while (total_error > tol) {
    if (count >= max_intervals) {
      throw ConvergenceError("integrate_gk15: interval budget exhausted (error estimate " +
                             std::to_string(total_error) + " > tol " + std::to_string(tol) + ")");
    }
    const Piece worst = pieces.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      // Interval at machine resolution; the remaining error is roundoff.
      break;
    }
    pieces.pop();
    const Piece left = rule(worst.lo, mid);
    const Piece right = rule(mid, worst.hi);
    pieces.push(left);
    pieces.push(right);
    ++count;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    total_error = std::max(total_error, 0.0);
  }

  // Re-sum from the pieces so the reported value carries no update drift.
  double sum = 0.0;
  double err = 0.0;
  std::vector<Piece> all;
  all.reserve(pieces.size());
  while (!pieces.empty()) {
    all.push_back(pieces.top());
    pieces.pop();
  }
  std::sort(all.begin(), all.end(), [](const Piece& l, const Piece& r) { return l.lo < r.lo; });
  for (const auto& p : all) {
    sum += p.value;
    err += p.error;
  }
  return {sum, err, count};
}

}  // namespace btzotto::detail
