#pragma once

#include <stdexcept>
#include <string>

namespace btzotto {

/// Argument outside the mathematical domain of an operation (x < 1, r <= r_H, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative procedure ran out of budget before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The cycle is not operating in the regime a metric is defined for
/// (e.g. engine metrics requested while the cycle consumes work).
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The objective handed to the optimizer is numerically constant on its bracket.
class FlatObjectiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace btzotto
