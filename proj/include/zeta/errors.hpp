#pragma once

#include <stdexcept>
#include <string>

namespace zeta {

/// Root of every numerical error the library raises.
class ZetaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the region where an operation is defined or trusted.
class DomainError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

/// Argument within tolerance of a pole; carries the distance to it.
class PoleError : public DomainError {
 public:
  PoleError(const std::string& what, double distance)
      : DomainError(what + " (distance to pole " + std::to_string(distance) + ")"),
        distance_(distance) {}
  double distance() const noexcept { return distance_; }

 private:
  double distance_;
};

/// Near-degenerate parameters where the chosen algorithm cannot deliver the
/// requested accuracy (e.g. an incomplete-gamma order a hair away from a
/// nonpositive integer).
class IllConditionedError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

/// The working precision cannot resolve the requested quantity.
class InsufficientPrecisionError : public ZetaError {
 public:
  InsufficientPrecisionError(const std::string& what, int required_digits)
      : ZetaError(what + " (requires at least " + std::to_string(required_digits) + " digits)"),
        required_digits_(required_digits) {}
  int required_digits() const noexcept { return required_digits_; }

 private:
  int required_digits_;
};

/// The neglected part of an infinite k-sum is not below tolerance.
class TailBoundError : public ZetaError {
 public:
  TailBoundError(const std::string& what, int required_kmax)
      : ZetaError(what + " (requires kMax >= " + std::to_string(required_kmax) + ")"),
        required_kmax_(required_kmax) {}
  int required_kmax() const noexcept { return required_kmax_; }

 private:
  int required_kmax_;
};

class ConvergenceError : public ZetaError {
 public:
  using ZetaError::ZetaError;
};

}  // namespace zeta
