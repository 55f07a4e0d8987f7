#pragma once

#include "zeta/hp/real.hpp"

namespace zeta {

/// Working decimal digits plus guard digits. Every high-precision operation
/// takes one of these and computes at (digits + guard) internally; results are
/// compared against tol() = 10^(-digits+10).
class PrecisionContext {
 public:
  static constexpr int kDefaultDigits = 60;
  static constexpr int kDefaultGuard = 20;
  static constexpr int kMinDigits = 30;
  static constexpr int kMinGuard = 10;

  /// Throws std::invalid_argument below the minimum digits or guard.
  explicit PrecisionContext(int digits = kDefaultDigits, int guard = kDefaultGuard);

  int digits() const noexcept { return digits_; }
  int guard() const noexcept { return guard_; }
  int working_digits() const noexcept { return digits_ + guard_; }
  mpfr_prec_t working_bits() const noexcept { return hp::digits_to_bits(working_digits()); }

  /// 10^(-digits+10), at working precision.
  hp::Real tol() const;
  double log10_tol() const noexcept { return -digits_ + 10.0; }

  PrecisionContext with_digits(int digits) const { return PrecisionContext(digits, guard_); }
  /// Same target digits, `extra` more guard digits.
  PrecisionContext inflated(int extra) const { return PrecisionContext(digits_, guard_ + extra); }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int digits_;
  int guard_;
};

/// RAII: sets the thread working precision to ctx.working_bits().
class ContextScope {
 public:
  explicit ContextScope(const PrecisionContext& ctx) noexcept : guard_(ctx.working_bits()) {}

 private:
  hp::WorkingPrecision guard_;
};

}  // namespace zeta
