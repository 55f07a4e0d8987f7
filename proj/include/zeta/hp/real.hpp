#pragma once

// RAII wrapper over an MPFR variable.
//
// Precision model: every value stores its own precision, but every
// arithmetic result is produced at the calling thread's *working precision*
// (see WorkingPrecision). Operands of lower precision are exact binary
// numbers, so raising the working precision inside a scope never loses
// information from inputs. The working precision is thread_local, which lets
// independent sweep points run on separate OpenMP threads.

#include <mpfr.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>

namespace zeta::hp {

/// Current working precision (bits) of the calling thread.
mpfr_prec_t working_bits() noexcept;

/// Bits needed to carry `digits` significant decimal digits (+ a few spare).
mpfr_prec_t digits_to_bits(long digits) noexcept;

/// Sets the thread's working precision for the lifetime of the guard.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(mpfr_prec_t bits) noexcept;
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

 private:
  mpfr_prec_t saved_;
};

class Real {
 public:
  Real();
  Real(int v);     // NOLINT(google-explicit-constructor)
  Real(long v);    // NOLINT(google-explicit-constructor)
  Real(double v);  // NOLINT(google-explicit-constructor)
  explicit Real(const std::string& decimal);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_ptr get() noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const noexcept { return mpfr_get_si(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  /// log2|x| as a double; -inf for zero. Safe for magnitudes far outside
  /// double range.
  double log2_abs() const noexcept;
  double log10_abs() const noexcept;

  Real operator-() const;
  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  // Integer fast paths. Constrained so that doubles take the Real overloads
  // instead of silently converting to long.
  template <std::integral I>
  friend Real operator*(const Real& a, I b) { return mul_si(a, static_cast<long>(b)); }
  template <std::integral I>
  friend Real operator*(I a, const Real& b) { return mul_si(b, static_cast<long>(a)); }
  template <std::integral I>
  friend Real operator/(const Real& a, I b) { return div_si(a, static_cast<long>(b)); }
  template <std::integral I>
  friend Real operator+(const Real& a, I b) { return add_si(a, static_cast<long>(b)); }
  template <std::integral I>
  friend Real operator-(const Real& a, I b) { return add_si(a, -static_cast<long>(b)); }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

 private:
  static Real mul_si(const Real& a, long b);
  static Real div_si(const Real& a, long b);
  static Real add_si(const Real& a, long b);
  void ensure_init(mpfr_prec_t bits);
  mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
void sin_cos(const Real& x, Real& s, Real& c);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real round(const Real& x);
/// x * 2^e
Real ldexp(const Real& x, long e);
Real pi();
Real euler_gamma();
/// 10^e exactly rounded at working precision.
Real pow10(long e);
inline const Real& max(const Real& a, const Real& b) { return a < b ? b : a; }
inline const Real& min(const Real& a, const Real& b) { return b < a ? b : a; }

}  // namespace zeta::hp
