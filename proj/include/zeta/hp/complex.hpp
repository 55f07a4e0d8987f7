#pragma once

#include <complex>
#include <concepts>
#include <string>

#include "zeta/hp/real.hpp"

namespace zeta::hp {

/// Rectangular high-precision complex number. Results follow the same
/// working-precision rule as Real.
class Complex {
 public:
  Complex() = default;
  Complex(Real re, Real im = Real()) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  Complex(int v) : re_(v) {}                                                    // NOLINT
  Complex(long v) : re_(v) {}                                                   // NOLINT
  Complex(double v) : re_(v) {}                                                 // NOLINT
  explicit Complex(std::complex<double> v) : re_(v.real()), im_(v.imag()) {}

  const Real& re() const noexcept { return re_; }
  const Real& im() const noexcept { return im_; }
  Real& re() noexcept { return re_; }
  Real& im() noexcept { return im_; }

  std::complex<double> to_std() const { return {re_.to_double(), im_.to_double()}; }
  /// "re + im i" with `digits` significant digits per component.
  std::string to_string(int digits) const;
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const noexcept { return re_.is_finite() && im_.is_finite(); }
  /// Approximate log2|z| (within half a bit), safe for huge exponents.
  double log2_abs() const noexcept;
  double log10_abs() const noexcept { return log2_abs() * 0.30102999566398120; }

  Complex operator-() const { return {-re_, -im_}; }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, const Real& b) { return {a.re_ * b, a.im_ * b}; }
  friend Complex operator*(const Real& a, const Complex& b) { return b * a; }
  friend Complex operator/(const Complex& a, const Real& b) { return {a.re_ / b, a.im_ / b}; }
  template <std::integral I>
  friend Complex operator*(const Complex& a, I b) { return {a.re_ * b, a.im_ * b}; }
  template <std::integral I>
  friend Complex operator*(I a, const Complex& b) { return {b.re_ * a, b.im_ * a}; }
  template <std::integral I>
  friend Complex operator/(const Complex& a, I b) { return {a.re_ / b, a.im_ / b}; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

 private:
  Real re_;
  Real im_;
};

inline Complex conj(const Complex& z) { return {z.re(), -z.im()}; }
/// |z|^2
Real norm(const Complex& z);
Real abs(const Complex& z);
/// Principal argument in (-pi, pi].
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// e^{i t}
Complex expi(const Real& t);
/// Principal logarithm.
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
/// Principal power exp(w log z).
Complex pow(const Complex& z, const Complex& w);
Complex pow(const Complex& z, long n);
Complex sin(const Complex& z);
Complex cos(const Complex& z);

}  // namespace zeta::hp
