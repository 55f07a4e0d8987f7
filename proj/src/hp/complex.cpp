#include "zeta/hp/complex.hpp"

#include <cmath>
#include <limits>

namespace zeta::hp {

std::string Complex::to_string(int digits) const {
  std::string out = re_.to_string(digits);
  out += im_.sign() < 0 ? " - " : " + ";
  out += abs(im_).to_string(digits);
  out += "i";
  return out;
}

double Complex::log2_abs() const noexcept {
  const double a = re_.log2_abs();
  const double b = im_.log2_abs();
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + 0.5 * std::log2(1.0 + std::exp2(2.0 * (lo - hi)));
}

Complex& Complex::operator+=(const Complex& o) { return *this = *this + o; }
Complex& Complex::operator-=(const Complex& o) { return *this = *this - o; }
Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }
Complex& Complex::operator/=(const Complex& o) { return *this = *this / o; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

Complex operator/(const Complex& a, const Complex& b) {
  if (b.im_.is_zero()) return {a.re_ / b.re_, a.im_ / b.re_};
  const Real d = b.re_ * b.re_ + b.im_ * b.im_;
  return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
}

Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real abs(const Complex& z) { return hypot(z.re(), z.im()); }

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex expi(const Real& t) {
  Real s;
  Real c;
  sin_cos(t, s, c);
  return {std::move(c), std::move(s)};
}

Complex exp(const Complex& z) {
  const Real m = exp(z.re());
  if (z.im().is_zero()) return {m, Real()};
  return expi(z.im()) * m;
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return {};
  const Real m = sqrt(abs(z));
  return expi(arg(z) / 2) * m;
}

Complex pow(const Complex& z, const Complex& w) {
  if (z.is_zero()) return {};
  return exp(w * log(z));
}

Complex pow(const Complex& z, long n) {
  Complex base = n < 0 ? Complex(1) / z : z;
  unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  Complex acc(1);
  while (e != 0) {
    if (e & 1UL) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

Complex sin(const Complex& z) {
  // sin(x+iy) = sin x cosh y + i cos x sinh y
  Real s;
  Real c;
  sin_cos(z.re(), s, c);
  const Real ey = exp(z.im());
  const Real emy = Real(1) / ey;
  return {s * (ey + emy) / 2, c * (ey - emy) / 2};
}

Complex cos(const Complex& z) {
  Real s;
  Real c;
  sin_cos(z.re(), s, c);
  const Real ey = exp(z.im());
  const Real emy = Real(1) / ey;
  return {c * (ey + emy) / 2, -(s * (ey - emy) / 2)};
}

}  // namespace zeta::hp
