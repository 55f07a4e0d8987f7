#include "zeta/hp/real.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace zeta::hp {

namespace {

thread_local mpfr_prec_t t_working_bits = 256;

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

}  // namespace

mpfr_prec_t working_bits() noexcept { return t_working_bits; }

mpfr_prec_t digits_to_bits(long digits) noexcept {
  // log2(10) = 3.3219...
  const double bits = std::ceil(static_cast<double>(digits) * 3.321928094887362) + 8;
  return static_cast<mpfr_prec_t>(bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits);
}

WorkingPrecision::WorkingPrecision(mpfr_prec_t bits) noexcept : saved_(t_working_bits) {
  t_working_bits = bits < MPFR_PREC_MIN ? MPFR_PREC_MIN : bits;
}

WorkingPrecision::~WorkingPrecision() { t_working_bits = saved_; }

Real::Real() {
  mpfr_init2(v_, t_working_bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(int v) : Real(static_cast<long>(v)) {}

Real::Real(long v) {
  mpfr_init2(v_, t_working_bits);
  mpfr_set_si(v_, v, kRnd);
}

Real::Real(double v) {
  mpfr_init2(v_, t_working_bits);
  mpfr_set_d(v_, v, kRnd);
}

Real::Real(const std::string& decimal) {
  mpfr_init2(v_, t_working_bits);
  if (mpfr_set_str(v_, decimal.c_str(), 10, kRnd) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("not a decimal number: " + decimal);
  }
}

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, kRnd);
}

Real::Real(Real&& other) noexcept {
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  ensure_init(mpfr_get_prec(other.v_));
  mpfr_set_prec(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, kRnd);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  std::swap(v_[0], other.v_[0]);
  return *this;
}

Real::~Real() {
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
}

void Real::ensure_init(mpfr_prec_t bits) {
  if (v_[0]._mpfr_d == nullptr) mpfr_init2(v_, bits);
}

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Re", digits > 1 ? digits - 1 : 0, v_) < 0 || buf == nullptr) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

double Real::log2_abs() const noexcept {
  if (mpfr_zero_p(v_)) return -std::numeric_limits<double>::infinity();
  if (!mpfr_number_p(v_)) return std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, v_, kRnd);
  return static_cast<double>(e) + std::log2(std::fabs(m));
}

double Real::log10_abs() const noexcept { return log2_abs() * 0.30102999566398120; }

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.v_, v_, kRnd);
  return r;
}

Real& Real::operator+=(const Real& o) { return *this = *this + o; }
Real& Real::operator-=(const Real& o) { return *this = *this - o; }
Real& Real::operator*=(const Real& o) { return *this = *this * o; }
Real& Real::operator/=(const Real& o) { return *this = *this / o; }

Real operator+(const Real& a, const Real& b) {
  Real r;
  mpfr_add(r.v_, a.v_, b.v_, kRnd);
  return r;
}

Real operator-(const Real& a, const Real& b) {
  Real r;
  mpfr_sub(r.v_, a.v_, b.v_, kRnd);
  return r;
}

Real operator*(const Real& a, const Real& b) {
  Real r;
  mpfr_mul(r.v_, a.v_, b.v_, kRnd);
  return r;
}

Real operator/(const Real& a, const Real& b) {
  Real r;
  mpfr_div(r.v_, a.v_, b.v_, kRnd);
  return r;
}

Real Real::mul_si(const Real& a, long b) {
  Real r;
  mpfr_mul_si(r.v_, a.v_, b, kRnd);
  return r;
}

Real Real::div_si(const Real& a, long b) {
  Real r;
  mpfr_div_si(r.v_, a.v_, b, kRnd);
  return r;
}

Real Real::add_si(const Real& a, long b) {
  Real r;
  mpfr_add_si(r.v_, a.v_, b, kRnd);
  return r;
}

#define ZETA_HP_UNARY(name, fn)        \
  Real name(const Real& x) {           \
    Real r;                            \
    fn(r.get(), x.get(), kRnd);        \
    return r;                          \
  }

ZETA_HP_UNARY(abs, mpfr_abs)
ZETA_HP_UNARY(sqrt, mpfr_sqrt)
ZETA_HP_UNARY(exp, mpfr_exp)
ZETA_HP_UNARY(log, mpfr_log)
ZETA_HP_UNARY(sin, mpfr_sin)
ZETA_HP_UNARY(cos, mpfr_cos)

#undef ZETA_HP_UNARY

void sin_cos(const Real& x, Real& s, Real& c) {
  Real ss;
  Real cc;
  mpfr_sin_cos(ss.get(), cc.get(), x.get(), kRnd);
  s = std::move(ss);
  c = std::move(cc);
}

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r;
  mpfr_hypot(r.get(), x.get(), y.get(), kRnd);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r;
  mpfr_pow(r.get(), x.get(), y.get(), kRnd);
  return r;
}

Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  return r;
}

Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.get(), x.get());
  return r;
}

Real round(const Real& x) {
  Real r;
  mpfr_round(r.get(), x.get());
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}

Real pi() {
  Real r;
  mpfr_const_pi(r.get(), kRnd);
  return r;
}

Real euler_gamma() {
  Real r;
  mpfr_const_euler(r.get(), kRnd);
  return r;
}

Real pow10(long e) {
  Real r;
  mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(std::labs(e)), kRnd);
  if (e < 0) mpfr_ui_div(r.get(), 1, r.get(), kRnd);
  return r;
}

}  // namespace zeta::hp
