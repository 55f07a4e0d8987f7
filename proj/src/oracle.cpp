#include "zeta/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "zeta/bernoulli.hpp"
#include "zeta/errors.hpp"
#include "zeta/special.hpp"
#include "phase.hpp"

namespace zeta {

using hp::Complex;
using hp::Real;
using detail::half_turn_phase;
using detail::i_times;
using detail::two_pi_pow;
using detail::working_eps;

namespace {

void require_not_s_one(const Complex& s, const PrecisionContext& ctx, const char* who) {
  const Real dist = hp::abs(s - Complex(1));
  if (dist < ctx.tol()) throw PoleError(std::string(who) + ": s = 1", dist.to_double());
}

// a^{-s}/2 + a^{1-s}/(s-1)
Complex algebraic_part(const Complex& s, const RayComplex& a, const PrecisionContext& ctx) {
  const Complex a_ms = pow_ray(a, -s, ctx);
  return a_ms / 2 + a_ms * a.value() / (s - Complex(1));
}

}  // namespace

ZetaPoint::ZetaPoint(Complex s, const Real& abs_a, const Real& theta, const PrecisionContext& ctx)
    : s_(std::move(s)) {
  ContextScope scope(ctx);
  if (theta.sign() <= 0 || theta >= hp::pi()) {
    throw DomainError("ZetaPoint: theta must lie strictly inside (0, pi)");
  }
  if (abs_a.sign() <= 0) throw DomainError("ZetaPoint: |a| must be positive");
  if (s_.re() < Real(0.5)) {
    const Real n = hp::round(s_.re());
    const Real dist = hp::abs(s_ - Complex(n));
    if (n.sign() <= 0 && dist < ctx.tol()) {
      throw PoleError("ZetaPoint: s must not be 0, -1, -2, ...", dist.to_double());
    }
  }
  a_ = RayComplex(abs_a, theta);
  a_prime_ = RayComplex::from_value(Complex(1) - a_.value());
}

std::string shortest_decimal(double v) {
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

ZetaPoint ZetaPoint::from_turns(const Complex& s, double abs_a, double theta_over_pi,
                                const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  // Decimal parsing keeps e.g. 0.473089 exact to working precision instead of
  // inheriting the binary rounding of the double.
  const Real theta = Real(shortest_decimal(theta_over_pi)) * hp::pi();
  return {s, Real(shortest_decimal(abs_a)), theta, ctx};
}

Complex hurwitz_zeta_direct(const Complex& s, const RayComplex& a, const PrecisionContext& ctx, long terms) {
  ContextScope scope(ctx);
  if (s.re() <= Real(1.1)) throw DomainError("hurwitz_zeta_direct: requires Re(s) > 1.1");
  if (hp::abs(a.argument()) >= hp::pi()) {
    // a on the negative real axis: only the nonpositive integers are poles,
    // other points need a principal-branch convention this oracle does not pick.
    const Complex v = a.value();
    const Real n = hp::round(v.re());
    const Real dist = hp::abs(v - Complex(n));
    if (n.sign() <= 0 && dist < ctx.tol()) throw PoleError("hurwitz_zeta_direct: a at a pole", dist.to_double());
    throw DomainError("hurwitz_zeta_direct: |arg a| must be < pi");
  }
  if (a.argument().is_zero()) {
    // Positive real a is fine; only guard against a = 0.
    if (a.modulus() < ctx.tol()) throw PoleError("hurwitz_zeta_direct: a = 0", a.modulus().to_double());
  }
  const long m = terms > 0 ? terms : std::max<long>(ctx.working_digits(), 40);
  const Complex minus_s = -s;

  Complex sum = pow_ray(a, minus_s, ctx);
  const Complex av = a.value();
  for (long k = 1; k < m; ++k) {
    sum += pow_ray(RayComplex::from_value(av + Complex(Real(k))), minus_s, ctx);
  }

  // Euler-Maclaurin tail at b = m + a.
  const Complex b = av + Complex(Real(m));
  const RayComplex b_ray = RayComplex::from_value(b);
  const Complex b_ms = pow_ray(b_ray, minus_s, ctx);
  Complex tail = b_ms * b / (s - Complex(1)) + b_ms / 2;
  const Complex inv_b2 = Complex(1) / (b * b);
  Complex power = b_ms / b;  // b^{-s-2j+1}
  Complex rising = s;        // s (s+1) ... (s+2j-2)
  const Real eps = working_eps();
  constexpr int kMaxCorrections = 600;
  bool converged = false;
  Real fact = Real(2);  // (2j)!
  for (int j = 1; j <= kMaxCorrections; ++j) {
    const Complex term = rising * power * (bernoulli_even_real(j) / fact);
    tail += term;
    if (hp::abs(term) < eps * hp::abs(sum)) {
      converged = true;
      break;
    }
    power = power * inv_b2;
    rising = rising * (s + Complex(Real(2 * j - 1))) * (s + Complex(Real(2 * j)));
    fact = fact * ((2L * j + 1) * (2L * j + 2));
  }
  if (!converged) throw ConvergenceError("hurwitz_zeta_direct: Euler-Maclaurin tail did not converge");
  return sum + tail;
}

Complex z_reference(const Complex& s, const RayComplex& a, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  require_not_s_one(s, ctx, "z_reference");
  const Complex zeta = hurwitz_zeta_direct(s, a, ctx);
  return gamma_complex(s, ctx) * (zeta - algebraic_part(s, a, ctx));
}

SeriesValue periodic_zeta_direct_bounded(const ZetaPoint& point, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  const Complex av = point.a().value();
  if (av.im().sign() <= 0) throw DomainError("periodic_zeta_direct: requires Im(a) > 0");

  const Complex q = hp::exp(i_times(av) * (hp::pi() * 2));
  const Real q_abs = hp::abs(q);
  const Complex sm1 = point.s() - Complex(1);
  const double sigma = std::max(0.0, sm1.re().to_double());
  const Real eps = working_eps();

  Complex sum;
  Complex qk(1);
  constexpr long kMaxTerms = 10'000'000;
  for (long k = 1; k <= kMaxTerms; ++k) {
    qk = qk * q;
    const Complex term = hp::exp(sm1 * hp::log(Real(k))) * qk;
    sum += term;
    // Ratio bound for every later term: (1 + 1/k)^sigma |q|.
    const Real rho = Real(std::pow(1.0 + 1.0 / static_cast<double>(k), sigma)) * q_abs;
    const Real term_abs = hp::abs(term);
    if (rho <= Real(0.5) && term_abs <= eps * hp::abs(sum)) {
      SeriesValue out;
      out.error_bound = term_abs * rho / (Real(1) - rho);
      out.value = std::move(sum);
      out.terms = k;
      return out;
    }
  }
  throw ConvergenceError("periodic_zeta_direct: series did not converge (Im a too small)");
}

Complex periodic_zeta_direct(const ZetaPoint& point, const PrecisionContext& ctx) {
  return periodic_zeta_direct_bounded(point, ctx).value;
}

Complex f_tilde_reference(const ZetaPoint& point, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  const Complex& s = point.s();
  require_not_s_one(s, ctx, "f_tilde_reference");
  const Complex f = periodic_zeta_direct(point, ctx);
  const Complex bracket = half_turn_phase(s, 1) * algebraic_part(s, point.a(), ctx) +
                          half_turn_phase(s, -1) * algebraic_part(s, point.a_prime(), ctx);
  return f - gamma_complex(s, ctx) / two_pi_pow(s) * bracket;
}

Complex periodic_zeta_hurwitz_form(const ZetaPoint& point, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  const Complex& s = point.s();
  const Complex bracket = half_turn_phase(s, 1) * hurwitz_zeta_direct(s, point.a(), ctx) +
                          half_turn_phase(s, -1) * hurwitz_zeta_direct(s, point.a_prime(), ctx);
  return gamma_complex(s, ctx) / two_pi_pow(s) * bracket;
}

Complex f_tilde_z_form(const ZetaPoint& point, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  const Complex& s = point.s();
  const Complex bracket = half_turn_phase(s, 1) * z_reference(s, point.a(), ctx) +
                          half_turn_phase(s, -1) * z_reference(s, point.a_prime(), ctx);
  return bracket / two_pi_pow(s);
}

}  // namespace zeta
