#include "zeta/terminant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "zeta/errors.hpp"
#include "zeta/special.hpp"

namespace zeta {

using hp::Complex;
using hp::Real;

namespace {

constexpr double kLn10 = 2.302585092994046;
constexpr int kMaxReruns = 6;

struct KernelResult {
  Complex value;
  double correct_digits;  // relative digits that survived cancellation
};

PrecisionContext context_for(int total_digits, const PrecisionContext& ctx) {
  return PrecisionContext(std::max(total_digits - ctx.guard(), PrecisionContext::kMinDigits), ctx.guard());
}

// Gamma(alpha) - z^alpha sum_n (-z)^n / (n! (alpha+n))
KernelResult series_kernel(const Complex& alpha, const RayComplex& z, int total_digits,
                           const PrecisionContext& ctx) {
  const PrecisionContext local = context_for(total_digits, ctx);
  ContextScope scope(local);
  const Complex ga = gamma_complex(alpha, local);
  const Complex za = pow_ray(z, alpha, local);
  const Complex minus_z = -z.value();
  const Real eps = hp::ldexp(Real(1), -static_cast<long>(hp::working_bits()));
  const double zmod = z.modulus().to_double();

  Complex power(1);  // (-z)^n / n!
  Complex sum;
  double max_log10 = -std::numeric_limits<double>::infinity();
  for (long n = 0;; ++n) {
    const Complex term = power / (alpha + Complex(Real(n)));
    sum += term;
    max_log10 = std::max(max_log10, term.log10_abs());
    if (static_cast<double>(n) > zmod && hp::abs(term) <= eps * hp::abs(sum)) break;
    if (n > 100000) throw ConvergenceError("upper_gamma: power series did not converge");
    power = power * minus_z / (n + 1);
  }
  const Complex scaled = za * sum;
  Complex value = ga - scaled;
  const double big = std::max(ga.log10_abs(), za.log10_abs() + max_log10);
  const double lost = std::max(0.0, big - value.log10_abs());
  return {value, static_cast<double>(local.working_digits()) - lost};
}

// alpha = -m: E1(z) then Gamma(a-1,z) = (Gamma(a,z) - z^{a-1} e^{-z}) / (a-1) down to -m.
KernelResult integer_kernel(long m, const RayComplex& z, int total_digits, const PrecisionContext& ctx) {
  const PrecisionContext local = context_for(total_digits, ctx);
  ContextScope scope(local);
  const Complex zv = z.value();
  const Complex minus_z = -zv;
  const Real eps = hp::ldexp(Real(1), -static_cast<long>(hp::working_bits()));
  const double log10_eps = eps.log10_abs();
  const double zmod = z.modulus().to_double();

  Complex power = minus_z;  // (-z)^n / n!
  Complex sum;
  double max_log10 = -std::numeric_limits<double>::infinity();
  for (long n = 1;; ++n) {
    const Complex term = power / n;
    sum += term;
    max_log10 = std::max(max_log10, term.log10_abs());
    if (static_cast<double>(n) > zmod && hp::abs(term) <= eps * hp::abs(sum)) break;
    if (n > 100000) throw ConvergenceError("upper_gamma: E1 series did not converge");
    power = power * minus_z / (n + 1);
  }
  const Complex log_z = log_ray(z);
  Complex value = Complex(-hp::euler_gamma()) - log_z - sum;
  // absolute error, log10
  double err = log10_eps + std::max({0.0, log_z.log10_abs(), max_log10});

  const Complex e_minus_z = hp::exp(minus_z);
  const Complex inv_z = Complex(1) / zv;
  Complex zpow = inv_z;  // z^{a-1} for a = 0
  for (long a = 0; a > -m; --a) {
    const Complex sub = zpow * e_minus_z;
    value = (value - sub) / (a - 1);
    const double e_sub = log10_eps + sub.log10_abs();
    const double hi = std::max(err, e_sub);
    err = hi + std::log10(1.0 + std::pow(10.0, std::min(err, e_sub) - hi)) - std::log10(static_cast<double>(1 - a));
    zpow = zpow * inv_z;
  }
  const double correct = std::min(static_cast<double>(local.working_digits()), value.log10_abs() - err);
  return {value, correct};
}

}  // namespace

void TerminantQuery::validate() const {
  if (!(z.modulus().sign() > 0)) throw DomainError("terminant: |z| must be positive");
  const double arg = std::fabs(z.argument().to_double());
  if (arg > 2 * M_PI + 0.1) {
    throw DomainError("terminant: |arg z| = " + std::to_string(arg) + " exceeds 2 pi + 0.1; reduce it first");
  }
}

Complex upper_gamma(const Complex& alpha, const RayComplex& z, const PrecisionContext& ctx) {
  if (!(z.modulus().sign() > 0)) throw DomainError("upper_gamma: |z| must be positive");
  long integer_order = 1;
  {
    ContextScope scope(ctx);
    const Real n = hp::round(alpha.re());
    const Real dist = hp::abs(alpha - Complex(n));
    if (n.sign() <= 0) {
      if (dist.is_zero()) {
        integer_order = n.to_long();
      } else if (dist.log10_abs() < -0.5 * ctx.digits()) {
        throw IllConditionedError("upper_gamma: order within 10^(-digits/2) of the nonpositive integer " +
                                  std::to_string(n.to_long()) + "; perturb s");
      }
    }
  }

  const double zmod = z.modulus().to_double();
  const int target = ctx.digits() + ctx.guard() / 2;
  int total = ctx.working_digits() + static_cast<int>(std::ceil(zmod / kLn10)) + ctx.guard();
  for (int attempt = 0; attempt <= kMaxReruns; ++attempt) {
    const KernelResult r = integer_order <= 0 ? integer_kernel(-integer_order, z, total, ctx)
                                              : series_kernel(alpha, z, total, ctx);
    if (r.correct_digits >= target) return r.value;
    total += static_cast<int>(std::ceil(target - r.correct_digits)) + 10;
  }
  throw InsufficientPrecisionError("upper_gamma: cancellation not resolved", total);
}

Complex upper_gamma_continued_fraction(const Complex& alpha, const RayComplex& z, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  const Complex zv = z.value();
  if (!(zv.re().sign() > 0)) throw DomainError("upper_gamma_continued_fraction: needs Re z > 0");
  const Real eps = hp::ldexp(Real(1), -static_cast<long>(hp::working_bits()) + 4);
  const Real tiny = hp::ldexp(Real(1), -static_cast<long>(4 * hp::working_bits()));

  // Modified Lentz on  z + 1 - a - 1(1-a)/(z + 3 - a - 2(2-a)/(z + 5 - a - ...))
  Complex b = zv + Complex(1) - alpha;
  Complex c = Complex(Real(1) / tiny);
  Complex d = Complex(1) / b;
  Complex h = d;
  for (long i = 1;; ++i) {
    if (i > 200000) throw ConvergenceError("upper_gamma_continued_fraction: no convergence");
    const Complex an = -(Complex(Real(i)) * (Complex(Real(i)) - alpha));
    b += Complex(2);
    d = an * d + b;
    if (hp::abs(d) < tiny) d = Complex(tiny);
    c = b + an / c;
    if (hp::abs(c) < tiny) c = Complex(tiny);
    d = Complex(1) / d;
    const Complex delta = d * c;
    h *= delta;
    if (hp::abs(delta - Complex(1)) < eps) break;
  }
  return hp::exp(alpha * log_ray(z) - zv) * h;
}

Complex terminant(const TerminantQuery& q, const PrecisionContext& ctx) {
  q.validate();
  const Complex g = upper_gamma(Complex(1) - q.nu, q.z, ctx);
  ContextScope scope(ctx);
  const Real pi = hp::pi();
  const Complex phase = hp::exp(Complex(Real(), pi) * q.nu);
  const Complex two_pi_i(Real(), pi * 2);
  return phase * gamma_complex(q.nu, ctx) / two_pi_i * g;
}

ArgReduction connection_step(const TerminantQuery& q, int direction, const PrecisionContext& ctx) {
  if (direction != 1 && direction != -1) throw DomainError("connection_step: direction must be +1 or -1");
  ContextScope scope(ctx);
  const Real two_pi = hp::pi() * 2;
  const Complex e = hp::exp(Complex(Real(), two_pi) * q.nu);  // e^{2 pi i nu}
  if (direction > 0) {
    // T(w e^{-pi i}) = e^{2 pi i nu} T(w e^{pi i}) - e^{2 pi i nu}
    return {{q.nu, q.z.rotated(two_pi)}, e, -e};
  }
  // T(w e^{pi i}) = e^{-2 pi i nu} T(w e^{-pi i}) + 1
  return {{q.nu, q.z.rotated(-two_pi)}, Complex(1) / e, Complex(1)};
}

ArgReduction reduce_arg(const TerminantQuery& q, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  const Real pi = hp::pi();
  ArgReduction acc{q, Complex(1), Complex()};
  while (acc.query.z.argument() <= -pi || acc.query.z.argument() > pi) {
    const int dir = acc.query.z.argument() > pi ? -1 : 1;
    const ArgReduction step = connection_step(acc.query, dir, ctx);
    acc.offset = acc.multiplier * step.offset + acc.offset;
    acc.multiplier = acc.multiplier * step.multiplier;
    acc.query = step.query;
  }
  return acc;
}

Complex terminant_principal(const TerminantQuery& q, const PrecisionContext& ctx) {
  const ArgReduction r = reduce_arg(q, ctx);
  const Complex t = terminant(r.query, ctx);
  ContextScope scope(ctx);
  return r.multiplier * t + r.offset;
}

namespace {

// 1 + i t - e^{i t}, written to avoid cancellation for small t.
std::complex<double> smoothing_rhs(double t) {
  const double s = std::sin(0.5 * t);
  double t_minus_sin = 0.0;
  if (std::fabs(t) < 0.5) {
    // t^3/3! - t^5/5! + ...
    double term = t * t * t / 6.0;
    for (int k = 1; k < 12; ++k) {
      t_minus_sin += term;
      term *= -t * t / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    }
  } else {
    t_minus_sin = t - std::sin(t);
  }
  return {2.0 * s * s, t_minus_sin};
}

}  // namespace

SmoothingCoefficient c_of_offset(double t) {
  if (!(std::fabs(t) < M_PI)) throw DomainError("c(phi): phi must lie in (0, 2 pi)");
  SmoothingCoefficient out;
  out.phi = M_PI + t;
  if (t == 0.0) return out;

  constexpr double kStep = 0.05;
  const int steps = std::max(1, static_cast<int>(std::ceil(std::fabs(t) / kStep)));
  std::complex<double> c(0.0, 0.0);
  std::complex<double> last(0.0, 0.0);
  double t_cur = 0.0;
  double t_last = 0.0;
  for (int j = 1; j <= steps; ++j) {
    const double tj = t * j / steps;
    const std::complex<double> g = smoothing_rhs(tj);
    std::complex<double> guess;
    if (j == 1) {
      guess = {tj, tj * tj / 6.0};
    } else {
      guess = c + (c - last) * ((tj - t_cur) / (t_cur - t_last));
    }
    std::complex<double> x = guess;
    for (int it = 0; it < 60; ++it) {
      const std::complex<double> dx = (0.5 * x * x - g) / x;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * std::abs(x)) break;
    }
    last = c;
    t_last = t_cur;
    c = x;
    t_cur = tj;
  }
  out.c = c;
  out.residual = std::abs(0.5 * c * c - smoothing_rhs(t));
  if (!(out.residual < 1e-13)) throw ConvergenceError("c(phi): Newton iteration did not converge");
  return out;
}

SmoothingCoefficient c_of_phi(double phi) {
  if (!(phi > 0.0 && phi < 2 * M_PI)) throw DomainError("c(phi): phi must lie in (0, 2 pi)");
  SmoothingCoefficient out = c_of_offset(phi - M_PI);
  out.phi = phi;
  return out;
}

AsymptoticValue terminant_asymptotic(const TerminantQuery& q, const PrecisionContext& ctx,
                                     std::optional<AsymptoticRegime> force) {
  q.validate();
  ContextScope scope(ctx);
  const double zmod = q.z.modulus().to_double();
  if (zmod < 10.0) throw DomainError("terminant_asymptotic: needs |z| >= 10");
  const double ratio = hp::abs(q.nu).to_double() / zmod;
  if (ratio < 0.5 || ratio > 2.0) throw DomainError("terminant_asymptotic: |nu|/|z| outside [0.5, 2]");

  const double phi = q.z.argument().to_double();
  const bool in_away = phi >= -M_PI + kRegimeMargin && phi <= M_PI - kRegimeMargin;
  const bool in_smoothing = phi >= kRegimeMargin && phi <= 2 * M_PI - kRegimeMargin;
  AsymptoticRegime regime;
  if (force) {
    regime = *force;
    if ((regime == AsymptoticRegime::away && !in_away) || (regime == AsymptoticRegime::smoothing && !in_smoothing)) {
      throw DomainError("terminant_asymptotic: arg z outside the requested regime");
    }
  } else if (in_smoothing) {
    regime = AsymptoticRegime::smoothing;
  } else if (in_away) {
    regime = AsymptoticRegime::away;
  } else {
    throw DomainError("terminant_asymptotic: arg z outside both regimes");
  }

  if (regime == AsymptoticRegime::smoothing) {
    const SmoothingCoefficient c = c_of_phi(phi);
    const Complex w = Complex(c.c) * hp::sqrt(q.z.modulus() / 2);
    return {Complex(Real(0.5)) + erf_hp(w, ctx) / 2, regime};
  }
  const Real pi = hp::pi();
  const Real& ph = q.z.argument();
  const Complex lead = hp::exp(Complex(Real(), pi - ph) * q.nu);
  const Complex denom = Complex(1) + hp::expi(-ph);
  const Complex decay = hp::exp(-q.z.value() - Complex(q.z.modulus()));
  const Complex value = Complex(Real(), Real(-1)) * lead / denom * decay / hp::sqrt(pi * 2 * q.z.modulus());
  return {value, regime};
}

}  // namespace zeta
