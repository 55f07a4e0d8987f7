#include "zeta/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "zeta/bernoulli.hpp"
#include "zeta/errors.hpp"

namespace zeta {

using hp::Complex;
using hp::Real;

namespace {

void require_even_m(int m, const char* who) {
  if (m < 2 || m % 2 != 0) {
    throw std::invalid_argument(std::string(who) + ": m must be an even integer >= 2, got " +
                                std::to_string(m));
  }
}

Real factorial(unsigned long n) {
  Real r;
  mpfr_fac_ui(r.get(), n, MPFR_RNDN);
  return r;
}

// |B_m| (2 pi)^m / (2 m!) at the current working precision.
Real zeta_even_current(int m) {
  const Real bm = bernoulli_even_real(m / 2);
  const Real two_pi_m = hp::pow(hp::pi() * 2, static_cast<long>(m));
  return hp::abs(bm) * two_pi_m / (factorial(static_cast<unsigned long>(m)) * 2);
}

constexpr double kLn10 = 2.302585092994046;

}  // namespace

Real zeta_even(int m, const PrecisionContext& ctx) {
  require_even_m(m, "zeta_even");
  ContextScope scope(ctx);
  return zeta_even_current(m);
}

Real hurwitz_zeta_integer(int m, long base, const PrecisionContext& ctx) {
  require_even_m(m, "hurwitz_zeta_integer");
  if (base < 1) throw std::invalid_argument("hurwitz_zeta_integer: base must be >= 1");
  ContextScope scope(ctx);
  if (base == 1) return zeta_even_current(m);

  const int digits = ctx.working_digits();
  const double terms_needed =
      static_cast<double>(base) * (std::pow(10.0, static_cast<double>(digits) / m) - 1.0);
  if (terms_needed <= 4096.0) {
    // Direct summation; stop once the integral tail bound j^{1-m}/(m-1) is
    // below the working epsilon relative to the sum.
    const Real eps = hp::ldexp(Real(1), -static_cast<long>(ctx.working_bits()));
    Real sum;
    for (long j = base;; ++j) {
      const Real term = hp::pow(Real(j), static_cast<long>(-m));
      sum += term;
      const Real tail = term * j / (m - 1);
      if (tail < eps * sum) break;
    }
    return sum;
  }

  const int extra = static_cast<int>(std::ceil(m * std::log10(static_cast<double>(base)))) + 5;
  Real result;
  {
    hp::WorkingPrecision wp(hp::digits_to_bits(digits + extra));
    Real acc = zeta_even_current(m);
    for (long j = 1; j < base; ++j) acc -= hp::pow(Real(j), static_cast<long>(-m));
    result = std::move(acc);
  }
  return result + Real();  // round back to working precision
}

Complex gamma_complex(const Complex& z, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  if (z.re() < Real(0.5)) {
    const Real n = hp::round(z.re());
    const Real dist = hp::abs(z - Complex(n));
    if (n.sign() <= 0 && dist < ctx.tol()) {
      throw PoleError("gamma_complex: argument at a pole", dist.to_double());
    }
  }

  const double tau = std::ceil(0.9 * ctx.working_digits());
  const long shift = std::max(0L, static_cast<long>(std::ceil(tau - z.re().to_double())));
  // log Gamma(w) reaches |w| log|w|; its absolute error becomes relative error
  // of the exponential, so carry a few dozen extra bits.
  hp::WorkingPrecision wp(ctx.working_bits() + 48);

  Complex product(1);
  for (long j = 0; j < shift; ++j) product = product * (z + Complex(Real(j)));
  const Complex w = z + Complex(Real(shift));

  const Complex log_w = hp::log(w);
  Complex log_gamma = (w - Complex(Real(0.5))) * log_w - w + Complex(hp::log(hp::pi() * 2) / 2);
  const Real eps = hp::ldexp(Real(1), -static_cast<long>(hp::working_bits()));
  const Complex w2 = w * w;
  Complex w_pow = w;  // w^{2k-1}
  constexpr int kMaxTerms = 2000;
  bool converged = false;
  for (int k = 1; k <= kMaxTerms; ++k) {
    const Real coeff = bernoulli_even_real(k) / (static_cast<long>(2 * k) * (2 * k - 1));
    const Complex term = Complex(coeff) / w_pow;
    log_gamma += term;
    if (hp::abs(term) < eps) {
      converged = true;
      break;
    }
    w_pow = w_pow * w2;
  }
  if (!converged) throw ConvergenceError("gamma_complex: Stirling series did not converge");

  Complex result = hp::exp(log_gamma) / product;
  return result;
}

Complex erf_hp(const Complex& z, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  if (z.is_zero()) return {};
  const double mod2 = hp::norm(z).to_double();
  const int extra = static_cast<int>(std::ceil(mod2 / kLn10)) + 10;
  Complex sum;
  {
    hp::WorkingPrecision wp(hp::digits_to_bits(ctx.working_digits() + extra));
    const Real eps = hp::ldexp(Real(1), -static_cast<long>(hp::working_bits()));
    const Complex minus_z2 = -(z * z);
    Complex power = z;  // (-1)^n z^{2n+1} / n!
    Complex acc;
    for (long n = 0;; ++n) {
      const Complex term = power / (2 * n + 1);
      acc += term;
      if (static_cast<double>(n) > mod2 && hp::abs(term) <= eps * hp::abs(acc)) break;
      power = power * minus_z2 / (n + 1);
    }
    sum = acc * (Real(2) / hp::sqrt(hp::pi()));
  }
  return sum + Complex();
}

}  // namespace zeta
