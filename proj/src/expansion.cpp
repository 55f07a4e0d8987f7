#include "zeta/expansion.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <sstream>

#include "phase.hpp"
#include "zeta/bernoulli.hpp"
#include "zeta/errors.hpp"
#include "zeta/special.hpp"
#include "zeta/terminant.hpp"

namespace zeta {

using detail::half_turn_phase;
using detail::i_times;
using detail::two_pi_pow;
using hp::Complex;
using hp::Real;

namespace {

// f(1) .. f(count), evaluated concurrently when not already inside a parallel
// region. Each slot is written by exactly one iteration, so the caller can sum
// in ascending k independently of the schedule.
std::vector<Complex> per_scale(int count, const std::function<Complex(int)>& f) {
  std::vector<Complex> out(static_cast<size_t>(count));
  const mpfr_prec_t bits = hp::working_bits();
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (count > 1 && !omp_in_parallel())
  for (int k = 1; k <= count; ++k) {
    try {
      hp::WorkingPrecision wp(bits);
      out[static_cast<size_t>(k - 1)] = f(k);
    } catch (...) {
#pragma omp critical(zeta_per_scale_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

Complex sum_ascending(const std::vector<Complex>& v) {
  Complex acc;
  for (const Complex& x : v) acc += x;
  return acc;
}

Complex k_pow(int k, const Complex& exponent) { return hp::exp(exponent * hp::log(Real(k))); }

// e^{2 pi i k a}
Complex exp_two_pi_i_k(int k, const RayComplex& a) { return hp::exp(i_times(a.value()) * (hp::pi() * 2 * k)); }

Complex term_t(const Complex& nu, const Real& modulus, const Real& argument, const PrecisionContext& ctx) {
  return terminant(TerminantQuery{nu, RayComplex(modulus, argument)}, ctx);
}

// (1/pi) sum over r in [from, to) of A_r zeta(2r+2, base); negative range subtracts.
Complex hurwitz_block(const std::vector<Complex>& coeff, int from, int to, long base, const PrecisionContext& ctx) {
  Complex acc;
  const int lo = std::min(from, to);
  const int hi = std::max(from, to);
  for (int r = lo; r < hi; ++r) acc += coeff[static_cast<size_t>(r)] * hurwitz_zeta_integer(2 * r + 2, base, ctx);
  if (from > to) acc = -acc;
  return acc / hp::pi();
}

// Bound on sum_{k>K} k^{s-1} R_k(a; M) without any prefactor.
Real tail_estimate(const Complex& s, const RayComplex& a, int kmax, int m, const std::vector<Complex>& coeff,
                   const PrecisionContext& ctx) {
  const Real im_a = hp::abs(a.value().im());
  const Real sigma = s.re() - 1;
  const Real phase = hp::exp(hp::pi() * hp::abs(s.im()));
  Real geometric;
  const Real eps = detail::working_eps();
  for (long k = kmax + 1;; ++k) {
    const Real term = hp::exp(sigma * hp::log(Real(k)) - hp::pi() * 2 * k * im_a);
    geometric += term;
    if (term <= eps * geometric || k > kmax + 100000) break;
  }
  const Real algebraic =
      hp::abs(coeff[static_cast<size_t>(m)]) * hurwitz_zeta_integer(2 * m + 2, kmax + 1, ctx) * 4 / hp::pi();
  return (algebraic + geometric * 2) * phase;
}

void require_plan(const TruncationPlan& plan, bool need_prime) {
  plan.validate();
  if (need_prime && plan.nk_prime.size() != plan.nk.size()) {
    throw DomainError("plan: N'_k required for every scale");
  }
}

struct TailPiece {
  Complex value;  // (1/pi) sum_{r=from}^{M-1} A_r zeta(2r+2, K+1)
  Real bound;
  int index;
};

TailPiece tail_piece(const Complex& s, const RayComplex& a, int kmax, int from, const PrecisionContext& ctx) {
  const int m = optimal_truncation(kmax + 1, s, a, ctx);
  const std::vector<Complex> coeff = a_r_sequence(std::max(m, from) + 1, s, a, ctx);
  return {hurwitz_block(coeff, from, m, kmax + 1, ctx), tail_estimate(s, a, kmax, m, coeff, ctx), m};
}

// Smallest K' > K whose tail estimate clears `limit`.
int required_kmax(const Complex& s, const RayComplex& a, int kmax, const Real& limit, const PrecisionContext& ctx) {
  for (int k = kmax + 1; k < kmax + 2000; ++k) {
    const int m = optimal_truncation(k + 1, s, a, ctx);
    const std::vector<Complex> coeff = a_r_sequence(m + 1, s, a, ctx);
    if (tail_estimate(s, a, k, m, coeff, ctx) < limit) return k;
  }
  return kmax + 2000;
}

Complex prefactor_value(const Complex& s, Prefactor p) {
  return p == Prefactor::two_pi_s ? two_pi_pow(s) : two_pi_pow(s * 2);
}

// sum_{k<=K} k^{s-1} R_k(a; N_k)
Complex remainder_sum(const Complex& s, const RayComplex& a, const std::vector<int>& nk, const PrecisionContext& ctx) {
  const Complex sm1 = s - Complex(1);
  return sum_ascending(per_scale(static_cast<int>(nk.size()), [&](int k) {
    return k_pow(k, sm1) * remainder_rk(k, s, a, nk[static_cast<size_t>(k - 1)], ctx);
  }));
}

}  // namespace

void TruncationPlan::validate() const {
  if (nk.empty()) throw DomainError("plan: needs at least one scale");
  if (!nk_prime.empty() && nk_prime.size() != nk.size()) throw DomainError("plan: N and N' lengths differ");
  for (int v : nk) {
    if (v < 1) throw DomainError("plan: truncation indices must be >= 1");
  }
  for (int v : nk_prime) {
    if (v < 1) throw DomainError("plan: truncation indices must be >= 1");
  }
}

bool TruncationPlan::nondecreasing() const noexcept {
  return std::is_sorted(nk.begin(), nk.end()) && std::is_sorted(nk_prime.begin(), nk_prime.end());
}

TruncationPlan TruncationPlan::swapped() const { return {nk_prime, nk}; }

std::string TruncationPlan::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < nk.size(); ++i) os << (i ? ";" : "") << nk[i];
  if (!nk_prime.empty()) {
    os << '|';
    for (size_t i = 0; i < nk_prime.size(); ++i) os << (i ? ";" : "") << nk_prime[i];
  }
  return os.str();
}

GeometryPack geometry(const RayComplex& a, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  Complex xi = Complex(1) - Complex(1) / a.value();
  Real delta = hp::arg(xi);
  return {std::move(xi), std::move(delta)};
}

Complex a_r_coefficient(int r, const Complex& s, const RayComplex& a, const PrecisionContext& ctx) {
  if (r < 0) throw DomainError("A_r: r must be >= 0");
  ContextScope scope(ctx);
  const Complex order = s + Complex(Real(2 * r + 1));
  const Complex g = gamma_complex(order, ctx);
  const Complex p = pow_ray(a.scaled(hp::pi() * 2), order, ctx);
  const Complex v = g / p;
  return r % 2 == 0 ? v : -v;
}

std::vector<Complex> a_r_sequence(int count, const Complex& s, const RayComplex& a, const PrecisionContext& ctx) {
  std::vector<Complex> out;
  if (count <= 0) return out;
  out.reserve(static_cast<size_t>(count));
  out.push_back(a_r_coefficient(0, s, a, ctx));
  ContextScope scope(ctx);
  const Complex w = a.value() * (hp::pi() * 2);
  const Complex inv_w2 = Complex(1) / (w * w);
  for (int r = 0; r + 1 < count; ++r) {
    const Complex f = (s + Complex(Real(2 * r + 1))) * (s + Complex(Real(2 * r + 2)));
    out.push_back(-(out.back() * f * inv_w2));
  }
  return out;
}

int optimal_truncation(int k, const Complex& s, const RayComplex& a, const PrecisionContext& ctx) {
  if (k < 1) throw DomainError("optimal_truncation: k must be >= 1");
  ContextScope scope(ctx);
  if (a.modulus() < Real(1)) throw DomainError("optimal_truncation: requires |a| >= 1");
  // |term_{r+1} / term_r| = |(2r+s+1)(2r+s+2)| / (2 pi k |a|)^2; the least
  // term is the first r >= 1 whose successor is not smaller (ties keep r).
  const Real w = a.modulus() * hp::pi() * 2 * k;
  const Real w2 = w * w;
  for (int r = 1; r < 1'000'000; ++r) {
    const Complex f = (s + Complex(Real(2 * r + 1))) * (s + Complex(Real(2 * r + 2)));
    if (hp::abs(f) >= w2) return r;
  }
  throw ConvergenceError("optimal_truncation: no least term found");
}

TruncationPlan make_optimal_plan(const ZetaPoint& point, int kmax, const PrecisionContext& ctx) {
  if (kmax < 1) throw DomainError("make_optimal_plan: kmax must be >= 1");
  TruncationPlan plan;
  for (int k = 1; k <= kmax; ++k) {
    plan.nk.push_back(optimal_truncation(k, point.s(), point.a(), ctx));
    plan.nk_prime.push_back(optimal_truncation(k, point.s(), point.a_prime(), ctx));
  }
  return plan;
}

TruncationPlan make_optimal_plan(const Complex& s, const RayComplex& a, int kmax, const PrecisionContext& ctx) {
  if (kmax < 1) throw DomainError("make_optimal_plan: kmax must be >= 1");
  TruncationPlan plan;
  for (int k = 1; k <= kmax; ++k) plan.nk.push_back(optimal_truncation(k, s, a, ctx));
  return plan;
}

int default_kmax(const RayComplex& a, const PrecisionContext& ctx, int min_k) {
  ContextScope scope(ctx);
  const double im_a = std::fabs(a.value().im().to_double());
  if (!(im_a > 0)) throw DomainError("default_kmax: a must be off the real axis");
  const double needed = -ctx.log10_tol() * std::log(10.0) / (2 * M_PI * im_a);
  return std::max(min_k, std::max(1, static_cast<int>(std::floor(needed)) + 1));
}

Complex remainder_rk(int k, const Complex& s, const RayComplex& a, int nk, const PrecisionContext& ctx) {
  if (k < 1 || nk < 1) throw DomainError("remainder_rk: k and N_k must be >= 1");
  ContextScope scope(ctx);
  const Complex nu = s + Complex(Real(2 * nk));
  const Real modulus = a.modulus() * hp::pi() * 2 * k;
  const Real quarter = hp::pi() / 2;
  const Complex tp = term_t(nu, modulus, a.argument() + quarter, ctx);
  const Complex tm = term_t(nu, modulus, a.argument() - quarter, ctx);
  const Complex e = exp_two_pi_i_k(k, a);
  const Complex inner = e * half_turn_phase(s, 1) * tp - half_turn_phase(s, -1) * tm / e;
  return half_turn_phase(s, -2) * inner;
}

Complex z_improved(const Complex& s, const RayComplex& a, const TruncationPlan& plan, const PrecisionContext& ctx,
                   ZParts* parts, Prefactor prefactor) {
  require_plan(plan, false);
  ContextScope scope(ctx);
  const int kmax = plan.kmax();
  const int nmax = *std::max_element(plan.nk.begin(), plan.nk.end());
  const std::vector<Complex> coeff = a_r_sequence(nmax, s, a, ctx);

  Complex algebraic;
  for (int k = 1; k <= kmax; ++k) {
    Complex inner;
    const Real inv_k2 = Real(1) / (Real(k) * k);
    Real kp = inv_k2;  // k^{-2r-2}
    for (int r = 0; r < plan.nk[static_cast<size_t>(k - 1)]; ++r) {
      inner += coeff[static_cast<size_t>(r)] * kp;
      kp = kp * inv_k2;
    }
    algebraic += inner;
  }
  algebraic = algebraic / hp::pi();

  const Complex remainder = remainder_sum(s, a, plan.nk, ctx);
  const TailPiece tail = tail_piece(s, a, kmax, 0, ctx);
  const Complex p = prefactor_value(s, prefactor);
  const Complex total = p * (algebraic + remainder + tail.value);

  const Real bound = hp::abs(p) * tail.bound;
  const Real limit = ctx.tol() * hp::abs(total);
  if (!(bound < limit)) {
    throw TailBoundError("z_improved: neglected scales beyond kMax = " + std::to_string(kmax) + " exceed tolerance",
                         required_kmax(s, a, kmax, limit / hp::abs(p), ctx));
  }
  if (parts != nullptr) {
    parts->algebraic = p * algebraic;
    parts->remainder = p * remainder;
    parts->tail = p * tail.value;
    parts->tail_bound = bound;
    parts->tail_index = tail.index;
  }
  return total;
}

Complex poincare_partial_sum(const Complex& s, const RayComplex& a, int n, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  Complex g = gamma_complex(s + Complex(1), ctx);  // Gamma(2j+s-1) at j = 1
  Complex ap = pow_ray(a, -(s + Complex(1)), ctx);  // a^{-(2j+s-1)}
  const Complex inv_a2 = Complex(1) / (a.value() * a.value());
  Real fact(2);  // (2j)!
  Complex acc;
  for (int j = 1; j <= n; ++j) {
    acc += g * ap * (bernoulli_even_real(j) / fact);
    g = g * (s + Complex(Real(2 * j - 1))) * (s + Complex(Real(2 * j)));
    ap = ap * inv_a2;
    fact = fact * ((2L * j + 1) * (2L * j + 2));
  }
  return acc;
}

Complex z_equal_truncation(const Complex& s, const RayComplex& a, int n, int kmax, const PrecisionContext& ctx,
                           ZParts* parts) {
  if (n < 1 || kmax < 1) throw DomainError("z_equal_truncation: N and kMax must be >= 1");
  ContextScope scope(ctx);
  const std::vector<int> nk(static_cast<size_t>(kmax), n);
  const Complex p = two_pi_pow(s);
  const Complex algebraic = poincare_partial_sum(s, a, n, ctx);
  const Complex remainder = p * remainder_sum(s, a, nk, ctx);
  const TailPiece tail = tail_piece(s, a, kmax, n, ctx);
  const Complex tail_value = p * tail.value;
  const Complex total = algebraic + remainder + tail_value;

  const Real bound = hp::abs(p) * tail.bound;
  const Real limit = ctx.tol() * hp::abs(total);
  if (!(bound < limit)) {
    throw TailBoundError("z_equal_truncation: neglected scales beyond kMax exceed tolerance",
                         required_kmax(s, a, kmax, limit / hp::abs(p), ctx));
  }
  if (parts != nullptr) {
    parts->algebraic = algebraic;
    parts->remainder = remainder;
    parts->tail = tail_value;
    parts->tail_bound = bound;
    parts->tail_index = tail.index;
  }
  return total;
}

Complex script_r_k(int k, const ZetaPoint& point, int nk, int nk_prime, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  const Complex& s = point.s();
  return half_turn_phase(s, 1) * remainder_rk(k, s, point.a(), nk, ctx) +
         half_turn_phase(s, -1) * remainder_rk(k, s, point.a_prime(), nk_prime, ctx);
}

namespace {

struct RkTerminants {
  Complex e;          // e^{2 pi i k a}
  Complex t_plus;     // T_nu(2 pi i k a)
  Complex t_minus;    // T_nu(-2 pi i k a)
  Complex tp_plus;    // T_nu'(2 pi i k a')
  Complex nu_prime;
  Real mod_prime;
};

RkTerminants common_terminants(int k, const ZetaPoint& point, int nk, int nk_prime, const PrecisionContext& ctx) {
  const Complex& s = point.s();
  const Real quarter = hp::pi() / 2;
  const Complex nu = s + Complex(Real(2 * nk));
  const Complex nu_p = s + Complex(Real(2 * nk_prime));
  const Real mod = point.a().modulus() * hp::pi() * 2 * k;
  const Real mod_p = point.a_prime().modulus() * hp::pi() * 2 * k;
  return {exp_two_pi_i_k(k, point.a()),
          term_t(nu, mod, point.theta() + quarter, ctx),
          term_t(nu, mod, point.theta() - quarter, ctx),
          term_t(nu_p, mod_p, point.a_prime().argument() + quarter, ctx),
          nu_p,
          mod_p};
}

Complex leading_group(int k, const ZetaPoint& point, const RkTerminants& t, const PrecisionContext& ctx) {
  const GeometryPack g = geometry(point.a(), ctx);
  const Real mod = point.a().modulus() * hp::abs(g.xi) * hp::pi() * 2 * k;
  const Complex t_xi = term_t(t.nu_prime, mod, point.theta() + g.delta + hp::pi() / 2, ctx);
  return t.e * (t.t_plus - t_xi + Complex(1));
}

}  // namespace

Complex script_r_k_leading(int k, const ZetaPoint& point, int nk, int nk_prime, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  const Complex e = exp_two_pi_i_k(k, point.a());
  const Complex nu = point.s() + Complex(Real(2 * nk));
  const Complex nu_p = point.s() + Complex(Real(2 * nk_prime));
  const Real mod = point.a().modulus() * hp::pi() * 2 * k;
  const Complex t_plus = term_t(nu, mod, point.theta() + hp::pi() / 2, ctx);
  RkTerminants t{e, t_plus, Complex(), Complex(), nu_p, Real()};
  return leading_group(k, point, t, ctx);
}

Complex script_r_k_form(ScriptRForm form, int k, const ZetaPoint& point, int nk, int nk_prime,
                        const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  const Complex& s = point.s();
  const RkTerminants t = common_terminants(k, point, nk, nk_prime, ctx);
  const Complex e_is = half_turn_phase(s, -2);  // e^{-i pi s}
  switch (form) {
    case ScriptRForm::expanded_printed: {
      const Real quarter = hp::pi() / 2;
      const Complex tp_minus = term_t(t.nu_prime, t.mod_prime, point.a_prime().argument() - quarter, ctx);
      return t.e * t.t_plus - t.e * e_is * t.t_minus + e_is / t.e * t.tp_plus - t.e * e_is * e_is * tp_minus;
    }
    case ScriptRForm::connection:
      return leading_group(k, point, t, ctx) + e_is / t.e * (t.tp_plus - t.t_minus);
    case ScriptRForm::connection_printed:
      return leading_group(k, point, t, ctx) + e_is / t.e * (t.t_minus - t.tp_plus);
  }
  throw DomainError("script_r_k_form: unknown form");
}

Complex rearranged_double_sum(const ZetaPoint& point, const TruncationPlan& plan, const PrecisionContext& ctx,
                              Side side) {
  require_plan(plan, side == Side::a_prime);
  const std::vector<int>& nk = side == Side::a ? plan.nk : plan.nk_prime;
  if (!std::is_sorted(nk.begin(), nk.end())) throw DomainError("rearranged_double_sum: plan must be nondecreasing");
  ContextScope scope(ctx);
  const RayComplex& a = side == Side::a ? point.a() : point.a_prime();
  const std::vector<Complex> coeff = a_r_sequence(nk.back(), point.s(), a, ctx);
  Complex acc;
  int prev = 0;
  for (size_t m = 0; m < nk.size(); ++m) {
    acc += hurwitz_block(coeff, prev, nk[m], static_cast<long>(m + 1), ctx);
    prev = nk[m];
  }
  return acc;
}

Complex f_tilde_expansion(const ZetaPoint& point, const TruncationPlan& plan, const PrecisionContext& ctx) {
  require_plan(plan, true);
  ContextScope scope(ctx);
  const Complex& s = point.s();
  const int kmax = plan.kmax();
  const TailPiece tail_a = tail_piece(s, point.a(), kmax, plan.nk.back(), ctx);
  const TailPiece tail_ap = tail_piece(s, point.a_prime(), kmax, plan.nk_prime.back(), ctx);
  const Complex side_a = rearranged_double_sum(point, plan, ctx, Side::a) + tail_a.value;
  const Complex side_ap = rearranged_double_sum(point, plan, ctx, Side::a_prime) + tail_ap.value;

  const Complex sm1 = s - Complex(1);
  const Complex script = sum_ascending(per_scale(kmax, [&](int k) {
    const size_t i = static_cast<size_t>(k - 1);
    return k_pow(k, sm1) * script_r_k(k, point, plan.nk[i], plan.nk_prime[i], ctx);
  }));
  const Complex total = half_turn_phase(s, 1) * side_a + half_turn_phase(s, -1) * side_ap + script;

  const Real bound = hp::abs(half_turn_phase(s, 1)) * tail_a.bound + hp::abs(half_turn_phase(s, -1)) * tail_ap.bound;
  if (!(bound < ctx.tol() * hp::abs(total))) {
    const Real limit = ctx.tol() * hp::abs(total);
    throw TailBoundError("f_tilde_expansion: neglected scales beyond kMax exceed tolerance",
                         std::max(required_kmax(s, point.a(), kmax, limit / 2, ctx),
                                  required_kmax(s, point.a_prime(), kmax, limit / 2, ctx)));
  }
  return total;
}

}  // namespace zeta
