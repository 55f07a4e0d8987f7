#include "zeta/stokes.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "phase.hpp"
#include "zeta/errors.hpp"

namespace zeta {

using detail::half_turn_phase;
using detail::i_times;
using detail::two_pi_pow;
using hp::Complex;
using hp::Real;

double erf_approx(int n, double abs_a, double theta, ErfMode mode) {
  const double first = std::erf((theta - M_PI / 2) * std::sqrt(M_PI * n * abs_a));
  if (mode == ErfMode::single_line) return 0.5 + 0.5 * first;
  const std::complex<double> a = std::polar(abs_a, theta);
  const double delta = std::arg(1.0 - 1.0 / a);
  const double abs_ap = std::abs(1.0 - a);
  const double second = std::erf((theta + delta - M_PI / 2) * std::sqrt(M_PI * n * abs_ap));
  return 1.0 + 0.5 * first - 0.5 * second;
}

MinimumResult find_minimum(int n, double abs_a) {
  if (abs_a < 1.0) throw DomainError("find_minimum: requires |a| >= 1");
  constexpr int kGrid = 400;
  const double lo = 0.02 * M_PI;
  const double hi = 0.98 * M_PI;
  const double h = (hi - lo) / (kGrid - 1);
  std::vector<double> v(kGrid);
  for (int i = 0; i < kGrid; ++i) v[i] = erf_approx(n, abs_a, lo + h * i);

  const auto best = std::min_element(v.begin(), v.end());
  const int ib = static_cast<int>(best - v.begin());
  if (ib == 0 || ib == kGrid - 1) throw DomainError("find_minimum: minimum on the scan boundary");
  // Descending up to the minimum, ascending after it; the slack absorbs
  // rounding on the plateaus, where erf saturates.
  constexpr double kSlack = 1e-12;
  for (int i = 1; i < kGrid; ++i) {
    const bool bad = i <= ib ? v[i] > v[i - 1] + kSlack : v[i] < v[i - 1] - kSlack;
    if (bad) throw DomainError("find_minimum: grid is not unimodal");
  }

  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double a = lo + h * (ib - 1);
  double b = lo + h * (ib + 1);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = erf_approx(n, abs_a, c);
  double fd = erf_approx(n, abs_a, d);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = erf_approx(n, abs_a, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = erf_approx(n, abs_a, d);
    }
  }
  const double theta0 = 0.5 * (a + b);
  return {n, abs_a, theta0, erf_approx(n, abs_a, theta0)};
}

Complex stokes_multiplier_bernoulli(const ZetaPoint& point, int n1, int n1_prime, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  const Complex& s = point.s();
  const Complex ft = f_tilde_reference(point, ctx);
  const Complex scale = Complex(1) / two_pi_pow(s);
  const Complex bracket = ft - half_turn_phase(s, 1) * scale * poincare_partial_sum(s, point.a(), n1, ctx) -
                          half_turn_phase(s, -1) * scale * poincare_partial_sum(s, point.a_prime(), n1_prime, ctx);
  return hp::exp(-(i_times(point.a().value()) * (hp::pi() * 2))) * bracket;
}

MultiplierSample stokes_multiplier(int n, const ZetaPoint& point, const PrecisionContext& ctx,
                                   const std::optional<TruncationPlan>& pinned) {
  if (n < 1) throw DomainError("stokes_multiplier: n must be >= 1");
  ContextScope scope(ctx);
  const Complex& s = point.s();
  if (s.re() <= Real(1.1)) throw DomainError("stokes_multiplier: requires Re(s) > 1.1");

  MultiplierSample out;
  out.theta_over_pi = (point.theta() / hp::pi()).to_double();
  const double abs_a = point.a().modulus().to_double();
  out.approx = erf_approx(n, abs_a, point.theta().to_double());

  TruncationPlan plan;
  if (pinned) {
    pinned->validate();
    if (pinned->kmax() < n || pinned->nk_prime.size() != pinned->nk.size()) {
      throw DomainError("stokes_multiplier: pinned plan must cover scales 1.." + std::to_string(n) + " for a and a'");
    }
    plan.nk.assign(pinned->nk.begin(), pinned->nk.begin() + n);
    plan.nk_prime.assign(pinned->nk_prime.begin(), pinned->nk_prime.begin() + n);
  } else {
    plan = make_optimal_plan(point, n, ctx);
  }
  out.plan = plan;

  const Complex ft = f_tilde_reference(point, ctx);
  const double im_a = point.a().value().im().to_double();
  // log10 of the size of the exponential being recovered
  const double log10_target = -2 * M_PI * n * im_a / std::log(10.0) + std::log10(std::max(out.approx, 0.1));
  const double log10_floor = ctx.log10_tol() + ft.log10_abs();
  if (log10_target < log10_floor) {
    const int needed = static_cast<int>(std::ceil(10.0 + ft.log10_abs() - log10_target));
    throw InsufficientPrecisionError("stokes_multiplier: e^{2 pi i n a} lies below the working tolerance of F~",
                                     needed);
  }

  const Complex series_a = rearranged_double_sum(point, plan, ctx, Side::a);
  const Complex series_ap = rearranged_double_sum(point, plan, ctx, Side::a_prime);
  Complex bracket = ft - half_turn_phase(s, 1) * series_a - half_turn_phase(s, -1) * series_ap;
  out.diagnostics["f_tilde"] = hp::abs(ft).to_double();
  out.diagnostics["series_a"] = hp::abs(series_a).to_double();
  out.diagnostics["series_a_prime"] = hp::abs(series_ap).to_double();

  const Complex sm1 = s - Complex(1);
  for (int k = 1; k < n; ++k) {
    const size_t i = static_cast<size_t>(k - 1);
    const Complex rk = script_r_k(k, point, plan.nk[i], plan.nk_prime[i], ctx);
    out.diagnostics["script_r_" + std::to_string(k)] = hp::abs(rk).to_double();
    bracket -= hp::exp(sm1 * hp::log(Real(k))) * rk;
  }
  out.diagnostics["peeled"] = hp::abs(bracket).to_double();

  const Complex e_n = hp::exp(-(i_times(point.a().value()) * (hp::pi() * 2 * n)));
  const Complex weight = hp::exp(-(sm1 * hp::log(Real(n))));
  out.exact = e_n * weight * bracket;

  if (n == 1) {
    const Complex alt = stokes_multiplier_bernoulli(point, plan.nk[0], plan.nk_prime[0], ctx);
    // Both forms recover the same exponential; compare on the scale of F~.
    const Real residual = hp::abs(alt - out.exact) / hp::abs(e_n) / hp::abs(ft);
    out.diagnostics["bernoulli_residual"] = residual.to_double();
    if (!(residual.log10_abs() < -ctx.digits() + 12)) {
      throw ConvergenceError("stokes_multiplier: Bernoulli form disagrees by " + residual.to_string(3));
    }
  }
  return out;
}

double SweepSpec::theta_over_pi(int i) const {
  if (count == 1) return lo;
  return lo + (hi - lo) * i / (count - 1);
}

namespace {

void check_spec(const SweepSpec& spec) {
  if (spec.count < 1) throw DomainError("sweep: count must be >= 1");
  if (!(spec.lo > 0.0 && spec.hi < 1.0 && spec.lo <= spec.hi)) {
    throw DomainError("sweep: theta range must lie inside (0, 1) in units of pi");
  }
  if (spec.n < 1) throw DomainError("sweep: n must be >= 1");
}

MultiplierSample sample_at(const SweepSpec& spec, int i, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  MultiplierSample out;
  out.theta_over_pi = spec.theta_over_pi(i);
  try {
    const Real lo(shortest_decimal(spec.lo));
    const Real hi(shortest_decimal(spec.hi));
    const Real t = spec.count == 1 ? lo : lo + (hi - lo) * i / (spec.count - 1);
    const ZetaPoint point(spec.s, Real(shortest_decimal(spec.abs_a)), t * hp::pi(), ctx);
    out = stokes_multiplier(spec.n, point, ctx, spec.pinned);
    out.theta_over_pi = t.to_double();
  } catch (const InsufficientPrecisionError& e) {
    out.error = e.what();
    out.required_digits = e.required_digits();
  } catch (const ZetaError& e) {
    out.error = e.what();
  }
  if (!out.ok()) out.approx = erf_approx(spec.n, spec.abs_a, out.theta_over_pi * M_PI);
  return out;
}

}  // namespace

std::vector<MultiplierSample> sweep(const SweepSpec& spec, const PrecisionContext& ctx) {
  check_spec(spec);
  std::vector<MultiplierSample> out(static_cast<size_t>(spec.count));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < spec.count; ++i) out[static_cast<size_t>(i)] = sample_at(spec, i, ctx);
  return out;
}

std::vector<MultiplierSample> sweep_serial(const SweepSpec& spec, const PrecisionContext& ctx) {
  check_spec(spec);
  std::vector<MultiplierSample> out;
  out.reserve(static_cast<size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) out.push_back(sample_at(spec, i, ctx));
  return out;
}

std::optional<CaptionSetup> caption_setup(const std::string& name) {
  if (name == "fig1a") return CaptionSetup{name, 1, 6.0, 3.0, 0.0, {{17}, {17}}};
  if (name == "fig1b") return CaptionSetup{name, 1, 8.0, 2.0, 0.5, {{25}, {24}}};
  if (name == "fig1c") return CaptionSetup{name, 2, 6.0, 2.0, 0.0, {{18, 36}, {18, 37}}};
  return std::nullopt;
}

double half_depth_width(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 3) throw DomainError("half_depth_width: need matching samples");
  const size_t ib = static_cast<size_t>(std::min_element(y.begin(), y.end()) - y.begin());
  const double level = 1.0 - (1.0 - y[ib]) / 2;
  if (!(y[ib] < 1.0)) throw DomainError("half_depth_width: no dip below 1");
  size_t j = ib;
  while (j > 0 && y[j] < level) --j;
  if (y[j] < level) throw DomainError("half_depth_width: dip not bracketed on the left");
  const double left = x[j] + (level - y[j]) * (x[j + 1] - x[j]) / (y[j + 1] - y[j]);
  j = ib;
  while (j + 1 < y.size() && y[j] < level) ++j;
  if (y[j] < level) throw DomainError("half_depth_width: dip not bracketed on the right");
  const double right = x[j - 1] + (level - y[j - 1]) * (x[j] - x[j - 1]) / (y[j] - y[j - 1]);
  return right - left;
}

}  // namespace zeta
