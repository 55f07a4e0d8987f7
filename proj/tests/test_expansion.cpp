#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "zeta/errors.hpp"
#include "zeta/expansion.hpp"
#include "zeta/special.hpp"

using namespace zeta;
using hp::Complex;
using hp::Real;

namespace {

RayComplex ray_turns(double abs_a, const char* turns) {
  return RayComplex(Real(abs_a), Real(std::string(turns)) * hp::pi());
}

const double kTol = 1e-50;  // tol() at the default 60 digits

}  // namespace

TEST(ARCoefficient, Examples) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const RayComplex one(Real(1), Real(0));
  const Real two_pi = hp::pi() * 2;
  EXPECT_REL(a_r_coefficient(0, Complex(3), one, ctx), Complex(Real(6) / hp::pow(two_pi, 4)), 1e-70);
  EXPECT_REL(a_r_coefficient(1, Complex(3), one, ctx), Complex(-Real(120) / hp::pow(two_pi, 6)), 1e-70);
}

TEST(ARCoefficient, SequenceMatchesDirectAndRatio) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const Complex s(Real(2), Real("0.5"));
  const RayComplex a = ray_turns(8, "0.55");
  const std::vector<Complex> seq = a_r_sequence(30, s, a, ctx);
  for (int r : {0, 1, 7, 29}) EXPECT_REL(seq[r], a_r_coefficient(r, s, a, ctx), 1e-68) << r;
  // |A_{r+1}/A_r| = |(2r+s+1)(2r+s+2)| / (2 pi |a|)^2
  for (int r : {0, 5, 20}) {
    const Real ratio = hp::abs(seq[r + 1]) / hp::abs(seq[r]);
    const Real want = hp::abs((Complex(2 * r + 1) + s) * (Complex(2 * r + 2) + s)) / hp::pow(hp::pi() * 16, 2);
    EXPECT_LT((hp::abs(ratio - want) / want).to_double(), 1e-68) << r;
  }
}

TEST(OptimalTruncation, FigureCaptionPins) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  EXPECT_EQ(optimal_truncation(1, Complex(3), ray_turns(6, "0.5"), ctx), 17);

  const ZetaPoint b = ZetaPoint::from_turns(Complex(Real(2), Real("0.5")), 8, 0.5, ctx);
  const TruncationPlan pb = make_optimal_plan(b, 1, ctx);
  EXPECT_LE(std::abs(pb.nk[0] - 25), 1);  // least term sits at 24; the caption uses 25
  EXPECT_EQ(pb.nk_prime[0], 24);

  const ZetaPoint c = ZetaPoint::from_turns(Complex(2), 6, 0.5, ctx);
  const TruncationPlan pc = make_optimal_plan(c, 2, ctx);
  EXPECT_EQ(pc.nk, (std::vector<int>{18, 36}));
  EXPECT_EQ(pc.nk_prime, (std::vector<int>{18, 37}));
}

TEST(OptimalTruncation, NearPiKAbsA) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  for (double m : {1.0, 2.5, 6.0, 13.0}) {
    for (int k = 1; k <= 4; ++k) {
      const int n = optimal_truncation(k, Complex(Real("2.5"), Real("0.3")), ray_turns(m, "0.4"), ctx);
      EXPECT_LE(std::abs(n - static_cast<int>(std::ceil(M_PI * k * m))), 3) << m << " " << k;
    }
  }
  EXPECT_THROW(optimal_truncation(1, Complex(3), ray_turns(0.5, "0.5"), ctx), DomainError);
}

TEST(TruncationPlan, Basics) {
  const TruncationPlan p{{17, 36}, {18, 37}};
  EXPECT_EQ(p.kmax(), 2);
  EXPECT_EQ(p.to_string(), "17;36|18;37");
  EXPECT_EQ(p.swapped().nk, (std::vector<int>{18, 37}));
  EXPECT_TRUE(p.nondecreasing());
  EXPECT_FALSE((TruncationPlan{{5, 3}, {}}).nondecreasing());
  EXPECT_THROW((TruncationPlan{{}, {}}).validate(), DomainError);
  EXPECT_THROW((TruncationPlan{{0}, {}}).validate(), DomainError);
  EXPECT_THROW((TruncationPlan{{3, 4}, {3}}).validate(), DomainError);
  EXPECT_NO_THROW((TruncationPlan{{3}, {}}).validate());
}

TEST(Geometry, LargeAbsA) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const GeometryPack g = geometry(ray_turns(1000, "0.5"), ctx);
  EXPECT_LT(std::fabs(g.delta.to_double()), 2e-3);
  EXPECT_NEAR(hp::abs(g.xi).to_double(), 1.0, 1e-6);
}

TEST(Exactness, SpecPoints) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const RayComplex a = ray_turns(6, "0.45");
  const Complex ref = z_reference(Complex(3), a, ctx);
  TruncationPlan fives;
  fives.nk.assign(12, 5);
  EXPECT_REL(z_improved(Complex(3), a, fives, ctx), ref, kTol);
  EXPECT_REL(z_improved(Complex(3), a, make_optimal_plan(Complex(3), a, 12, ctx), ctx), ref, kTol);

  const Complex s(Real(2), Real("0.5"));
  const RayComplex a2 = ray_turns(8, "0.55");
  EXPECT_REL(z_improved(s, a2, make_optimal_plan(s, a2, default_kmax(a2, ctx), ctx), ctx), z_reference(s, a2, ctx),
             kTol);
}

TEST(Exactness, PlanIndependenceOnIrregularPlans) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const Complex s(Real("3.3"), Real("-0.7"));
  const RayComplex a = ray_turns(5, "0.37");
  const Complex ref = z_reference(s, a, ctx);
  const int K = default_kmax(a, ctx);
  for (int seed : {1, 2, 3}) {
    TruncationPlan p;
    for (int k = 1; k <= K; ++k) p.nk.push_back(1 + (k * 7 * seed) % 23);
    EXPECT_REL(z_improved(s, a, p, ctx), ref, kTol) << p.to_string();
  }
}

TEST(Exactness, OnlyTwoPiToTheSIsExact) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const RayComplex a = ray_turns(6, "0.5");
  const TruncationPlan p = make_optimal_plan(Complex(3), a, default_kmax(a, ctx), ctx);
  const Complex ref = z_reference(Complex(3), a, ctx);
  EXPECT_REL(z_improved(Complex(3), a, p, ctx), ref, kTol);
  double wrong = 1;
  try {
    wrong = test_support::rel_err(z_improved(Complex(3), a, p, ctx, nullptr, Prefactor::two_pi_2s), ref);
  } catch (const ZetaError&) {
  }
  EXPECT_GT(wrong, 1e-3);
}

TEST(Exactness, ShortPlanReportsRequiredKmax) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const RayComplex a = ray_turns(4, "0.5");
  try {
    z_improved(Complex(3), a, TruncationPlan{{1}, {}}, ctx);
    FAIL() << "expected TailBoundError";
  } catch (const TailBoundError& e) {
    EXPECT_GE(e.required_kmax(), 2);
    TruncationPlan p;
    p.nk.assign(static_cast<size_t>(e.required_kmax()), 1);
    EXPECT_REL(z_improved(Complex(3), a, p, ctx), z_reference(Complex(3), a, ctx), kTol);
  }
}

TEST(EqualTruncation, MatchesReferenceAndConstantPlan) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const RayComplex a = ray_turns(6, "0.5");
  const int K = default_kmax(a, ctx);
  const Complex ref = z_reference(Complex(3), a, ctx);
  ZParts eq, imp;
  const Complex v17 = z_equal_truncation(Complex(3), a, 17, K, ctx, &eq);
  EXPECT_REL(v17, ref, kTol);
  EXPECT_REL(z_equal_truncation(Complex(3), a, 1, K, ctx), ref, kTol);
  TruncationPlan constant;
  constant.nk.assign(static_cast<size_t>(K), 17);
  EXPECT_REL(z_improved(Complex(3), a, constant, ctx, &imp), v17, kTol);
  // the remainder sum runs through the same code in both forms
  EXPECT_EQ(eq.remainder, imp.remainder);
}

TEST(EqualTruncation, PoincareAloneMissesAnExponential) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const RayComplex a = ray_turns(6, "0.45");
  const double gap = hp::abs(z_reference(Complex(3), a, ctx) - poincare_partial_sum(Complex(3), a, 17, ctx)).log10_abs();
  const double scale = -2 * M_PI * 6 * std::sin(0.45 * M_PI) / std::log(10.0);
  EXPECT_NEAR(gap, scale, 3.0);
}

TEST(RemainderRk, TelescopesWithTheAlgebraicTerms) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const Complex s(3);
  const RayComplex a = ray_turns(6, "0.45");
  for (int k : {1, 2, 3}) {
    const int n = 10;
    const Complex diff = remainder_rk(k, s, a, n, ctx) - remainder_rk(k, s, a, n + 2, ctx);
    const Complex kk(k);
    const Complex added = (a_r_coefficient(n, s, a, ctx) * hp::pow(Real(k), -2 * n - 2) +
                           a_r_coefficient(n + 1, s, a, ctx) * hp::pow(Real(k), -2 * n - 4)) /
                          hp::pi();
    const Complex weight = hp::exp((s - Complex(1)) * hp::log(kk));
    EXPECT_LT((hp::abs(weight * diff - added) / hp::abs(added)).to_double(), 1e-50) << k;
  }
}

TEST(RemainderRk, MagnitudeOnStokesLine) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const RayComplex a = ray_turns(6, "0.5");
  const double r = hp::abs(remainder_rk(1, Complex(3), a, 17, ctx)).to_double();
  const double half_exp = 0.5 * std::exp(-2 * M_PI * 6);
  EXPECT_GT(r, 0.3 * half_exp);
  EXPECT_LT(r, 3.0 * half_exp);
}

TEST(ScriptR, ConnectionFormAndPrintedVariants) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const ZetaPoint p = ZetaPoint::from_turns(Complex(3), 6, 0.5, ctx);
  const TruncationPlan plan = make_optimal_plan(p, 1, ctx);
  const int n = plan.nk[0], np = plan.nk_prime[0];
  const Complex base = script_r_k(1, p, n, np, ctx);
  const Real scale = hp::abs(hp::exp(Complex(Real(0), hp::pi() * 2) * p.a().value()));
  auto resid = [&](const Complex& v) { return (hp::abs(v - base) / scale).to_double(); };
  EXPECT_LT(resid(script_r_k_form(ScriptRForm::connection, 1, p, n, np, ctx)), 1e-48);
  EXPECT_GT(resid(script_r_k_form(ScriptRForm::expanded_printed, 1, p, n, np, ctx)), 1e-6);
  EXPECT_GT(resid(script_r_k_form(ScriptRForm::connection_printed, 1, p, n, np, ctx)), 1e-6);
  const double mult = (hp::abs(base) / scale).to_double();
  EXPECT_GT(mult, 0.1);
  EXPECT_LT(mult, 1.2);
}

TEST(ScriptR, ConjugateExponentialIdentity) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const ZetaPoint p = ZetaPoint::from_turns(Complex(3), 6, 0.41, ctx);
  for (int k = 1; k <= 3; ++k) {
    const Complex i2pik(Real(0), hp::pi() * 2 * k);
    EXPECT_REL(hp::exp(i2pik * p.a_prime().value()), hp::exp(-(i2pik * p.a().value())), 1e-70) << k;
  }
}

TEST(RearrangedSum, ConstantPlanCollapses) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const ZetaPoint p = ZetaPoint::from_turns(Complex(3), 6, 0.5, ctx);
  const TruncationPlan plan{{9, 9, 9}, {9, 9, 9}};
  Complex want(0);
  for (int r = 0; r < 9; ++r) want += a_r_coefficient(r, p.s(), p.a(), ctx) * zeta_even(2 * r + 2, ctx);
  EXPECT_REL(rearranged_double_sum(p, plan, ctx, Side::a), want / hp::pi(), 1e-65);
}

TEST(RearrangedSum, MatchesDirectDoubleSum) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const ZetaPoint p = ZetaPoint::from_turns(Complex(Real("2.5"), Real("0.4")), 5, 0.46, ctx);
  const TruncationPlan plan{{3, 5, 5, 8}, {2, 2, 6, 7}};
  for (Side side : {Side::a, Side::a_prime}) {
    const RayComplex& a = side == Side::a ? p.a() : p.a_prime();
    const std::vector<int>& nk = side == Side::a ? plan.nk : plan.nk_prime;
    const std::vector<Complex> A = a_r_sequence(nk.back(), p.s(), a, ctx);
    Complex want(0);
    for (int k = 1; k <= 4; ++k) {
      for (int r = 0; r < nk[k - 1]; ++r) want += A[r] * hp::pow(Real(k), -2 * r - 2);
    }
    // scales beyond K keep N_K
    for (int r = 0; r < nk.back(); ++r) want += A[r] * hurwitz_zeta_integer(2 * r + 2, 5, ctx);
    EXPECT_REL(rearranged_double_sum(p, plan, ctx, side), want / hp::pi(), 1e-50);
  }
  EXPECT_THROW(rearranged_double_sum(p, TruncationPlan{{5, 3}, {1, 2}}, ctx, Side::a), DomainError);
}

TEST(FTildeExpansion, ReconstructsReference) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  for (double t : {0.42, 0.5, 0.58}) {
    const ZetaPoint p = ZetaPoint::from_turns(Complex(Real(2), Real("0.5")), 7, t, ctx);
    const TruncationPlan plan = make_optimal_plan(p, default_kmax(p.a(), ctx, 3), ctx);
    EXPECT_REL(f_tilde_expansion(p, plan, ctx), f_tilde_reference(p, ctx), kTol) << t;
  }
}
