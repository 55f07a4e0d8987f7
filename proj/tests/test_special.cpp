#include <gtest/gtest.h>

#include "support.hpp"
#include "zeta/bernoulli.hpp"
#include "zeta/errors.hpp"
#include "zeta/special.hpp"

using namespace zeta;
using hp::Complex;
using hp::Real;
using test_support::ref;

TEST(Bernoulli, KnownValues) {
  EXPECT_EQ(bernoulli_even(1), mpq_class(1, 6));
  EXPECT_EQ(bernoulli_even(2), mpq_class(-1, 30));
  EXPECT_EQ(bernoulli_even(6), mpq_class(-691, 2730));
  EXPECT_EQ(bernoulli_even(10), mpq_class(-174611, 330));
  EXPECT_THROW(bernoulli_even(0), std::invalid_argument);
}

TEST(Bernoulli, ColdAndWarmCacheAgree) {
  const mpq_class warm = bernoulli_even(40);
  clear_bernoulli_cache();
  EXPECT_EQ(bernoulli_even(40), warm);
}

TEST(Bernoulli, SignsAlternate) {
  for (int k = 1; k <= 30; ++k) EXPECT_EQ(sgn(bernoulli_even(k)), k % 2 == 1 ? 1 : -1) << k;
}

TEST(ZetaEven, MatchesClosedForms) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const Real pi = hp::pi();
  EXPECT_LT(hp::abs(zeta_even(2, ctx) - pi * pi / 6).to_double(), 1e-70);
  EXPECT_LT(hp::abs(zeta_even(4, ctx) - hp::pow(pi, 4) / 90).to_double(), 1e-70);
  EXPECT_THROW(zeta_even(3, ctx), std::invalid_argument);
}

TEST(HurwitzInteger, SmallAndLargeOrders) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const Real want = zeta_even(4, ctx) - Real(1) - Real(1) / 16;
  EXPECT_LT(hp::abs(hurwitz_zeta_integer(4, 3, ctx) - want).to_double(), 1e-70);
  Real direct(0);
  for (int j = 200; j >= 2; --j) direct += hp::pow(Real(j), -40);
  EXPECT_LT((hp::abs(hurwitz_zeta_integer(40, 2, ctx) - direct) / direct).to_double(), 1e-70);
}

TEST(HurwitzInteger, ShiftProperty) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  for (int m : {2, 6, 20, 64}) {
    for (long b : {1L, 2L, 7L}) {
      const Real lhs = hurwitz_zeta_integer(m, b, ctx) - hurwitz_zeta_integer(m, b + 1, ctx);
      const Real rhs = hp::pow(Real(b), -m);
      EXPECT_LT((hp::abs(lhs - rhs) / rhs).to_double(), 1e-55) << m << " " << b;
    }
  }
}

TEST(GammaComplex, FrozenValues) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  EXPECT_REL(gamma_complex(ref("3.3", "2.1"), ctx),
             ref("-0.9070406040662635751684085053710970401103", "0.9374767645324200121160365467678603729869"), 1e-38);
  EXPECT_REL(gamma_complex(ref("-2.5", "0.5"), ctx),
             ref("-0.3338752035224323374032772703395655880727", "-0.2064573079636084149182876075638729883835"), 1e-38);
  EXPECT_REL(gamma_complex(Complex(5), ctx), Complex(24), 1e-70);
}

TEST(GammaComplex, Recurrence) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  for (const char* re : {"0.25", "-3.7", "12.5", "47.1"}) {
    for (const char* im : {"0", "0.8", "-5.5"}) {
      const Complex z = ref(re, im);
      EXPECT_REL(gamma_complex(z + Complex(1), ctx), z * gamma_complex(z, ctx), 1e-70) << re << " " << im;
    }
  }
}

TEST(GammaComplex, PoleIsReported) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  EXPECT_THROW(gamma_complex(Complex(-2), ctx), PoleError);
}

TEST(Erf, RealAndComplex) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  EXPECT_REL(erf_hp(ref("1.3"), ctx), ref("0.9340079449406524366038933275037110170528"), 1e-38);
  EXPECT_REL(erf_hp(ref("0.7", "1.1"), ctx),
             ref("1.569490998366488975848053829499412821064", "0.6502302202546885901864963035817324675375"), 1e-15);
  EXPECT_REL(erf_hp(ref("-1.3"), ctx), ref("-0.9340079449406524366038933275037110170528"), 1e-38);
}
