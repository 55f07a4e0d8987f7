#include <gtest/gtest.h>

#include "support.hpp"
#include "zeta/errors.hpp"
#include "zeta/ray.hpp"

using namespace zeta;
using hp::Complex;
using hp::Real;

namespace {
const Complex kI(Real(0), Real(1));
}

TEST(PowRay, BranchFollowsCarriedArgument) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const Complex half = Complex(Real(1) / 2);
  EXPECT_LT(hp::abs(pow_ray(RayComplex(Real(1), hp::pi()), half, ctx) - kI).to_double(), 1e-70);
  EXPECT_LT(hp::abs(pow_ray(RayComplex(Real(1), -hp::pi()), half, ctx) + kI).to_double(), 1e-70);
  EXPECT_LT(hp::abs(pow_ray(RayComplex(Real(1), hp::pi() * 3), half, ctx) + kI).to_double(), 1e-70);
  EXPECT_LT(hp::abs(pow_ray(RayComplex(Real(4), hp::pi() * 2), half, ctx) + Complex(2)).to_double(), 1e-70);
}

TEST(PowRay, AgreesWithPrincipalPowerOnPrincipalSheet) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const Complex z(Real("-2.5"), Real("1.25"));
  const Complex w(Real("2.3"), Real("-0.4"));
  EXPECT_REL(pow_ray(RayComplex::from_value(z), w, ctx), hp::pow(z, w), 1e-70);
}

TEST(RayComplex, CarriedData) {
  PrecisionContext ctx;
  ContextScope scope(ctx);
  const RayComplex r(Real(2), hp::pi() * 3);
  EXPECT_LT(hp::abs(r.value() + Complex(2)).to_double(), 1e-70);
  const Complex l = log_ray(r);
  EXPECT_LT(hp::abs(l.im() - hp::pi() * 3).to_double(), 1e-70);
  EXPECT_EQ(r.rotated(-hp::pi() * 2).argument(), hp::pi() * 3 - hp::pi() * 2);
  const RayComplex t = r.times(RayComplex(Real(3), hp::pi() / 2));
  EXPECT_EQ(t.modulus(), Real(6));
  EXPECT_THROW(RayComplex(Real(-1), Real(0)), DomainError);
  EXPECT_THROW(log_ray(RayComplex(Real(0), Real(0))), DomainError);
}
