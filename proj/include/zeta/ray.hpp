#pragma once

#include "zeta/hp/complex.hpp"
#include "zeta/precision.hpp"

namespace zeta {

/// A complex number carried as (modulus, continuous argument). The argument is
/// never reduced mod 2*pi, so a*e^{-pi i} and a*e^{+pi i} are different data
/// with the same value(). Every multivalued function in the library reads its
/// branch from here.
class RayComplex {
 public:
  RayComplex() = default;
  /// Throws DomainError for a negative modulus.
  RayComplex(hp::Real modulus, hp::Real argument);

  /// Principal-argument ray for a nonzero complex value.
  static RayComplex from_value(const hp::Complex& z);

  const hp::Real& modulus() const noexcept { return modulus_; }
  const hp::Real& argument() const noexcept { return argument_; }

  hp::Complex value() const;
  /// Adds phi to the argument exactly.
  RayComplex rotated(const hp::Real& phi) const;
  /// Multiplies the modulus by a positive factor.
  RayComplex scaled(const hp::Real& factor) const;
  /// Product of two rays: moduli multiply, arguments add.
  RayComplex times(const RayComplex& other) const;

 private:
  hp::Real modulus_;
  hp::Real argument_;
};

/// base^exponent = exp(exponent * (log|base| + i arg base)) using the carried
/// argument. Throws DomainError for zero modulus.
hp::Complex pow_ray(const RayComplex& base, const hp::Complex& exponent, const PrecisionContext& ctx);

/// log|base| + i arg(base), continuous argument. Throws DomainError for zero modulus.
hp::Complex log_ray(const RayComplex& base);

}  // namespace zeta
