#include "zeta/ray.hpp"

#include "zeta/errors.hpp"

namespace zeta {

RayComplex::RayComplex(hp::Real modulus, hp::Real argument)
    : modulus_(std::move(modulus)), argument_(std::move(argument)) {
  if (modulus_.sign() < 0) throw DomainError("RayComplex: negative modulus");
}

RayComplex RayComplex::from_value(const hp::Complex& z) {
  if (z.is_zero()) throw DomainError("RayComplex::from_value: zero has no argument");
  return {hp::abs(z), hp::arg(z)};
}

hp::Complex RayComplex::value() const { return hp::expi(argument_) * modulus_; }

RayComplex RayComplex::rotated(const hp::Real& phi) const { return {modulus_, argument_ + phi}; }

RayComplex RayComplex::scaled(const hp::Real& factor) const {
  if (factor.sign() < 0) throw DomainError("RayComplex::scaled: negative factor");
  return {modulus_ * factor, argument_};
}

RayComplex RayComplex::times(const RayComplex& other) const {
  return {modulus_ * other.modulus_, argument_ + other.argument_};
}

hp::Complex log_ray(const RayComplex& base) {
  if (base.modulus().is_zero()) throw DomainError("log_ray: zero modulus");
  return {hp::log(base.modulus()), base.argument()};
}

hp::Complex pow_ray(const RayComplex& base, const hp::Complex& exponent, const PrecisionContext& ctx) {
  ContextScope scope(ctx);
  return hp::exp(exponent * log_ray(base));
}

}  // namespace zeta
