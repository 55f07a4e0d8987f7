#include "zeta/precision.hpp"

#include <stdexcept>
#include <string>

namespace zeta {

PrecisionContext::PrecisionContext(int digits, int guard) : digits_(digits), guard_(guard) {
  if (digits < kMinDigits) {
    throw std::invalid_argument("digits must be >= " + std::to_string(kMinDigits) + ", got " +
                                std::to_string(digits));
  }
  if (guard < kMinGuard) {
    throw std::invalid_argument("guard must be >= " + std::to_string(kMinGuard) + ", got " +
                                std::to_string(guard));
  }
}

hp::Real PrecisionContext::tol() const {
  hp::WorkingPrecision wp(working_bits());
  return hp::pow10(-digits_ + 10);
}

}  // namespace zeta
