#pragma once

#include "zeta/hp/complex.hpp"

namespace zeta::detail {

inline hp::Complex i_times(const hp::Complex& z) { return {-z.im(), z.re()}; }

/// e^{sign * i pi s / 2}
inline hp::Complex half_turn_phase(const hp::Complex& s, int sign) {
  return hp::exp(i_times(s) * (hp::pi() * sign / 2));
}

/// (2 pi)^s
inline hp::Complex two_pi_pow(const hp::Complex& s) { return hp::exp(s * hp::log(hp::pi() * 2)); }

inline hp::Real working_eps() { return hp::ldexp(hp::Real(1), -static_cast<long>(hp::working_bits())); }

}  // namespace zeta::detail
