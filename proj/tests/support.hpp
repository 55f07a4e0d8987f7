#pragma once

#include <gtest/gtest.h>

#include <string>

#include "zeta/hp/complex.hpp"

namespace zeta::test_support {

/// |got - want| / |want| as a double (absolute when want is zero).
inline double rel_err(const hp::Complex& got, const hp::Complex& want) {
  const hp::Real scale = hp::abs(want);
  const hp::Real diff = hp::abs(got - want);
  return (scale.is_zero() ? diff : diff / scale).to_double();
}

/// Reference value from decimal strings, read at the current working precision.
inline hp::Complex ref(const char* re, const char* im = "0") { return {hp::Real(std::string(re)), hp::Real(std::string(im))}; }

}  // namespace zeta::test_support

#define EXPECT_REL(got, want, tol) EXPECT_LE(::zeta::test_support::rel_err((got), (want)), (tol)) << (got).to_string(20)
