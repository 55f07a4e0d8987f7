#pragma once

#include <gmpxx.h>

#include "zeta/hp/real.hpp"

namespace zeta {

/// B_{2k} as an exact rational, k >= 1. Values are produced by the defining
/// recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0 and cached process-wide; the
/// cache grows under a mutex, so concurrent callers see identical values.
/// Throws std::invalid_argument for k < 1.
mpq_class bernoulli_even(int k);

/// B_{2k} rounded to the current working precision.
hp::Real bernoulli_even_real(int k);

/// Drops the cache (tests use this to check cold/warm equality).
void clear_bernoulli_cache();

}  // namespace zeta
