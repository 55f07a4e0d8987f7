#pragma once

#include "zeta/hp/complex.hpp"
#include "zeta/precision.hpp"

namespace zeta {

/// zeta(m) for even m >= 2 from B_m: zeta(2r) = (-1)^{r-1} B_{2r} (2 pi)^{2r} / (2 (2r)!).
/// Throws std::invalid_argument for odd or nonpositive m.
hp::Real zeta_even(int m, const PrecisionContext& ctx);

/// zeta(m, base) = sum_{j >= base} j^{-m} for even m >= 2, integer base >= 1.
///
/// Two exact routes: direct summation when the terms fall off within a few
/// thousand steps (large m), otherwise zeta(m) - sum_{j<base} j^{-m} with the
/// working precision raised by m*log10(base) digits to absorb the cancellation.
hp::Real hurwitz_zeta_integer(int m, long base, const PrecisionContext& ctx);

/// Gamma(z) to ctx.working_digits() relative accuracy.
///
/// Upward recurrence to Re(w) >= 0.9 * working digits, then the Stirling
/// series for log Gamma(w) summed until the next term is below the working
/// epsilon. Throws PoleError within ctx.tol() of 0, -1, -2, ...
hp::Complex gamma_complex(const hp::Complex& z, const PrecisionContext& ctx);

/// erf(z) by the Maclaurin series with the working precision raised by
/// |z|^2/ln 10 digits. Full accuracy on the real axis; on the complex plane
/// accurate to well over 15 digits, which is all the asymptotic forms need.
hp::Complex erf_hp(const hp::Complex& z, const PrecisionContext& ctx);

}  // namespace zeta
