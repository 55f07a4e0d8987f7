#pragma once

// Brute-force references by convergent summation. Everything the expansion
// module produces is checked against these, so they are restricted to regions
// where they are unconditionally trustworthy (Re s > 1.1, Im a > 0).

#include <string>

#include "zeta/hp/complex.hpp"
#include "zeta/precision.hpp"
#include "zeta/ray.hpp"

namespace zeta {

/// One evaluation point: s, a = |a| e^{i theta} with 0 < theta < pi, and
/// a' = 1 - a carried with its principal argument in (-pi, 0).
class ZetaPoint {
 public:
  /// Throws DomainError unless 0 < theta < pi and s is not 0, -1, -2, ...
  ZetaPoint(hp::Complex s, const hp::Real& abs_a, const hp::Real& theta, const PrecisionContext& ctx);
  /// theta given in units of pi (theta = theta_over_pi * pi at working precision).
  static ZetaPoint from_turns(const hp::Complex& s, double abs_a, double theta_over_pi,
                              const PrecisionContext& ctx);

  const hp::Complex& s() const noexcept { return s_; }
  const RayComplex& a() const noexcept { return a_; }
  const RayComplex& a_prime() const noexcept { return a_prime_; }
  const hp::Real& theta() const noexcept { return a_.argument(); }

 private:
  hp::Complex s_;
  RayComplex a_;
  RayComplex a_prime_;
};

/// Shortest decimal string that reads back as exactly v.
std::string shortest_decimal(double v);

/// zeta(s, a) = sum_k (k + a)^{-s}: `terms` explicit terms (0 = choose from
/// the working precision) plus an Euler-Maclaurin tail carried until its next
/// correction drops below the working epsilon.
/// Throws DomainError for Re s <= 1.1 or |arg a| >= pi, PoleError for a in {0, -1, ...}.
/// ConvergenceError when an explicit `terms` leaves the tail short of working precision.
hp::Complex hurwitz_zeta_direct(const hp::Complex& s, const RayComplex& a, const PrecisionContext& ctx,
                                long terms = 0);

/// Z(s, a) = Gamma(s) (zeta(s,a) - a^{-s}/2 - a^{1-s}/(s-1)).
/// Throws PoleError within ctx.tol() of s = 1.
hp::Complex z_reference(const hp::Complex& s, const RayComplex& a, const PrecisionContext& ctx);

struct SeriesValue {
  hp::Complex value;
  hp::Real error_bound;  // geometric tail bound of the truncated sum
  long terms = 0;
};

/// F(a, 1-s) = sum_{k>=1} k^{s-1} e^{2 pi i k a}, with the truncation tail
/// bounded geometrically. Throws DomainError if Im a <= 0.
SeriesValue periodic_zeta_direct_bounded(const ZetaPoint& point, const PrecisionContext& ctx);
hp::Complex periodic_zeta_direct(const ZetaPoint& point, const PrecisionContext& ctx);

/// F~(a,s): F(a,1-s) with the algebraic a- and a'-terms removed.
hp::Complex f_tilde_reference(const ZetaPoint& point, const PrecisionContext& ctx);

/// Right-hand side of the Hurwitz connection for F(a,1-s):
/// Gamma(s)/(2 pi)^s { e^{i pi s/2} zeta(s,a) + e^{-i pi s/2} zeta(s,1-a) }.
hp::Complex periodic_zeta_hurwitz_form(const ZetaPoint& point, const PrecisionContext& ctx);

/// (2 pi)^{-s} { e^{i pi s/2} Z(s,a) + e^{-i pi s/2} Z(s,a') }.
hp::Complex f_tilde_z_form(const ZetaPoint& point, const PrecisionContext& ctx);

}  // namespace zeta
