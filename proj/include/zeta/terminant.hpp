#pragma once

#include <complex>
#include <optional>

#include "zeta/hp/complex.hpp"
#include "zeta/precision.hpp"
#include "zeta/ray.hpp"

namespace zeta {

/// Order nu and branch-tracked argument z of a terminant T_nu(z).
struct TerminantQuery {
  hp::Complex nu;
  RayComplex z;

  /// Throws DomainError unless |z| > 0 and |arg z| <= 2 pi + 0.1.
  void validate() const;
};

/// Gamma(alpha, z) on the sheet selected by z.argument().
///
/// Non-integer alpha: Gamma(alpha) - z^alpha sum_n (-z)^n / (n! (alpha+n)).
/// alpha = 0, -1, -2, ...: E1(z) from its everywhere-convergent series, then
/// Gamma(a-1,z) = (Gamma(a,z) - z^{a-1} e^{-z}) / (a-1) downward.
/// Both start at ctx.working_digits() + |z|/ln 10 + guard digits and re-run
/// with more digits whenever the tracked cancellation eats into the guard.
///
/// Throws IllConditionedError when alpha sits within 10^{-digits/2} of a
/// nonpositive integer without being one (perturb s instead).
hp::Complex upper_gamma(const hp::Complex& alpha, const RayComplex& z, const PrecisionContext& ctx);

/// Legendre continued fraction for Gamma(alpha, z), principal branch,
/// Re z > 0 only. Independent cross-check for upper_gamma.
hp::Complex upper_gamma_continued_fraction(const hp::Complex& alpha, const RayComplex& z,
                                           const PrecisionContext& ctx);

/// T_nu(z) = e^{i pi nu} Gamma(nu) / (2 pi i) Gamma(1-nu, z), evaluated on the
/// literal branch of q.z.
hp::Complex terminant(const TerminantQuery& q, const PrecisionContext& ctx);

/// Same value, but evaluated as multiplier * T(reduced) + offset with the
/// argument first brought into (-pi, pi] by the connection formula.
hp::Complex terminant_principal(const TerminantQuery& q, const PrecisionContext& ctx);

/// T(original) = multiplier * T(query) + offset.
struct ArgReduction {
  TerminantQuery query;
  hp::Complex multiplier;
  hp::Complex offset;
};

/// One application of T_nu(z e^{-pi i}) = e^{2 pi i nu} (T_nu(z e^{pi i}) - 1).
/// direction = +1 raises the argument by 2 pi, -1 lowers it.
ArgReduction connection_step(const TerminantQuery& q, int direction, const PrecisionContext& ctx);

/// Applies connection_step until arg z lies in (-pi, pi]; identity if it already does.
ArgReduction reduce_arg(const TerminantQuery& q, const PrecisionContext& ctx);

/// c(phi) with c^2/2 = 1 + i(phi - pi) - e^{i(phi - pi)} on the branch c ~ phi - pi.
struct SmoothingCoefficient {
  double phi = 0.0;
  std::complex<double> c;
  double residual = 0.0;
};

/// Newton continuation from phi = pi. Throws DomainError outside (0, 2 pi).
SmoothingCoefficient c_of_phi(double phi);
/// Same, parameterised by t = phi - pi (exact zero gives c = 0).
SmoothingCoefficient c_of_offset(double t);

enum class AsymptoticRegime { away, smoothing };

struct AsymptoticValue {
  hp::Complex value;
  AsymptoticRegime regime;
};

/// Large |nu| ~ |z| behaviour of T_nu(z):
///   away      (-pi+eps <= phi <= pi-eps):  -i e^{(pi-phi) i nu} / (1 + e^{-i phi}) e^{-z-|z|} / sqrt(2 pi |z|)
///   smoothing (eps <= phi <= 2 pi - eps):  1/2 + 1/2 erf(c(phi) sqrt(|z|/2))
/// with eps = 0.05; the smoothing form wins in the overlap unless `force` says otherwise.
/// Throws DomainError for |z| < 10, |nu|/|z| outside [0.5, 2], or phi outside the regime.
AsymptoticValue terminant_asymptotic(const TerminantQuery& q, const PrecisionContext& ctx,
                                     std::optional<AsymptoticRegime> force = std::nullopt);

inline constexpr double kRegimeMargin = 0.05;

}  // namespace zeta
