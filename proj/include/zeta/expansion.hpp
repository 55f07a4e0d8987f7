#pragma once

#include <string>
#include <vector>

#include "zeta/hp/complex.hpp"
#include "zeta/oracle.hpp"
#include "zeta/precision.hpp"
#include "zeta/ray.hpp"

namespace zeta {

/// Truncation indices N_1..N_K for a and N'_1..N'_K for a' (N_0 = N'_0 = 0 implied).
struct TruncationPlan {
  std::vector<int> nk;
  std::vector<int> nk_prime;

  int kmax() const noexcept { return static_cast<int>(nk.size()); }
  /// Throws DomainError for an empty plan, entries < 1, or an nk_prime of the wrong length
  /// (nk_prime may be empty for single-function work).
  void validate() const;
  bool nondecreasing() const noexcept;
  /// The same plan with the a and a' indices swapped.
  TruncationPlan swapped() const;
  /// "17;17" style: N_1;..;N_K then N'_1;..;N'_K, separated by '|'.
  std::string to_string() const;
};

struct GeometryPack {
  hp::Complex xi;  // 1 - 1/a
  hp::Real delta;  // arg xi
};

GeometryPack geometry(const RayComplex& a, const PrecisionContext& ctx);

/// A_r(a) = (-1)^r Gamma(2r+s+1) / (2 pi a)^{2r+s+1}.
hp::Complex a_r_coefficient(int r, const hp::Complex& s, const RayComplex& a, const PrecisionContext& ctx);
/// A_0 .. A_{count-1} by the two-step ratio A_{r+1} = -A_r (2r+s+1)(2r+s+2) / (2 pi a)^2.
std::vector<hp::Complex> a_r_sequence(int count, const hp::Complex& s, const RayComplex& a,
                                      const PrecisionContext& ctx);

/// Index of the least term of |Gamma(2r+s+1) / (2 pi k a)^{2r+s+1}| over r >= 1
/// (ties go to the smaller index). Throws DomainError for |a| < 1 or k < 1.
int optimal_truncation(int k, const hp::Complex& s, const RayComplex& a, const PrecisionContext& ctx);

/// Optimal N_k and N'_k for k = 1..kmax at a point.
TruncationPlan make_optimal_plan(const ZetaPoint& point, int kmax, const PrecisionContext& ctx);
/// Optimal N_k for a single function (nk_prime left empty).
TruncationPlan make_optimal_plan(const hp::Complex& s, const RayComplex& a, int kmax, const PrecisionContext& ctx);
/// Smallest K with e^{-2 pi K Im a} < tol, and at least min_k.
int default_kmax(const RayComplex& a, const PrecisionContext& ctx, int min_k = 1);

/// R_k(a; N) = e^{-i pi s} { e^{2 pi i k a} e^{i pi s/2} T_nu(2 pi i k a)
///                          - e^{-2 pi i k a} e^{-i pi s/2} T_nu(-2 pi i k a) },  nu = 2N + s.
/// The terminant arguments are the rays (2 pi k |a|, arg a +- pi/2).
hp::Complex remainder_rk(int k, const hp::Complex& s, const RayComplex& a, int nk, const PrecisionContext& ctx);

enum class Prefactor { two_pi_s, two_pi_2s };

/// Pieces of an exponentially improved evaluation, all already multiplied by the prefactor.
struct ZParts {
  hp::Complex algebraic;  // scales k <= K
  hp::Complex remainder;  // sum_k k^{s-1} R_k
  hp::Complex tail;       // algebraic terms of the scales k > K
  hp::Real tail_bound;    // bound on what was neglected beyond K
  int tail_index = 0;     // truncation used beyond K
};

/// Z(s,a) = P sum_{k>=1} { (1/pi) sum_{r<N_k} A_r k^{-2r-2} + k^{s-1} R_k(a; N_k) }, P = (2 pi)^s.
///
/// Scales beyond plan.kmax() keep the least-term index of scale K+1, so their
/// algebraic part sums exactly into Hurwitz zeta values and only the
/// exponentially small remainders are dropped. Throws TailBoundError when that
/// neglected part is not below tol * |Z|.
hp::Complex z_improved(const hp::Complex& s, const RayComplex& a, const TruncationPlan& plan,
                       const PrecisionContext& ctx, ZParts* parts = nullptr,
                       Prefactor prefactor = Prefactor::two_pi_s);

/// Equal truncation N at every scale: Poincare partial sum through B_{2N} plus
/// (2 pi)^s sum_{k<=K} k^{s-1} R_k(a; N) plus the same tail as z_improved.
hp::Complex z_equal_truncation(const hp::Complex& s, const RayComplex& a, int n, int kmax,
                               const PrecisionContext& ctx, ZParts* parts = nullptr);

/// Poincare partial sum sum_{r=1}^{N} B_{2r}/(2r)! Gamma(2r+s-1) / a^{2r+s-1}.
hp::Complex poincare_partial_sum(const hp::Complex& s, const RayComplex& a, int n, const PrecisionContext& ctx);

/// e^{i pi s/2} R_k(a; N_k) + e^{-i pi s/2} R_k(a'; N'_k).
hp::Complex script_r_k(int k, const ZetaPoint& point, int nk, int nk_prime, const PrecisionContext& ctx);

/// Alternative closed forms of script R_k, kept for validation.
enum class ScriptRForm {
  expanded_printed,     // four-terminant expansion as printed, including its e^{+2 pi i k a - pi i s} factor
  connection,           // connection-formula form with the second group T_nu'(2 pi i k a') - T_nu(-2 pi i k a)
  connection_printed,   // same, second group with the printed sign T_nu(-2 pi i k a) - T_nu'(2 pi i k a')
};
hp::Complex script_r_k_form(ScriptRForm form, int k, const ZetaPoint& point, int nk, int nk_prime,
                            const PrecisionContext& ctx);

/// The dominant group e^{2 pi i k a} { T_nu(2 pi i k a) - T_nu'(2 pi i k a xi) + 1 }.
hp::Complex script_r_k_leading(int k, const ZetaPoint& point, int nk, int nk_prime, const PrecisionContext& ctx);

enum class Side { a, a_prime };

/// (1/pi) sum_{m=1}^{K} sum_{r=N_{m-1}}^{N_m - 1} A_r zeta(2r+2, m) for the chosen side.
/// Equals (1/pi) sum_{k>=1} sum_{r<N_min(k,K)} A_r k^{-2r-2}. Throws DomainError for a
/// non-monotone plan.
hp::Complex rearranged_double_sum(const ZetaPoint& point, const TruncationPlan& plan, const PrecisionContext& ctx,
                                  Side side);

/// F~(a,s) from the rearranged double sums plus sum_{k<=K} k^{s-1} script R_k, with the same
/// tail treatment as z_improved.
hp::Complex f_tilde_expansion(const ZetaPoint& point, const TruncationPlan& plan, const PrecisionContext& ctx);

}  // namespace zeta
