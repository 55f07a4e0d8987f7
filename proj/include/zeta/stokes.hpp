#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zeta/expansion.hpp"
#include "zeta/hp/complex.hpp"
#include "zeta/oracle.hpp"
#include "zeta/precision.hpp"

namespace zeta {

struct MultiplierSample {
  double theta_over_pi = 0.0;
  hp::Complex exact;
  double approx = 0.0;
  TruncationPlan plan;
  /// Magnitudes of the intermediate pieces: f_tilde, series_a, series_a_prime,
  /// script_r_<k> for k < n, peeled, bernoulli_residual (n = 1 only).
  std::map<std::string, double> diagnostics;
  /// Empty on success; otherwise the failure and exact/plan are meaningless.
  std::string error;
  int required_digits = 0;  // set when the failure was an insufficient-precision error

  bool ok() const noexcept { return error.empty(); }
};

struct MinimumResult {
  int n = 1;
  double abs_a = 0.0;
  double theta0 = 0.0;  // radians
  double s_min = 0.0;
};

enum class ErfMode { double_line, single_line };

/// double: 1 + erf[(theta - pi/2) sqrt(pi n |a|)]/2 - erf[(theta + delta - pi/2) sqrt(pi n |a'|)]/2
/// single: 1/2 + erf[(theta - pi/2) sqrt(pi n |a|)]/2
double erf_approx(int n, double abs_a, double theta, ErfMode mode = ErfMode::double_line);

/// Minimum of erf_approx (double) over theta in (0.02 pi, 0.98 pi): 400-point grid, then
/// golden section to 1e-10. Throws DomainError if the grid minimum sits on the boundary
/// or the grid shows more than one interior minimum.
MinimumResult find_minimum(int n, double abs_a);

/// S_n(theta) by peeling F~: subtracts the rearranged series of scales 1..n and
/// k^{s-1} script R_k for k < n, then divides by n^{s-1} e^{2 pi i n a}.
/// Uses `pinned` (its first n scales) when given, else the optimal plan.
/// For n = 1 the Bernoulli form is computed as well and must agree.
/// Throws DomainError for Re s <= 1.1 or a plan shorter than n,
/// InsufficientPrecisionError when e^{-2 pi n Im a} sits below tol |F~|.
MultiplierSample stokes_multiplier(int n, const ZetaPoint& point, const PrecisionContext& ctx,
                                   const std::optional<TruncationPlan>& pinned = std::nullopt);

/// S_1 through the Bernoulli-number partial sums.
hp::Complex stokes_multiplier_bernoulli(const ZetaPoint& point, int n1, int n1_prime, const PrecisionContext& ctx);

struct SweepSpec {
  int n = 1;
  double abs_a = 6.0;
  hp::Complex s;
  double lo = 0.3;  // theta / pi
  double hi = 0.7;
  int count = 41;
  std::optional<TruncationPlan> pinned;

  /// theta/pi of point i, computed in decimal so endpoints are exact.
  double theta_over_pi(int i) const;
};

/// One sample per theta in ascending order; failures are recorded, not dropped.
std::vector<MultiplierSample> sweep(const SweepSpec& spec, const PrecisionContext& ctx);
/// Same computation on one thread; reference for the parallel sweep.
std::vector<MultiplierSample> sweep_serial(const SweepSpec& spec, const PrecisionContext& ctx);

/// Caption settings of the three figure panels.
struct CaptionSetup {
  std::string name;
  int n;
  double abs_a;
  double s_re;
  double s_im;
  TruncationPlan plan;
};
std::optional<CaptionSetup> caption_setup(const std::string& name);

/// Width of the dip at half depth below the plateau value 1, by linear
/// interpolation between samples. Throws DomainError if the dip is not bracketed.
double half_depth_width(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace zeta
