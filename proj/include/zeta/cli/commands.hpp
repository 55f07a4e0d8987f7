#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "zeta/cli/run_config.hpp"
#include "zeta/stokes.hpp"

namespace zeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitCheckFailed = 4;

struct Table1Row {
  double abs_a;
  double theta0_over_pi;
  double s_min;
};

/// The published minima, |a| in {1, 2, 4, 6, 8, 10, 15, 20}.
const std::vector<Table1Row>& published_table1();

inline constexpr double kTable1Tolerance = 5e-7;

/// Each command writes its product to cfg.out (or `out` when empty) and
/// messages to `log`, and returns the process exit code.
int run_table1(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int run_terminant(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int run_validate(const RunConfig& cfg, std::ostream& out, std::ostream& log);

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& log);

/// Sweep settings after applying --reproduce and defaults. Throws ConfigError.
SweepSpec sweep_spec_from(const RunConfig& cfg, const PrecisionContext& ctx, std::string* plan_source = nullptr);

/// CSV text for a sweep (header + one row per sample), deterministic.
std::string sweep_csv(const std::vector<MultiplierSample>& samples, int digits);

}  // namespace zeta::cli
