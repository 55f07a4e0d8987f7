#pragma once

#include <string>
#include <vector>

#include "zeta/precision.hpp"

namespace zeta::cli {

struct ValidationEntry {
  std::string suite;
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Reported for reference only; does not affect the verdict.
  bool informational = false;
  std::string note;
};

struct ValidationReport {
  int digits = 0;
  std::vector<ValidationEntry> entries;

  bool passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Runs every identity suite at ctx. Each suite catches its own numerical
/// errors and records them as failed entries.
ValidationReport run_validation(const PrecisionContext& ctx);

}  // namespace zeta::cli
