#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeta::cli {

/// Bad flags, bad config file, or inconsistent settings (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { table1, sweep, validate, terminant };
enum class OutFormat { csv, json };

struct ThetaRange {
  double lo = 0.3;  // units of pi
  double hi = 0.7;
  int count = 41;
  friend bool operator==(const ThetaRange&, const ThetaRange&) = default;
};

struct RunConfig {
  Command command = Command::validate;
  int digits = 60;
  int guard = 20;
  std::optional<std::string> s;  // "re[,im]"
  std::optional<double> abs_a;
  std::optional<int> n;
  ThetaRange theta;
  OutFormat format = OutFormat::csv;
  std::string out;        // empty: stdout
  std::optional<std::string> reproduce;
  bool check = false;
  std::string json_path;  // validate --json
  std::string nu = "1";   // terminant --nu
  std::string z = "1:0";  // terminant --z, MOD:ARG with ARG in radians or "<x>pi"

  friend bool operator==(const RunConfig&, const RunConfig&) = default;

  /// Parses `zeta <command> [flags]`. Flags override a --config file, which
  /// overrides ZETA_DIGITS, which overrides the defaults.
  /// Throws ConfigError; --help prints usage and throws HelpRequested.
  static RunConfig parse(const std::vector<std::string>& args);
  static RunConfig parse(int argc, const char* const* argv);

  /// Normalized argument list; parse(to_args()) reproduces *this.
  std::vector<std::string> to_args() const;
  /// Same settings as a config file body (key = value lines).
  std::string serialize() const;
};

/// Thrown by parse() after printing help text.
struct HelpRequested {
  std::string text;
};

const char* to_string(Command c);
const char* to_string(OutFormat f);

/// "2" or "2,0.5" -> (re, im) decimal strings. Throws ConfigError.
std::pair<std::string, std::string> split_complex(const std::string& text);
/// "lo:hi:count". Throws ConfigError.
ThetaRange parse_theta(const std::string& text);

}  // namespace zeta::cli
