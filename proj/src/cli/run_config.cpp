#include "zeta/cli/run_config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace zeta::cli {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

bool parse_double(const std::string& text, double& out) {
  if (text.empty()) return false;
  char* end = nullptr;
  out = std::strtod(text.c_str(), &end);
  return end != nullptr && *end == '\0';
}

Command command_from(const std::string& s) {
  if (s == "table1") return Command::table1;
  if (s == "sweep") return Command::sweep;
  if (s == "validate") return Command::validate;
  if (s == "terminant") return Command::terminant;
  throw ConfigError("unknown command: " + s);
}

}  // namespace

const char* to_string(Command c) {
  switch (c) {
    case Command::table1:
      return "table1";
    case Command::sweep:
      return "sweep";
    case Command::validate:
      return "validate";
    case Command::terminant:
      return "terminant";
  }
  return "?";
}

const char* to_string(OutFormat f) { return f == OutFormat::csv ? "csv" : "json"; }

std::pair<std::string, std::string> split_complex(const std::string& text) {
  const auto comma = text.find(',');
  std::string re = text.substr(0, comma);
  std::string im = comma == std::string::npos ? "0" : text.substr(comma + 1);
  double tmp = 0;
  if (!parse_double(re, tmp) || !parse_double(im, tmp)) throw ConfigError("expected RE[,IM], got '" + text + "'");
  return {re, im};
}

ThetaRange parse_theta(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  ThetaRange r;
  double count = 0;
  if (parts.size() != 3 || !parse_double(parts[0], r.lo) || !parse_double(parts[1], r.hi) ||
      !parse_double(parts[2], count) || count != static_cast<int>(count)) {
    throw ConfigError("expected --theta LO:HI:COUNT, got '" + text + "'");
  }
  r.count = static_cast<int>(count);
  if (r.count < 1) throw ConfigError("--theta COUNT must be >= 1");
  if (!(r.lo > 0 && r.hi < 1 && r.lo <= r.hi)) throw ConfigError("--theta needs 0 < LO <= HI < 1 (units of pi)");
  return r;
}

RunConfig RunConfig::parse(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse(args);
}

RunConfig RunConfig::parse(const std::vector<std::string>& args) {
  CLI::App app{"Exponentially improved Hurwitz zeta expansion and Stokes multipliers", "zeta"};
  app.set_config("--config", "", "Config file with key = value lines; flags override it");

  RunConfig c;
  std::string command;
  std::string s_text;
  double abs_a = 0;
  int n = 1;
  std::string theta_text;
  std::string format = "csv";
  std::string reproduce;

  app.add_option("command", command, "table1 | sweep | validate | terminant")
      ->required()
      ->check(CLI::IsMember({"table1", "sweep", "validate", "terminant"}));
  app.add_option("--digits", c.digits, "Working decimal digits (>= 30)")->envname("ZETA_DIGITS");
  app.add_option("--guard", c.guard, "Guard digits (>= 10)");
  auto* s_opt = app.add_option("--s", s_text, "s as RE[,IM]");
  auto* a_opt = app.add_option("--abs-a", abs_a, "|a|");
  auto* n_opt = app.add_option("--n", n, "Exponential index n");
  auto* t_opt = app.add_option("--theta", theta_text, "LO:HI:COUNT in units of pi");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", c.out, "Output file (default stdout)");
  auto* r_opt =
      app.add_option("--reproduce", reproduce, "Pin a figure panel")->check(CLI::IsMember({"fig1a", "fig1b", "fig1c"}));
  app.add_flag("--check", c.check, "Compare table1 with the published values");
  app.add_option("--json", c.json_path, "validate: write the report as JSON");
  app.add_option("--nu", c.nu, "terminant: order RE[,IM]");
  app.add_option("--z", c.z, "terminant: MOD:ARG, ARG in radians or <x>pi");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  c.command = command_from(command);
  if (c.digits < 30) throw ConfigError("--digits must be >= 30");
  if (c.guard < 10) throw ConfigError("--guard must be >= 10");
  if (s_opt->count() > 0) {
    split_complex(s_text);
    c.s = s_text;
  }
  if (a_opt->count() > 0) {
    if (!(abs_a > 0)) throw ConfigError("--abs-a must be positive");
    c.abs_a = abs_a;
  }
  if (n_opt->count() > 0) {
    if (n < 1) throw ConfigError("--n must be >= 1");
    c.n = n;
  }
  if (t_opt->count() > 0) c.theta = parse_theta(theta_text);
  c.format = format == "json" ? OutFormat::json : OutFormat::csv;
  if (r_opt->count() > 0) c.reproduce = reproduce;
  return c;
}

std::vector<std::string> RunConfig::to_args() const {
  std::vector<std::string> a{to_string(command), "--digits", std::to_string(digits), "--guard", std::to_string(guard)};
  if (s) a.insert(a.end(), {"--s", *s});
  if (abs_a) a.insert(a.end(), {"--abs-a", fmt_double(*abs_a)});
  if (n) a.insert(a.end(), {"--n", std::to_string(*n)});
  a.insert(a.end(), {"--theta", fmt_double(theta.lo) + ":" + fmt_double(theta.hi) + ":" + std::to_string(theta.count)});
  a.insert(a.end(), {"--format", to_string(format)});
  if (!out.empty()) a.insert(a.end(), {"--out", out});
  if (reproduce) a.insert(a.end(), {"--reproduce", *reproduce});
  if (check) a.emplace_back("--check");
  if (!json_path.empty()) a.insert(a.end(), {"--json", json_path});
  a.insert(a.end(), {"--nu", nu, "--z", z});
  return a;
}

std::string RunConfig::serialize() const {
  std::ostringstream os;
  const std::vector<std::string> a = to_args();
  for (size_t i = 1; i < a.size(); ++i) {
    const std::string key = a[i].substr(2);
    if (key == "check") {
      os << "check = true\n";
      continue;
    }
    os << key << " = \"" << a[i + 1] << "\"\n";
    ++i;
  }
  return os.str();
}

}  // namespace zeta::cli
