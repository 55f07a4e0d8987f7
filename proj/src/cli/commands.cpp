#include "zeta/cli/commands.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "zeta/cli/validation.hpp"
#include "zeta/errors.hpp"
#include "zeta/terminant.hpp"

namespace zeta::cli {

using hp::Complex;
using hp::Real;

namespace {

std::string fmt(double v, const char* spec = "%.15g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

// Writes `text` to cfg.out, or to `fallback` when no path was given.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& fallback) {
  if (cfg.out.empty()) {
    fallback << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw ConfigError("cannot open output file " + cfg.out);
  f << text;
  if (!f) throw ConfigError("failed writing " + cfg.out);
}

Complex parse_hp_complex(const std::string& text) {
  const auto [re, im] = split_complex(text);
  return {Real(re), Real(im)};
}

bool same_complex_text(const std::string& text, double re, double im) {
  const auto [r, i] = split_complex(text);
  return std::strtod(r.c_str(), nullptr) == re && std::strtod(i.c_str(), nullptr) == im;
}

int significant_digits(int digits) { return std::max(15, digits - 10); }

}  // namespace

const std::vector<Table1Row>& published_table1() {
  static const std::vector<Table1Row> rows = {
      {1, 0.314363, 0.185967},  {2, 0.416139, 0.370072},  {4, 0.459300, 0.529774},  {6, 0.473089, 0.608463},
      {8, 0.479894, 0.657472},  {10, 0.483951, 0.691736}, {15, 0.489331, 0.746192}, {20, 0.492010, 0.779264},
  };
  return rows;
}

int run_table1(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  std::ostringstream csv;
  csv << "absA,theta0_over_pi,S1_min\n";
  bool all_ok = true;
  for (const Table1Row& row : published_table1()) {
    const MinimumResult m = find_minimum(1, row.abs_a);
    const double t = m.theta0 / M_PI;
    csv << fmt(row.abs_a, "%g") << ',' << fmt(t, "%.9f") << ',' << fmt(m.s_min, "%.9f") << '\n';
    if (cfg.check) {
      const double dt = std::fabs(t - row.theta0_over_pi);
      const double ds = std::fabs(m.s_min - row.s_min);
      const bool ok = dt <= kTable1Tolerance && ds <= kTable1Tolerance;
      all_ok = all_ok && ok;
      log << "|a|=" << fmt(row.abs_a, "%-3g") << " theta0/pi " << fmt(t, "%.9f") << " (table " << fmt(row.theta0_over_pi, "%.6f")
          << ", diff " << fmt(dt, "%.1e") << ")  S1 " << fmt(m.s_min, "%.9f") << " (table " << fmt(row.s_min, "%.6f")
          << ", diff " << fmt(ds, "%.1e") << ")  " << (ok ? "ok" : "MISMATCH") << '\n';
    }
  }
  emit(cfg, csv.str(), out);
  if (cfg.check) log << (all_ok ? "table1 check passed\n" : "table1 check FAILED\n");
  return all_ok ? kExitOk : kExitCheckFailed;
}

SweepSpec sweep_spec_from(const RunConfig& cfg, const PrecisionContext& ctx, std::string* plan_source) {
  ContextScope scope(ctx);
  SweepSpec spec;
  spec.lo = cfg.theta.lo;
  spec.hi = cfg.theta.hi;
  spec.count = cfg.theta.count;
  if (cfg.reproduce) {
    const auto cap = caption_setup(*cfg.reproduce);
    if (!cap) throw ConfigError("unknown --reproduce panel " + *cfg.reproduce);
    if (cfg.n && *cfg.n != cap->n) throw ConfigError("--n conflicts with --reproduce " + cap->name);
    if (cfg.abs_a && *cfg.abs_a != cap->abs_a) throw ConfigError("--abs-a conflicts with --reproduce " + cap->name);
    if (cfg.s && !same_complex_text(*cfg.s, cap->s_re, cap->s_im)) {
      throw ConfigError("--s conflicts with --reproduce " + cap->name);
    }
    spec.n = cap->n;
    spec.abs_a = cap->abs_a;
    spec.s = Complex(Real(cap->s_re), Real(cap->s_im));
    spec.pinned = cap->plan;
    if (plan_source) *plan_source = "caption " + cap->name + " (" + cap->plan.to_string() + ")";
    return spec;
  }
  if (!cfg.abs_a) throw ConfigError("sweep needs --abs-a (or --reproduce)");
  if (!cfg.s) throw ConfigError("sweep needs --s (or --reproduce)");
  spec.n = cfg.n.value_or(1);
  spec.abs_a = *cfg.abs_a;
  spec.s = parse_hp_complex(*cfg.s);
  if (plan_source) *plan_source = "optimal (least term, per point)";
  return spec;
}

std::string sweep_csv(const std::vector<MultiplierSample>& samples, int digits) {
  const int sig = significant_digits(digits);
  std::ostringstream os;
  os << "theta_over_pi,re_S_exact,im_S_exact,S_approx,abs_residual,N_list,error\n";
  for (const MultiplierSample& m : samples) {
    os << shortest_decimal(m.theta_over_pi) << ',';
    if (m.ok()) {
      const double residual = std::fabs(m.exact.re().to_double() - m.approx);
      os << m.exact.re().to_string(sig) << ',' << m.exact.im().to_string(sig) << ',' << fmt(m.approx) << ','
         << fmt(residual) << ',' << m.plan.to_string() << ',';
    } else {
      os << ",," << fmt(m.approx) << ",,," << csv_quote(m.error);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::string sweep_json(const RunConfig& cfg, const SweepSpec& spec, const std::string& plan_source,
                       const std::vector<MultiplierSample>& samples) {
  using nlohmann::json;
  const int sig = significant_digits(cfg.digits);
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));

  json meta = {{"digits", cfg.digits},
               {"guard", cfg.guard},
               {"s", {spec.s.re().to_string(17), spec.s.im().to_string(17)}},
               {"abs_a", spec.abs_a},
               {"n", spec.n},
               {"theta_over_pi", {{"lo", spec.lo}, {"hi", spec.hi}, {"count", spec.count}}},
               {"plan_source", plan_source},
               {"generated_at", stamp},
               {"non_comparable", {"generated_at"}}};
  json rows = json::array();
  for (const MultiplierSample& m : samples) {
    json r = {{"theta_over_pi", m.theta_over_pi}, {"S_approx", m.approx}};
    if (m.ok()) {
      r["re_S_exact"] = m.exact.re().to_string(sig);
      r["im_S_exact"] = m.exact.im().to_string(sig);
      r["abs_residual"] = std::fabs(m.exact.re().to_double() - m.approx);
      r["plan"] = {{"N", m.plan.nk}, {"N_prime", m.plan.nk_prime}};
      r["diagnostics"] = m.diagnostics;
      r["error"] = nullptr;
    } else {
      r["error"] = m.error;
      if (m.required_digits > 0) r["required_digits"] = m.required_digits;
    }
    rows.push_back(std::move(r));
  }
  return json{{"meta", meta}, {"rows", rows}}.dump(2) + "\n";
}

}  // namespace

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const PrecisionContext ctx(cfg.digits, cfg.guard);
  std::string plan_source;
  const SweepSpec spec = sweep_spec_from(cfg, ctx, &plan_source);
  const std::vector<MultiplierSample> samples = sweep(spec, ctx);
  emit(cfg, cfg.format == OutFormat::json ? sweep_json(cfg, spec, plan_source, samples) : sweep_csv(samples, cfg.digits),
       out);

  int failed = 0;
  int required = 0;
  double worst = 0;
  for (const MultiplierSample& m : samples) {
    if (!m.ok()) {
      ++failed;
      required = std::max(required, m.required_digits);
      continue;
    }
    worst = std::max(worst, std::fabs(m.exact.re().to_double() - m.approx));
  }
  log << "sweep: " << samples.size() << " points, " << failed << " failed, max |Re S - approx| = " << fmt(worst, "%.3e")
      << '\n';
  if (failed > 0) {
    if (required > 0) log << "sweep: insufficient precision; rerun with --digits >= " << required << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

int run_terminant(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const PrecisionContext ctx(cfg.digits, cfg.guard);
  ContextScope scope(ctx);
  const Complex nu = parse_hp_complex(cfg.nu);
  const auto colon = cfg.z.find(':');
  if (colon == std::string::npos) throw ConfigError("--z expects MOD:ARG");
  const std::string mod_text = cfg.z.substr(0, colon);
  std::string arg_text = cfg.z.substr(colon + 1);
  const bool in_pi = arg_text.size() > 2 && arg_text.compare(arg_text.size() - 2, 2, "pi") == 0;
  if (in_pi) arg_text.resize(arg_text.size() - 2);
  Real mod;
  Real arg;
  try {
    mod = Real(mod_text);
    arg = Real(arg_text);
  } catch (const std::invalid_argument&) {
    throw ConfigError("--z expects MOD:ARG with decimal numbers");
  }
  if (in_pi) arg = arg * hp::pi();
  const TerminantQuery q{nu, RayComplex(mod, arg)};

  const int sig = significant_digits(cfg.digits);
  std::ostringstream os;
  os << "nu        = " << nu.to_string(sig) << '\n';
  os << "|z|       = " << mod.to_string(sig) << '\n';
  os << "arg z     = " << arg.to_string(sig) << '\n';
  const Complex t = terminant(q, ctx);
  os << "T literal = " << t.to_string(sig) << '\n';
  os << "T reduced = " << terminant_principal(q, ctx).to_string(sig) << '\n';
  try {
    const AsymptoticValue av = terminant_asymptotic(q, ctx);
    os << "asymptotic (" << (av.regime == AsymptoticRegime::away ? "away" : "smoothing")
       << ") = " << av.value.to_string(12) << '\n';
  } catch (const DomainError& e) {
    log << "asymptotic form not applicable: " << e.what() << '\n';
  }
  emit(cfg, os.str(), out);
  return kExitOk;
}

int run_validate(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const PrecisionContext ctx(cfg.digits, cfg.guard);
  const ValidationReport report = run_validation(ctx);
  emit(cfg, report.to_text(), out);
  if (!cfg.json_path.empty()) {
    std::ofstream f(cfg.json_path, std::ios::binary);
    if (!f) throw ConfigError("cannot open " + cfg.json_path);
    f << report.to_json();
  }
  log << (report.passed() ? "validate: all suites passed\n" : "validate: FAILED\n");
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  switch (cfg.command) {
    case Command::table1:
      return run_table1(cfg, out, log);
    case Command::sweep:
      return run_sweep(cfg, out, log);
    case Command::validate:
      return run_validate(cfg, out, log);
    case Command::terminant:
      return run_terminant(cfg, out, log);
  }
  return kExitConfig;
}

}  // namespace zeta::cli
