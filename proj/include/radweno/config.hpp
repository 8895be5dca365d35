#pragma once

#include <array>
#include <charconv>
#include <cstddef>
#include <span>
#include <utility>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "radweno/error.hpp"
#include "radweno/format.hpp"
#include "radweno/integrator.hpp"
#include "radweno/problems.hpp"
#include "radweno/schemes.hpp"
#include "radweno/weno.hpp"

namespace radweno {

enum class RunMode { Run, Sweep, Audit };

// Which totals a run's ledger records.
enum class TotalSelection { Adapted, Gauss4, Both };

struct RunConfig {
  ProblemKind problem = ProblemKind::Sod;
  MethodId method = MethodId::Three;
  int alpha = 1;
  std::size_t n_cells = 100;
  double cfl = 0.5;
  double gamma = 1.4;
  double t_final = 0.2;
  weno::Params weno{};
  LambdaMode lambda_mode = LambdaMode::WindowMax;
  TotalSelection total_mode = TotalSelection::Both;
  std::string out_dir = "out";
  RunMode mode = RunMode::Run;

  bool operator==(const RunConfig&) const = default;

  // Geometry, gas and domain of the run.
  ProblemSpec problem_spec() const {
    ProblemSpec p = default_problem(problem);
    p.geometry = Geometry(alpha);
    p.gas.gamma = gamma;
    return p;
  }

  TimeControls controls() const { return {cfl, t_final}; }

  SchemeOptions scheme_options() const { return {weno, lambda_mode}; }

  void validate() const {
    (void)Geometry(alpha);
    if (n_cells == 0) throw ConfigError("n_cells must be positive");
    controls().validate();
    GasModel{gamma}.validate();
    weno.validate();
    problem_spec().validate();
  }
};

struct ParsedConfig {
  RunConfig config;
  std::vector<std::string> warnings;
};

inline constexpr double kSedovCfl = 0.1;

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::string value;
  int line;
};

[[noreturn]] inline void fail(const std::string& key, int line, const std::string& what) {
  throw ConfigError("config line " + std::to_string(line) + ", key '" + key + "': " + what);
}

inline double as_double(const std::string& key, const Entry& e) {
  double v = 0.0;
  if (!parse_double(e.value, v)) fail(key, e.line, "expected a number, got '" + e.value + "'");
  return v;
}

inline long as_integer(const std::string& key, const Entry& e) {
  long v = 0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    fail(key, e.line, "expected an integer, got '" + e.value + "'");
  }
  return v;
}

template <class Enum>
using Choices = std::span<const std::pair<const char*, Enum>>;

template <class Enum>
Enum as_enum(const std::string& key, const Entry& e, Choices<Enum> choices) {
  for (const auto& [name, value] : choices) {
    if (e.value == name) return value;
  }
  std::string names;
  for (const auto& c : choices) names += std::string(names.empty() ? "" : ", ") + c.first;
  fail(key, e.line, "expected one of {" + names + "}, got '" + e.value + "'");
}

inline constexpr std::array<const char*, 12> kKnownKeys = {
    "problem", "method",       "alpha",           "n_cells",     "cfl",        "gamma",
    "t_final", "weno_epsilon", "weno_beta_power", "lambda_mode", "total_mode", "out_dir"};

inline constexpr std::array<std::pair<const char*, ProblemKind>, 4> kProblems{{
    {"advection", ProblemKind::Advection},
    {"acoustics", ProblemKind::Acoustics},
    {"sod", ProblemKind::Sod},
    {"sedov", ProblemKind::Sedov},
}};

inline constexpr std::array<std::pair<const char*, MethodId>, 3> kMethods{{
    {"one", MethodId::One}, {"two", MethodId::Two}, {"three", MethodId::Three}}};

inline constexpr std::array<std::pair<const char*, LambdaMode>, 2> kLambdaModes{{
    {"window_max", LambdaMode::WindowMax}, {"pointwise", LambdaMode::Pointwise}}};

inline constexpr std::array<std::pair<const char*, TotalSelection>, 3> kTotalModes{{
    {"adapted", TotalSelection::Adapted}, {"gauss4", TotalSelection::Gauss4}, {"both", TotalSelection::Both}}};

}  // namespace detail

inline MethodId parse_method(std::string_view name) {
  for (const auto& [n, m] : detail::kMethods) {
    if (name == n) return m;
  }
  throw ConfigError("unknown method '" + std::string(name) + "'");
}

inline const char* to_string(LambdaMode mode) {
  return mode == LambdaMode::WindowMax ? "window_max" : "pointwise";
}

inline const char* to_string(TotalSelection t) {
  switch (t) {
    case TotalSelection::Adapted: return "adapted";
    case TotalSelection::Gauss4: return "gauss4";
    case TotalSelection::Both: return "both";
  }
  return "?";
}

// `key = value` lines, `#` starts a comment. Unknown or repeated keys are
// rejected; absent keys take per-problem defaults.
inline ParsedConfig parse_config(std::string_view text) {
  std::map<std::string, detail::Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string value(detail::trim(line.substr(eq + 1)));
    bool known = false;
    for (const char* k : detail::kKnownKeys) known = known || key == k;
    if (!known) detail::fail(key, line_no, "unknown key");
    if (value.empty()) detail::fail(key, line_no, "missing value");
    if (entries.contains(key)) detail::fail(key, line_no, "repeated key");
    entries.emplace(key, detail::Entry{value, line_no});
  }

  ParsedConfig out;
  RunConfig& c = out.config;
  auto get = [&](const char* key) -> const detail::Entry* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  if (const auto* e = get("problem")) c.problem = detail::as_enum<ProblemKind>("problem", *e, detail::kProblems);
  const ProblemSpec defaults = default_problem(c.problem);
  c.alpha = defaults.geometry.alpha();
  c.t_final = default_final_time(c.problem);

  if (const auto* e = get("method")) c.method = detail::as_enum<MethodId>("method", *e, detail::kMethods);
  if (const auto* e = get("alpha")) {
    const long a = detail::as_integer("alpha", *e);
    if (a < 0 || a > 2) detail::fail("alpha", e->line, "must be 0, 1 or 2");
    c.alpha = static_cast<int>(a);
  }
  if (const auto* e = get("n_cells")) {
    const long n = detail::as_integer("n_cells", *e);
    if (n < 1) detail::fail("n_cells", e->line, "must be positive");
    c.n_cells = static_cast<std::size_t>(n);
  }
  if (const auto* e = get("cfl")) {
    c.cfl = detail::as_double("cfl", *e);
    if (!(c.cfl > 0.0 && c.cfl <= 1.0)) detail::fail("cfl", e->line, "must satisfy 0 < cfl <= 1");
  } else if (c.problem == ProblemKind::Sedov) {
    c.cfl = kSedovCfl;
    out.warnings.push_back("sedov: cfl not set, using 0.1 for stability of the stiff source");
  }
  if (const auto* e = get("gamma")) {
    c.gamma = detail::as_double("gamma", *e);
    if (!(c.gamma > 1.0)) detail::fail("gamma", e->line, "must exceed 1");
  }
  if (const auto* e = get("t_final")) {
    c.t_final = detail::as_double("t_final", *e);
    if (!(c.t_final >= 0.0)) detail::fail("t_final", e->line, "must be nonnegative");
  }
  if (const auto* e = get("weno_epsilon")) {
    c.weno.epsilon = detail::as_double("weno_epsilon", *e);
    if (!(c.weno.epsilon > 0.0)) detail::fail("weno_epsilon", e->line, "must be positive");
  }
  if (const auto* e = get("weno_beta_power")) {
    const long p = detail::as_integer("weno_beta_power", *e);
    if (p != 1 && p != 2) detail::fail("weno_beta_power", e->line, "must be 1 or 2");
    c.weno.beta_power = static_cast<int>(p);
  }
  if (const auto* e = get("lambda_mode")) {
    c.lambda_mode = detail::as_enum<LambdaMode>("lambda_mode", *e, detail::kLambdaModes);
  }
  if (const auto* e = get("total_mode")) {
    c.total_mode = detail::as_enum<TotalSelection>("total_mode", *e, detail::kTotalModes);
  }
  if (const auto* e = get("out_dir")) c.out_dir = e->value;

  try {
    c.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return out;
}

// Every key written explicitly, so parse_config(serialize_config(c)) == c.
inline std::string serialize_config(const RunConfig& c) {
  std::ostringstream os;
  os << "problem = " << to_string(c.problem) << '\n'
     << "method = " << to_string(c.method) << '\n'
     << "alpha = " << c.alpha << '\n'
     << "n_cells = " << c.n_cells << '\n'
     << "cfl = " << format_double(c.cfl) << '\n'
     << "gamma = " << format_double(c.gamma) << '\n'
     << "t_final = " << format_double(c.t_final) << '\n'
     << "weno_epsilon = " << format_double(c.weno.epsilon) << '\n'
     << "weno_beta_power = " << c.weno.beta_power << '\n'
     << "lambda_mode = " << to_string(c.lambda_mode) << '\n'
     << "total_mode = " << to_string(c.total_mode) << '\n'
     << "out_dir = " << c.out_dir << '\n';
  return os.str();
}

}  // namespace radweno
