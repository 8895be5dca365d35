#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "radweno/config.hpp"
#include "radweno/diagnostics.hpp"
#include "radweno/error.hpp"
#include "radweno/format.hpp"
#include "radweno/integrator.hpp"
#include "radweno/problems.hpp"
#include "radweno/schemes.hpp"

namespace radweno {

inline constexpr const char* kVersion = "0.1.0";

// Interior profile of a finished (or initial) run.
struct Profile {
  double t = 0.0;
  std::vector<double> r;
  std::vector<Primitive> gas;  // Euler problems
  std::vector<double> phi;     // scalar advection

  std::vector<double> density() const {
    std::vector<double> out;
    out.reserve(gas.size());
    for (const auto& w : gas) out.push_back(w.rho);
    return out;
  }
};

struct RunResult {
  Profile initial;
  Profile final;
  std::vector<ConservationLedger> ledgers;
  std::size_t steps = 0;
};

inline std::vector<TotalMode> selected_modes(TotalSelection s) {
  switch (s) {
    case TotalSelection::Adapted: return {TotalMode::MethodAdapted};
    case TotalSelection::Gauss4: return {TotalMode::Gauss4};
    case TotalSelection::Both: return {TotalMode::MethodAdapted, TotalMode::Gauss4};
  }
  return {};
}

// Runs one configuration in memory. Ledgers are Euler-only and record every step.
inline RunResult simulate(const RunConfig& cfg) {
  cfg.validate();
  const ProblemSpec spec = cfg.problem_spec();
  const RadialGrid grid = problem_grid(spec, cfg.n_cells);
  const TimeControls controls = cfg.controls();
  RunResult result;

  std::vector<double> centers(grid.centers().begin() + grid.begin(),
                              grid.centers().begin() + grid.end());
  result.initial.r = centers;
  result.final.r = centers;

  if (spec.kind == ProblemKind::Advection) {
    const double c0 = spec.c0;
    std::vector<double> phi0 = init_advection(grid);
    result.initial.phi = phi0;
    double t_now = 0.0;
    auto rhs_fn = [&](const std::vector<double>& s) {
      return rhs_advection(s, grid, c0, cfg.method, cfg.weno);
    };
    auto fill = [&](std::vector<double>& s) { fill_advection_ghosts(s, grid, t_now, c0, cfg.method); };
    auto dt_fn = [&](const std::vector<double>&) { return cfg.cfl * grid.dr() / c0; };
    auto observer = [&](double t, const std::vector<double>&) { t_now = t; };
    auto out = advance(rhs_fn, make_scalar_field(phi0, grid, cfg.method), controls, dt_fn, fill, observer);
    result.final.t = out.t;
    result.final.phi = scalar_interior(out.state, grid, cfg.method);
    result.steps = out.steps;
    return result;
  }

  const GasModel gas = spec.gas;
  const Boundaries bounds = problem_boundaries(spec);
  const SchemeOptions opt = cfg.scheme_options();
  const auto w0 = initial_primitives(spec, grid);
  result.initial.gas = w0;

  FieldState s0 = make_field_state(w0, grid, gas, cfg.method);
  fill_ghosts(s0, grid, gas, bounds);
  for (TotalMode m : selected_modes(cfg.total_mode)) {
    result.ledgers.emplace_back(m);
    result.ledgers.back().record(0.0, s0, grid);
  }

  auto rhs_fn = [&](const FieldState& s) { return rhs(cfg.method, s, grid, gas, opt); };
  auto fill = [&](FieldState& s) { fill_ghosts(s, grid, gas, bounds); };
  auto dt_fn = [&](const FieldState& s) { return stable_dt(s, grid, gas, controls); };
  auto observer = [&](double t, const FieldState& s) {
    for (auto& ledger : result.ledgers) ledger.record(t, s, grid);
  };
  auto out = advance(rhs_fn, std::move(s0), controls, dt_fn, fill, observer);
  result.final.t = out.t;
  result.final.gas = interior_primitives(out.state, grid, gas);
  result.steps = out.steps;
  return result;
}

// ---------------------------------------------------------------------------
// CSV artifacts

inline std::filesystem::path profile_path(const std::filesystem::path& dir, double t) {
  return dir / ("profile_" + format_double(t) + ".csv");
}

inline void write_profile(const std::filesystem::path& path, const Profile& p, const GasModel& gas) {
  auto os = open_output(path);
  if (!p.gas.empty()) {
    os << "r,rho,u,p,E\n";
    for (std::size_t i = 0; i < p.r.size(); ++i) {
      const Primitive& w = p.gas[i];
      os << format_double(p.r[i]) << ',' << format_double(w.rho) << ',' << format_double(w.u) << ','
         << format_double(w.p) << ',' << format_double(conserved_from_primitive(w, gas).E) << '\n';
    }
  } else {
    os << "r,phi\n";
    for (std::size_t i = 0; i < p.r.size(); ++i) {
      os << format_double(p.r[i]) << ',' << format_double(p.phi[i]) << '\n';
    }
  }
  finish_output(os, path);
}

inline void write_ledgers(const std::filesystem::path& path,
                          const std::vector<ConservationLedger>& ledgers) {
  auto os = open_output(path);
  os << "t,delta_mass,delta_energy,mode\n";
  for (const auto& ledger : ledgers) {
    for (const auto& row : ledger.rows()) {
      os << format_double(row.t) << ',' << format_double(row.delta_mass) << ','
         << format_double(row.delta_energy) << ',' << to_string(ledger.mode()) << '\n';
    }
  }
  finish_output(os, path);
}

inline void write_meta(const std::filesystem::path& path, const RunConfig& cfg, const RunResult& r) {
  auto os = open_output(path);
  os << "# radweno " << kVersion << ", compiler " << __VERSION__ << '\n'
     << "# steps = " << r.steps << ", t_end = " << format_double(r.final.t) << '\n'
     << serialize_config(cfg);
  finish_output(os, path);
}

inline void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
}

struct RunArtifacts {
  std::vector<std::filesystem::path> profiles;
  std::optional<std::filesystem::path> ledger;
  std::filesystem::path meta;
};

// Single run: initial and final profiles, ledger (Euler only) and meta.
inline RunArtifacts run(const RunConfig& cfg) {
  const RunResult result = simulate(cfg);
  const std::filesystem::path dir(cfg.out_dir);
  ensure_directory(dir);
  const GasModel gas{cfg.gamma};
  RunArtifacts art;
  art.profiles.push_back(profile_path(dir, 0.0));
  write_profile(art.profiles.back(), result.initial, gas);
  if (result.final.t != 0.0) {
    art.profiles.push_back(profile_path(dir, result.final.t));
    write_profile(art.profiles.back(), result.final, gas);
  }
  if (!result.ledgers.empty()) {
    art.ledger = dir / "ledger.csv";
    write_ledgers(*art.ledger, result.ledgers);
  }
  art.meta = dir / "meta.txt";
  write_meta(art.meta, cfg, result);
  return art;
}

// ---------------------------------------------------------------------------
// Convergence sweep

inline void check_sweep_resolutions(const std::vector<std::size_t>& n) {
  if (n.size() < 2) throw ConfigError("sweep needs at least two resolutions");
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (n[k] == 0) throw ConfigError("sweep resolutions must be positive");
    if (k == 0) continue;
    if (n[k] <= n[k - 1]) throw ConfigError("sweep resolutions must increase");
    const std::size_t ratio = n[k] / n[0];
    if (n[k] % n[0] != 0 || (ratio & (ratio - 1)) != 0) {
      throw ConfigError("sweep resolutions must be power-of-two multiples of the coarsest");
    }
  }
}

// Errors of cfg.method at each resolution. Advection is compared with the
// exact solution; acoustics with a method Three run at the finest resolution,
// which is then omitted from the report.
inline ConvergenceReport convergence_study(const RunConfig& cfg, const std::vector<std::size_t>& resolutions) {
  if (cfg.problem != ProblemKind::Advection && cfg.problem != ProblemKind::Acoustics) {
    throw ConfigError(std::string("sweep: refusing order measurement for non-smooth problem '") +
                      to_string(cfg.problem) + "'");
  }
  check_sweep_resolutions(resolutions);
  std::vector<std::size_t> used;
  std::vector<double> errors;
  if (cfg.problem == ProblemKind::Advection) {
    const ProblemSpec spec = cfg.problem_spec();
    for (std::size_t n : resolutions) {
      RunConfig c = cfg;
      c.n_cells = n;
      const RunResult r = simulate(c);
      std::vector<double> exact(n);
      for (std::size_t i = 0; i < n; ++i) exact[i] = exact_advection(r.final.r[i], r.final.t, spec.c0, spec.geometry);
      used.push_back(n);
      errors.push_back(l2_error(r.final.phi, exact));
    }
  } else {
    RunConfig ref_cfg = cfg;
    ref_cfg.method = MethodId::Three;
    ref_cfg.n_cells = resolutions.back();
    const std::vector<double> reference = simulate(ref_cfg).final.density();
    for (std::size_t k = 0; k + 1 < resolutions.size(); ++k) {
      RunConfig c = cfg;
      c.n_cells = resolutions[k];
      const RunResult r = simulate(c);
      used.push_back(resolutions[k]);
      errors.push_back(l2_error(r.final.density(),
                                restrict_to_coarse(reference, resolutions[k], Restriction::Lagrange6)));
    }
  }
  return make_report(std::move(used), std::move(errors));
}

inline void write_convergence(const std::filesystem::path& path, const ConvergenceReport& r) {
  auto os = open_output(path);
  os << "n,l2_error,order\n";
  for (std::size_t k = 0; k < r.errors.size(); ++k) {
    os << r.resolutions[k] << ',' << format_double(r.errors[k]) << ',';
    if (k > 0) os << format_double(r.orders[k - 1]);
    os << '\n';
  }
  finish_output(os, path);
}

inline std::filesystem::path sweep(const RunConfig& cfg, const std::vector<std::size_t>& resolutions) {
  const ConvergenceReport report = convergence_study(cfg, resolutions);
  const std::filesystem::path dir(cfg.out_dir);
  ensure_directory(dir);
  const auto path = dir / "convergence.csv";
  write_convergence(path, report);
  return path;
}

// ---------------------------------------------------------------------------
// Conservation audit

struct AuditEntry {
  MethodId method;
  std::size_t n;
  RunResult result;
};

inline std::vector<AuditEntry> conservation_audit(const RunConfig& cfg, const std::vector<MethodId>& methods,
                                                  const std::vector<std::size_t>& resolutions) {
  if (cfg.problem != ProblemKind::Sod && cfg.problem != ProblemKind::Sedov) {
    throw ConfigError("audit applies to the sod and sedov problems");
  }
  if (methods.empty() || resolutions.empty()) throw ConfigError("audit needs methods and resolutions");
  std::vector<AuditEntry> out;
  for (MethodId m : methods) {
    for (std::size_t n : resolutions) {
      RunConfig c = cfg;
      c.method = m;
      c.n_cells = n;
      out.push_back({m, n, simulate(c)});
    }
  }
  return out;
}

inline void write_residuals(const std::filesystem::path& path, const std::vector<AuditEntry>& entries) {
  auto os = open_output(path);
  os << "method,n,t,delta_mass,delta_energy,mode\n";
  for (const auto& e : entries) {
    for (const auto& ledger : e.result.ledgers) {
      for (const auto& row : ledger.rows()) {
        os << to_string(e.method) << ',' << e.n << ',' << format_double(row.t) << ','
           << format_double(row.delta_mass) << ',' << format_double(row.delta_energy) << ','
           << to_string(ledger.mode()) << '\n';
      }
    }
  }
  finish_output(os, path);
}

inline std::filesystem::path audit(const RunConfig& cfg, const std::vector<MethodId>& methods,
                                   const std::vector<std::size_t>& resolutions) {
  const auto entries = conservation_audit(cfg, methods, resolutions);
  const std::filesystem::path dir(cfg.out_dir);
  ensure_directory(dir);
  const auto path = dir / "residuals.csv";
  write_residuals(path, entries);
  return path;
}

}  // namespace radweno
