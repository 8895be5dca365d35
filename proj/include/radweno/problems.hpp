#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "radweno/error.hpp"
#include "radweno/mesh.hpp"
#include "radweno/physics.hpp"
#include "radweno/schemes.hpp"

namespace radweno {

enum class ProblemKind { Advection, Acoustics, Sod, Sedov };

inline const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Advection: return "advection";
    case ProblemKind::Acoustics: return "acoustics";
    case ProblemKind::Sod: return "sod";
    case ProblemKind::Sedov: return "sedov";
  }
  return "?";
}

struct ProblemSpec {
  ProblemKind kind = ProblemKind::Sod;
  Geometry geometry = Geometry::cylindrical();
  GasModel gas{};
  double r_min = 0.0;
  double r_max = 1.0;
  double c0 = 1.0;                // advection speed
  double amplitude = 1e-4;        // acoustic perturbation
  double diaphragm = 0.5;         // Sod interface
  double blast_energy = 0.44;     // Sedov
  double hot_spot_radius = 0.03;  // Sedov, three cells at n = 100

  void validate() const {
    gas.validate();
    if (!(r_max > r_min) || r_min < 0.0) throw ConfigError("problem domain must satisfy 0 <= r_min < r_max");
    if (kind == ProblemKind::Advection && !(c0 > 0.0)) throw ConfigError("advection speed must be positive");
    if (kind == ProblemKind::Acoustics && amplitude < 0.0) throw ConfigError("acoustic amplitude must be nonnegative");
    if (kind == ProblemKind::Sod && !(diaphragm > r_min && diaphragm < r_max)) {
      throw ConfigError("Sod diaphragm must lie inside the domain");
    }
    if (kind == ProblemKind::Sedov && !(blast_energy > 0.0 && hot_spot_radius > 0.0)) {
      throw ConfigError("Sedov blast energy and hot-spot radius must be positive");
    }
  }
};

// Standard setups: advection on [0, 2] in cylinders, acoustics in spheres,
// Sod in cylinders and Sedov in spheres. Advection runs on [0, 2], the rest on [0, 1].
inline ProblemSpec default_problem(ProblemKind kind) {
  ProblemSpec p;
  p.kind = kind;
  switch (kind) {
    case ProblemKind::Advection:
      p.geometry = Geometry::cylindrical();
      p.r_max = 2.0;
      break;
    case ProblemKind::Acoustics: p.geometry = Geometry::spherical(); break;
    case ProblemKind::Sod: p.geometry = Geometry::cylindrical(); break;
    case ProblemKind::Sedov: p.geometry = Geometry::spherical(); break;
  }
  return p;
}

inline double default_final_time(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Advection: return 1.0;
    case ProblemKind::Acoustics: return 0.3;
    case ProblemKind::Sod: return 0.2;
    // the front crosses r = 1 near t = 0.45 against the unit ambient pressure
    case ProblemKind::Sedov: return 0.4;
  }
  return 0.0;
}

inline bool is_euler(ProblemKind kind) { return kind != ProblemKind::Advection; }

// ---------------------------------------------------------------------------
// Scalar advection

inline double pow4(double x) { return (x * x) * (x * x); }

// sin^4(pi (r - c0 t)) / r^alpha on c0 t <= r <= c0 t + 1, zero elsewhere.
inline double exact_advection(double r, double t, double c0, const Geometry& geometry) {
  const double x = r - c0 * t;
  if (x < 0.0 || x > 1.0) return 0.0;
  const double metric = radial_power(r, geometry.alpha());
  if (metric == 0.0) throw ConfigError("advection solution is singular at r = 0");
  return pow4(std::sin(std::numbers::pi * x)) / metric;
}

inline std::vector<double> init_advection(const RadialGrid& grid) {
  std::vector<double> phi(grid.n_cells());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    phi[i] = exact_advection(grid.center(grid.begin() + i), 0.0, 1.0, grid.geometry());
  }
  return phi;
}

// Storage-length field (ghosts zero) from interior values; psi = r^alpha phi
// for method Three.
inline std::vector<double> make_scalar_field(std::span<const double> interior,
                                             const RadialGrid& grid, MethodId method) {
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t i = 0; i < interior.size(); ++i) {
    const std::size_t k = grid.begin() + i;
    out[k] = method == MethodId::Three ? grid.center_metric(k) * interior[i] : interior[i];
  }
  return out;
}

inline std::vector<double> scalar_interior(std::span<const double> field, const RadialGrid& grid,
                                           MethodId method) {
  std::vector<double> out(grid.n_cells());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t k = grid.begin() + i;
    out[i] = method == MethodId::Three ? field[k] / grid.center_metric(k) : field[k];
  }
  return out;
}

// Ghosts hold the exact solution at time t (zero outside its support).
inline void fill_advection_ghosts(std::vector<double>& field, const RadialGrid& grid, double t,
                                  double c0, MethodId method) {
  auto set = [&](std::size_t k) {
    const double r = grid.center(k);
    const double x = r - c0 * t;
    double value = 0.0;
    if (x >= 0.0 && x <= 1.0) {
      const double s4 = pow4(std::sin(std::numbers::pi * x));
      value = method == MethodId::Three ? s4 : s4 / grid.center_metric(k);
    }
    field[k] = value;
  };
  for (std::size_t k = 0; k < grid.begin(); ++k) set(k);
  for (std::size_t k = grid.end(); k < grid.size(); ++k) set(k);
}

// ---------------------------------------------------------------------------
// Euler problems

// Pulse supported on [0.4, 0.6]: sin^4 of the phase mapped onto the support,
// over r, so the profile and its first three derivatives vanish at both ends.
inline double acoustic_perturbation(double r) {
  if (r < 0.4 || r > 0.6) return 0.0;
  return pow4(std::sin(std::numbers::pi * (r - 0.4) / 0.2)) / r;
}

inline Primitive acoustics_ambient(const GasModel& gas) { return {1.0, 0.0, 1.0 / gas.gamma}; }

inline std::vector<Primitive> init_acoustics(const RadialGrid& grid, const GasModel& gas,
                                             double amplitude) {
  std::vector<Primitive> w(grid.n_cells());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double f = acoustic_perturbation(grid.center(grid.begin() + i));
    w[i] = {1.0 + amplitude * f, 0.0, 1.0 / gas.gamma + amplitude * f};
  }
  return w;
}

inline constexpr Primitive kSodLeft{1.0, 0.0, 1.0};
inline constexpr Primitive kSodRight{0.125, 0.0, 0.1};

// A center exactly on the diaphragm takes the left state.
inline std::vector<Primitive> init_sod(const RadialGrid& grid, double diaphragm = 0.5) {
  std::vector<Primitive> w(grid.n_cells());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = grid.center(grid.begin() + i) <= diaphragm ? kSodLeft : kSodRight;
  }
  return w;
}

inline constexpr Primitive kSedovAmbient{1.0, 0.0, 1.0};

// Hot-spot pressure 3 (gamma - 1) E / ((alpha + 2) pi dr^(alpha + 1)).
inline double sedov_pressure(double blast_energy, double gamma, int alpha, double hot_spot_radius) {
  return 3.0 * (gamma - 1.0) * blast_energy /
         ((alpha + 2) * std::numbers::pi * std::pow(hot_spot_radius, alpha + 1));
}

inline std::vector<Primitive> init_sedov(const RadialGrid& grid, const GasModel& gas,
                                         double blast_energy, double hot_spot_radius) {
  if (hot_spot_radius < grid.dr()) {
    throw ConfigError("Sedov hot-spot radius is smaller than one cell");
  }
  const double p_hot = sedov_pressure(blast_energy, gas.gamma, grid.alpha(), hot_spot_radius);
  std::vector<Primitive> w(grid.n_cells(), kSedovAmbient);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (grid.center(grid.begin() + i) < hot_spot_radius) w[i].p = p_hot;
  }
  return w;
}

// ---------------------------------------------------------------------------
// Ghost fills

enum class Side { Inner, Outer };

// Inner ghost -j-1 mirrors interior cell j with the momentum negated.
inline void fill_reflecting_ghosts(FieldState& s, const RadialGrid& grid, std::size_t depth) {
  if (depth > grid.ghost_depth()) throw ConfigError("reflecting depth exceeds ghost depth");
  const std::size_t g = grid.begin();
  for (std::size_t j = 0; j < depth; ++j) {
    const std::size_t src = g + j;
    const std::size_t dst = g - 1 - j;
    const Conserved U = physical_state(s, grid, src);
    s.cells[dst] = stored_image({U.rho, -U.m, U.E}, s.representation, grid, dst);
  }
}

inline void fill_ambient_ghosts(FieldState& s, const RadialGrid& grid, const GasModel& gas,
                                const Primitive& ambient, Side side) {
  const Conserved U = conserved_from_primitive(ambient, gas);
  const std::size_t first = side == Side::Inner ? 0 : grid.end();
  const std::size_t last = side == Side::Inner ? grid.begin() : grid.size();
  for (std::size_t k = first; k < last; ++k) {
    s.cells[k] = stored_image(U, s.representation, grid, k);
  }
}

inline void fill_ambient_ghosts(FieldState& s, const RadialGrid& grid, const GasModel& gas,
                                const Primitive& ambient) {
  fill_ambient_ghosts(s, grid, gas, ambient, Side::Inner);
  fill_ambient_ghosts(s, grid, gas, ambient, Side::Outer);
}

struct BoundarySide {
  enum class Kind { Ambient, Reflecting } kind = Kind::Ambient;
  Primitive ambient{};
};

struct Boundaries {
  BoundarySide inner;
  BoundarySide outer;
};

// Domains starting on the centerline reflect there. Holding an ambient state
// at r = 0 instead lets round-off grow without bound in the r^alpha-scaled
// form.
inline Boundaries problem_boundaries(const ProblemSpec& p) {
  using K = BoundarySide::Kind;
  BoundarySide inner{K::Reflecting, {}};
  if (p.r_min > 0.0) {
    inner = {K::Ambient, p.kind == ProblemKind::Sod ? kSodLeft : p.kind == ProblemKind::Acoustics
                                                                     ? acoustics_ambient(p.gas)
                                                                     : kSedovAmbient};
  }
  switch (p.kind) {
    case ProblemKind::Acoustics:
      return {inner, {K::Ambient, acoustics_ambient(p.gas)}};
    case ProblemKind::Sod:
      return {inner, {K::Ambient, kSodRight}};
    case ProblemKind::Sedov:
      return {inner, {K::Ambient, kSedovAmbient}};
    case ProblemKind::Advection: break;
  }
  throw ConfigError("advection has no gas-dynamic boundaries");
}

inline void fill_ghosts(FieldState& s, const RadialGrid& grid, const GasModel& gas,
                        const Boundaries& b) {
  if (b.inner.kind == BoundarySide::Kind::Reflecting) {
    fill_reflecting_ghosts(s, grid, grid.ghost_depth());
  } else {
    fill_ambient_ghosts(s, grid, gas, b.inner.ambient, Side::Inner);
  }
  if (b.outer.kind == BoundarySide::Kind::Reflecting) {
    throw ConfigError("reflecting outer boundary is not supported");
  }
  fill_ambient_ghosts(s, grid, gas, b.outer.ambient, Side::Outer);
}

inline RadialGrid problem_grid(const ProblemSpec& p, std::size_t n_cells) {
  p.validate();
  return build_grid(n_cells, p.r_min, p.r_max, p.geometry, kWenoGhostDepth);
}

inline std::vector<Primitive> initial_primitives(const ProblemSpec& p, const RadialGrid& grid) {
  switch (p.kind) {
    case ProblemKind::Acoustics: return init_acoustics(grid, p.gas, p.amplitude);
    case ProblemKind::Sod: return init_sod(grid, p.diaphragm);
    case ProblemKind::Sedov: return init_sedov(grid, p.gas, p.blast_energy, p.hot_spot_radius);
    case ProblemKind::Advection: break;
  }
  throw ConfigError("advection has no gas-dynamic initial state");
}

}  // namespace radweno
