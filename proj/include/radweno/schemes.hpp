#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "radweno/error.hpp"
#include "radweno/mesh.hpp"
#include "radweno/physics.hpp"
#include "radweno/weno.hpp"

namespace radweno {

// One:   expanded differential form, geometric terms as point sources.
// Two:   volume-weighted integral form with face-metric fluxes.
// Three: r^alpha-premultiplied form evolving r^alpha U.
enum class MethodId { One, Two, Three };

enum class Representation { Conserved, MetricScaled };

enum class LambdaMode {
  WindowMax,  // max(|u| + a) over the six-cell stencil
  Pointwise,  // |u_j| + a_j per cell
};

inline Representation representation_for(MethodId method) {
  return method == MethodId::Three ? Representation::MetricScaled : Representation::Conserved;
}

inline const char* to_string(MethodId method) {
  switch (method) {
    case MethodId::One: return "one";
    case MethodId::Two: return "two";
    case MethodId::Three: return "three";
  }
  return "?";
}

// Per-cell triples over interior and ghost cells. MetricScaled holds
// r_k^alpha * (rho, m, E) with the signed center radius r_k.
struct FieldState {
  Representation representation = Representation::Conserved;
  std::vector<Vec3> cells;
};

// u + a * k over all cells; the representation of u is kept.
inline FieldState lincomb(const FieldState& u, double a, const FieldState& k) {
  FieldState out{u.representation, u.cells};
  for (std::size_t i = 0; i < out.cells.size(); ++i)
    for (int c = 0; c < 3; ++c) out.cells[i][c] += a * k.cells[i][c];
  return out;
}

struct SchemeOptions {
  weno::Params weno{};
  LambdaMode lambda_mode = LambdaMode::WindowMax;
};

namespace detail {

inline double scale_divisor(const RadialGrid& grid, std::size_t k) {
  const double metric = grid.center_metric(k);
  if (metric == 0.0) {
    throw ConfigError("cell " + std::to_string(k) + " is centered on r = 0; cannot unscale");
  }
  return metric;
}

inline std::string cell_context(const RadialGrid& grid, std::size_t k) {
  std::ostringstream msg;
  msg << "cell " << static_cast<long>(k) - static_cast<long>(grid.begin())
      << " (r=" << grid.center(k) << ")";
  return msg.str();
}

}  // namespace detail

inline Conserved physical_state(const FieldState& s, const RadialGrid& grid, std::size_t k) {
  const Vec3& v = s.cells[k];
  if (s.representation == Representation::Conserved) return Conserved::from_vec(v);
  const double metric = detail::scale_divisor(grid, k);
  return {v[0] / metric, v[1] / metric, v[2] / metric};
}

inline Vec3 stored_image(const Conserved& U, Representation rep, const RadialGrid& grid,
                         std::size_t k) {
  if (rep == Representation::Conserved) return U.as_vec();
  const double metric = grid.center_metric(k);
  return {metric * U.rho, metric * U.m, metric * U.E};
}

// Builds a field from interior primitive values; ghost cells are zero until filled.
inline FieldState make_field_state(std::span<const Primitive> interior, const RadialGrid& grid,
                                   const GasModel& gas, MethodId method) {
  if (interior.size() != grid.n_cells()) {
    throw ConfigError("initial condition length does not match grid");
  }
  FieldState s{representation_for(method), std::vector<Vec3>(grid.size(), Vec3{})};
  for (std::size_t i = 0; i < interior.size(); ++i) {
    const std::size_t k = grid.begin() + i;
    s.cells[k] = stored_image(conserved_from_primitive(interior[i], gas), s.representation, grid, k);
  }
  return s;
}

// Interior primitives (physical, unscaled).
inline std::vector<Primitive> interior_primitives(const FieldState& s, const RadialGrid& grid,
                                                  const GasModel& gas) {
  std::vector<Primitive> out;
  out.reserve(grid.n_cells());
  for (std::size_t k = grid.begin(); k < grid.end(); ++k) {
    try {
      out.push_back(primitive_from_conserved(physical_state(s, grid, k), gas));
    } catch (const InvalidStateError& e) {
      throw InvalidStateError(detail::cell_context(grid, k) + ": " + e.what());
    }
  }
  return out;
}

namespace detail {

struct CellData {
  std::vector<Conserved> phys;
  std::vector<Primitive> prim;
  std::vector<Vec3> evolved;
  std::vector<Vec3> flux;  // flux of the evolved variables
  std::vector<double> speed;
};

inline CellData cell_data(const FieldState& s, const RadialGrid& grid, const GasModel& gas) {
  const std::size_t n = grid.size();
  CellData d;
  d.phys.resize(n);
  d.prim.resize(n);
  d.evolved = s.cells;
  d.flux.resize(n);
  d.speed.resize(n);
  const bool scaled = s.representation == Representation::MetricScaled;
  for (std::size_t k = 0; k < n; ++k) {
    try {
      d.phys[k] = physical_state(s, grid, k);
      d.prim[k] = primitive_from_conserved(d.phys[k], gas);
    } catch (const InvalidStateError& e) {
      throw InvalidStateError(cell_context(grid, k) + ": " + e.what());
    }
    Vec3 f = euler_flux(d.prim[k], d.phys[k]);
    if (scaled) {
      const double metric = grid.center_metric(k);
      for (double& x : f) x *= metric;
    }
    d.flux[k] = f;
    d.speed[k] = std::abs(d.prim[k].u) + sound_speed(d.prim[k], gas);
  }
  return d;
}

// Numerical fluxes at faces begin()..end() (face k sits between cells k-1 and k).
// Returned vector is indexed by face; entries outside that range are unused.
inline std::vector<InterfaceFlux> face_fluxes(const CellData& d, const RadialGrid& grid,
                                              const GasModel& gas, const SchemeOptions& opt) {
  if (grid.ghost_depth() < kWenoGhostDepth) {
    throw ConfigError("grid ghost depth must be at least 3 for the WENO5 kernel");
  }
  std::vector<InterfaceFlux> out(grid.size() + 1);
  for (std::size_t f = grid.begin(); f <= grid.end(); ++f) {
    const std::size_t first = f - 3;
    const std::span<const Vec3, 6> states(d.evolved.data() + first, 6);
    const std::span<const Vec3, 6> fluxes(d.flux.data() + first, 6);
    std::array<double, 6> lambdas{};
    for (int j = 0; j < 6; ++j) lambdas[j] = d.speed[first + j];
    if (opt.lambda_mode == LambdaMode::WindowMax) {
      lambdas.fill(*std::max_element(lambdas.begin(), lambdas.end()));
    }
    CharBasis basis;
    try {
      basis = char_basis(d.phys[f - 1], d.phys[f], gas);
    } catch (const InvalidStateError& e) {
      throw InvalidStateError("face at r=" + std::to_string(grid.face(f)) + ": " + e.what());
    }
    out[f] = interface_flux(states, fluxes, basis, lambdas, opt.weno);
  }
  return out;
}

inline void require_representation(const FieldState& s, Representation rep, const char* who) {
  if (s.representation != rep) {
    throw ConfigError(std::string(who) + ": field representation does not match method");
  }
}

// Face pressure from cell pressures, reusing the nonlinear weights of the
// middle characteristic field in each wind direction and averaging the two.
inline double face_pressure(const CellData& d, const InterfaceFlux& fx, std::size_t f) {
  weno::Window6 p{};
  for (int j = 0; j < 6; ++j) p[j] = d.prim[f - 3 + j].p;
  const double plus = weno::combine(fx.plus_weights[1], weno::candidate_values(weno::plus_window(p)));
  const double minus =
      weno::combine(fx.minus_weights[1], weno::candidate_values(weno::minus_window(p)));
  return 0.5 * (plus + minus);
}

}  // namespace detail

inline FieldState rhs_method_one(const FieldState& s, const RadialGrid& grid, const GasModel& gas,
                                 const SchemeOptions& opt) {
  detail::require_representation(s, Representation::Conserved, "method one");
  const auto d = detail::cell_data(s, grid, gas);
  const auto fx = detail::face_fluxes(d, grid, gas, opt);
  const double dr = grid.dr();
  const int alpha = grid.alpha();
  FieldState out{s.representation, std::vector<Vec3>(grid.size(), Vec3{})};
  for (std::size_t k = grid.begin(); k < grid.end(); ++k) {
    const double geo = alpha / grid.center(k);
    const Primitive& w = d.prim[k];
    const Conserved& U = d.phys[k];
    const Vec3 source{-geo * U.m, -geo * U.m * w.u, -geo * w.u * (U.E + w.p)};
    for (int c = 0; c < 3; ++c) {
      out.cells[k][c] = -(fx[k + 1].flux[c] - fx[k].flux[c]) / dr + source[c];
    }
  }
  return out;
}

inline FieldState rhs_method_two(const FieldState& s, const RadialGrid& grid, const GasModel& gas,
                                 const SchemeOptions& opt) {
  detail::require_representation(s, Representation::Conserved, "method two");
  const auto d = detail::cell_data(s, grid, gas);
  const auto fx = detail::face_fluxes(d, grid, gas, opt);
  const double dr = grid.dr();
  std::vector<double> p_face(grid.size() + 1, 0.0);
  for (std::size_t f = grid.begin(); f <= grid.end(); ++f) p_face[f] = detail::face_pressure(d, fx[f], f);

  FieldState out{s.representation, std::vector<Vec3>(grid.size(), Vec3{})};
  for (std::size_t k = grid.begin(); k < grid.end(); ++k) {
    const double vol = grid.cell_volume(k);
    const double a_lo = grid.face_metric(k);
    const double a_hi = grid.face_metric(k + 1);
    for (int c = 0; c < 3; ++c) {
      out.cells[k][c] = -(a_hi * fx[k + 1].flux[c] - a_lo * fx[k].flux[c]) / vol;
    }
    const double source = (a_hi * p_face[k + 1] - a_lo * p_face[k]) / vol -
                          (p_face[k + 1] - p_face[k]) / dr;
    out.cells[k][1] += source;
  }
  return out;
}

inline FieldState rhs_method_three(const FieldState& s, const RadialGrid& grid,
                                   const GasModel& gas, const SchemeOptions& opt) {
  detail::require_representation(s, Representation::MetricScaled, "method three");
  const int alpha = grid.alpha();
  if (alpha > 0) {
    for (std::size_t k = grid.begin(); k < grid.end(); ++k) {
      if (!(grid.center(k) > 0.0)) {
        throw ConfigError("method three needs positive interior radii; " +
                          detail::cell_context(grid, k));
      }
    }
  }
  const auto d = detail::cell_data(s, grid, gas);
  const auto fx = detail::face_fluxes(d, grid, gas, opt);
  const double dr = grid.dr();
  FieldState out{s.representation, std::vector<Vec3>(grid.size(), Vec3{})};
  for (std::size_t k = grid.begin(); k < grid.end(); ++k) {
    for (int c = 0; c < 3; ++c) {
      out.cells[k][c] = -(fx[k + 1].flux[c] - fx[k].flux[c]) / dr;
    }
    // alpha p r^(alpha-1)
    const double source = alpha == 0 ? 0.0 : alpha * d.prim[k].p * radial_power(grid.center(k), alpha - 1);
    out.cells[k][1] += source;
  }
  return out;
}

inline FieldState rhs(MethodId method, const FieldState& s, const RadialGrid& grid,
                      const GasModel& gas, const SchemeOptions& opt) {
  switch (method) {
    case MethodId::One: return rhs_method_one(s, grid, gas, opt);
    case MethodId::Two: return rhs_method_two(s, grid, gas, opt);
    case MethodId::Three: return rhs_method_three(s, grid, gas, opt);
  }
  throw ConfigError("unknown method");
}

// Scalar advection phi_t + c0 r^-alpha (r^alpha phi)_r = 0 with c0 > 0.
// For method Three the field holds psi = r^alpha phi.
inline std::vector<double> rhs_advection(std::span<const double> phi, const RadialGrid& grid,
                                         double c0, MethodId method, const weno::Params& params) {
  if (phi.size() != grid.size()) throw ConfigError("advection field length does not match grid");
  if (!(c0 > 0.0)) throw ConfigError("advection speed must be positive");
  if (grid.ghost_depth() < kWenoGhostDepth) {
    throw ConfigError("grid ghost depth must be at least 3 for the WENO5 kernel");
  }
  std::vector<double> face(grid.size() + 1, 0.0);
  for (std::size_t f = grid.begin(); f <= grid.end(); ++f) {
    const weno::Window w{c0 * phi[f - 3], c0 * phi[f - 2], c0 * phi[f - 1], c0 * phi[f],
                         c0 * phi[f + 1]};
    face[f] = weno::reconstruct_interface(w, params);
  }
  const double dr = grid.dr();
  const int alpha = grid.alpha();
  std::vector<double> out(grid.size(), 0.0);
  for (std::size_t k = grid.begin(); k < grid.end(); ++k) {
    switch (method) {
      case MethodId::One:
        out[k] = -(face[k + 1] - face[k]) / dr - alpha * c0 * phi[k] / grid.center(k);
        break;
      case MethodId::Two:
        out[k] = -(grid.face_metric(k + 1) * face[k + 1] - grid.face_metric(k) * face[k]) /
                 grid.cell_volume(k);
        break;
      case MethodId::Three:
        out[k] = -(face[k + 1] - face[k]) / dr;
        break;
    }
  }
  return out;
}

// Difference between the volume-weighted and expanded divergence of r^alpha f
// at a cell centered on r_c with width dr.
inline double truncation_gap(const std::function<double(double)>& f, double r_c, double dr,
                             int alpha) {
  if (r_c == 0.0) throw ConfigError("truncation gap undefined at r = 0");
  (void)Geometry(alpha);
  const double lo = r_c - 0.5 * dr;
  const double hi = r_c + 0.5 * dr;
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  const double vol = (radial_power(hi, alpha) * hi - radial_power(lo, alpha) * lo) / (alpha + 1);
  const double integral_form = (f_hi * radial_power(hi, alpha) - f_lo * radial_power(lo, alpha)) / vol;
  const double expanded = (f_hi - f_lo) / dr + alpha * f(r_c) / r_c;
  return integral_form - expanded;
}

inline double truncation_gap(const std::function<double(double)>& f, const RadialGrid& grid,
                             std::size_t k) {
  const double lo = grid.face(k);
  const double hi = grid.face(k + 1);
  const double r_c = grid.center(k);
  if (r_c == 0.0) throw ConfigError("truncation gap undefined at r = 0");
  const int alpha = grid.alpha();
  const double integral_form =
      (f(hi) * grid.face_metric(k + 1) - f(lo) * grid.face_metric(k)) / grid.cell_volume(k);
  const double expanded = (f(hi) - f(lo)) / grid.dr() + alpha * f(r_c) / r_c;
  return integral_form - expanded;
}

}  // namespace radweno
