#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <sstream>
#include <utility>

#include "radweno/error.hpp"
#include "radweno/weno.hpp"

namespace radweno {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

inline Vec3 operator*(const Mat3& a, const Vec3& x) {
  Vec3 y{};
  for (int i = 0; i < 3; ++i) y[i] = a[i][0] * x[0] + a[i][1] * x[1] + a[i][2] * x[2];
  return y;
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return c;
}

struct GasModel {
  double gamma = 1.4;

  void validate() const {
    if (!(gamma > 1.0)) throw ConfigError("gas gamma must exceed 1");
  }
};

// (rho, m = rho u, E) per unit volume.
struct Conserved {
  double rho = 0.0;
  double m = 0.0;
  double E = 0.0;

  Vec3 as_vec() const { return {rho, m, E}; }
  static Conserved from_vec(const Vec3& v) { return {v[0], v[1], v[2]}; }
};

struct Primitive {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

inline Conserved conserved_from_primitive(const Primitive& w, const GasModel& gas) {
  return {w.rho, w.rho * w.u, w.p / (gas.gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
}

inline Primitive primitive_from_conserved(const Conserved& U, const GasModel& gas) {
  const double u = U.m / U.rho;
  const double p = (gas.gamma - 1.0) * (U.E - 0.5 * U.m * u);
  if (!(U.rho > 0.0) || !(p > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "invalid state (rho=" << U.rho << ", m=" << U.m << ", E=" << U.E << ", p=" << p
        << ")";
    throw InvalidStateError(msg.str());
  }
  return {U.rho, u, p};
}

inline double sound_speed(const Primitive& w, const GasModel& gas) {
  if (!(w.rho > 0.0) || !(w.p > 0.0)) {
    throw InvalidStateError("sound speed of invalid state");
  }
  return std::sqrt(gas.gamma * w.p / w.rho);
}

inline Vec3 euler_flux(const Primitive& w, const Conserved& U) {
  return {U.m, U.m * w.u + w.p, w.u * (U.E + w.p)};
}

inline Vec3 euler_flux(const Conserved& U, const GasModel& gas) {
  return euler_flux(primitive_from_conserved(U, gas), U);
}

// Local Lax-Friedrichs split: f+ = (f + lambda u)/2, f- = f - f+.
inline std::pair<double, double> llf_split(double f, double u, double lambda) {
  const double plus = 0.5 * (f + lambda * u);
  return {plus, f - plus};
}

// Eigenvectors of the ideal-gas flux Jacobian. Rows of L and columns of R are
// ordered by eigenvalue (u - a, u, u + a).
struct CharBasis {
  Mat3 L{};
  Mat3 R{};
  Vec3 eigenvalues{};
  double lambda_max = 0.0;
};

inline CharBasis char_basis(const Primitive& w, const GasModel& gas) {
  const double a = sound_speed(w, gas);
  const double u = w.u;
  const double h = a * a / (gas.gamma - 1.0) + 0.5 * u * u;
  const double b1 = (gas.gamma - 1.0) / (a * a);
  const double b2 = 0.5 * b1 * u * u;

  CharBasis basis;
  basis.R = {{{1.0, 1.0, 1.0}, {u - a, u, u + a}, {h - u * a, 0.5 * u * u, h + u * a}}};
  basis.L = {{{0.5 * (b2 + u / a), -0.5 * (b1 * u + 1.0 / a), 0.5 * b1},
              {1.0 - b2, b1 * u, -b1},
              {0.5 * (b2 - u / a), -0.5 * (b1 * u - 1.0 / a), 0.5 * b1}}};
  basis.eigenvalues = {u - a, u, u + a};
  basis.lambda_max = std::abs(u) + a;
  return basis;
}

// Basis at the arithmetic mean of the two primitive states.
inline CharBasis char_basis(const Conserved& left, const Conserved& right, const GasModel& gas) {
  const Primitive wl = primitive_from_conserved(left, gas);
  const Primitive wr = primitive_from_conserved(right, gas);
  const Primitive mean{0.5 * (wl.rho + wr.rho), 0.5 * (wl.u + wr.u), 0.5 * (wl.p + wr.p)};
  return char_basis(mean, gas);
}

struct InterfaceFlux {
  Vec3 flux{};
  // Nonlinear weights per characteristic field for the two wind directions.
  std::array<weno::Triple, 3> plus_weights{};
  std::array<weno::Triple, 3> minus_weights{};
};

// Numerical flux at the interface shared by window cells 2 and 3.
//
// States and fluxes are projected onto the characteristic fields, split with
// the per-cell speeds, reconstructed upwind in each direction and mapped back.
inline InterfaceFlux interface_flux(std::span<const Vec3, 6> states,
                                    std::span<const Vec3, 6> fluxes, const CharBasis& basis,
                                    const std::array<double, 6>& lambdas,
                                    const weno::Params& params) {
  std::array<Vec3, 6> q{};
  std::array<Vec3, 6> g{};
  for (int j = 0; j < 6; ++j) {
    q[j] = basis.L * states[j];
    g[j] = basis.L * fluxes[j];
  }
  InterfaceFlux out;
  Vec3 char_flux{};
  for (int c = 0; c < 3; ++c) {
    weno::Window6 plus{};
    weno::Window6 minus{};
    for (int j = 0; j < 6; ++j) {
      const auto [fp, fm] = llf_split(g[j][c], q[j][c], lambdas[j]);
      plus[j] = fp;
      minus[j] = fm;
    }
    const auto rp = weno::reconstruct_plus(plus, params);
    const auto rm = weno::reconstruct_minus(minus, params);
    char_flux[c] = rp.value + rm.value;
    out.plus_weights[c] = rp.weights;
    out.minus_weights[c] = rm.weights;
  }
  out.flux = basis.R * char_flux;
  return out;
}

inline InterfaceFlux interface_flux(std::span<const Vec3, 6> states,
                                    std::span<const Vec3, 6> fluxes, const CharBasis& basis,
                                    double lambda, const weno::Params& params) {
  std::array<double, 6> lambdas{};
  lambdas.fill(lambda);
  return interface_flux(states, fluxes, basis, lambdas, params);
}

}  // namespace radweno
