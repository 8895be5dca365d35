#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "radweno/error.hpp"
#include "radweno/mesh.hpp"
#include "radweno/physics.hpp"
#include "radweno/schemes.hpp"

namespace radweno {

inline double lincomb(double u, double a, double k) { return u + a * k; }

inline std::vector<double> lincomb(const std::vector<double>& u, double a,
                                   const std::vector<double>& k) {
  std::vector<double> out(u);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * k[i];
  return out;
}

template <class State>
concept TimeState = requires(const State& u, double a) {
  { lincomb(u, a, u) } -> std::convertible_to<State>;
};

struct TimeControls {
  double cfl = 0.5;
  double t_final = 0.0;
  std::size_t max_steps = 10'000'000;

  void validate() const {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
    if (!(t_final >= 0.0)) throw ConfigError("t_final must be nonnegative");
    if (max_steps == 0) throw ConfigError("max_steps must be positive");
  }
};

struct NoFill {
  template <class State>
  void operator()(State&) const {}
};

namespace detail {

template <class F>
auto with_context(const std::string& prefix, F&& f) {
  try {
    return f();
  } catch (const InvalidStateError& e) {
    throw InvalidStateError(prefix + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(prefix + e.what());
  } catch (const DivergenceError& e) {
    throw DivergenceError(prefix + e.what());
  }
}

}  // namespace detail

// Classical four-stage Runge-Kutta step. `fill` refreshes ghost cells of every
// stage input before the operator sees it.
template <TimeState State, class Rhs, class Fill = NoFill>
State rk4_step(const Rhs& rhs, const State& u, double dt, const Fill& fill = {}) {
  State u0 = u;
  fill(u0);
  const State k0 = detail::with_context("RK stage 1: ", [&] { return State(rhs(u0)); });
  State u1 = lincomb(u0, 0.5 * dt, k0);
  fill(u1);
  const State k1 = detail::with_context("RK stage 2: ", [&] { return State(rhs(u1)); });
  State u2 = lincomb(u0, 0.5 * dt, k1);
  fill(u2);
  const State k2 = detail::with_context("RK stage 3: ", [&] { return State(rhs(u2)); });
  State u3 = lincomb(u0, dt, k2);
  fill(u3);
  const State k3 = detail::with_context("RK stage 4: ", [&] { return State(rhs(u3)); });

  State out = lincomb(u0, dt / 6.0, k0);
  out = lincomb(out, dt / 3.0, k1);
  out = lincomb(out, dt / 3.0, k2);
  out = lincomb(out, dt / 6.0, k3);
  return out;
}

// cfl * dr / max(|u| + a) over interior cells.
inline double stable_dt(const FieldState& s, const RadialGrid& grid, const GasModel& gas,
                        const TimeControls& controls) {
  double speed = 0.0;
  for (std::size_t k = grid.begin(); k < grid.end(); ++k) {
    Primitive w;
    try {
      w = primitive_from_conserved(physical_state(s, grid, k), gas);
    } catch (const InvalidStateError& e) {
      throw InvalidStateError(detail::cell_context(grid, k) + ": " + e.what());
    }
    speed = std::max(speed, std::abs(w.u) + sound_speed(w, gas));
  }
  return controls.cfl * grid.dr() / speed;
}

// Clips a step so that it lands exactly on t_final.
inline double clip_dt(double dt, double t, double t_final) {
  return std::min(dt, t_final - t);
}

template <class State>
struct AdvanceResult {
  State state;
  double t = 0.0;
  std::size_t steps = 0;
};

template <class State>
std::string step_context(const AdvanceResult<State>& r) {
  std::ostringstream msg;
  msg.precision(10);
  msg << "step " << r.steps + 1 << " from t=" << r.t << ": ";
  return msg.str();
}

// March from t = 0 to controls.t_final. dt_fn(state) gives the unclipped
// step; on_step(t, state) runs after every accepted step.
template <TimeState State, class Rhs, class DtFn, class Fill, class Observer>
AdvanceResult<State> advance(const Rhs& rhs, State s, const TimeControls& controls,
                             const DtFn& dt_fn, const Fill& fill, Observer&& on_step) {
  controls.validate();
  AdvanceResult<State> result{std::move(s), 0.0, 0};
  const double t_final = controls.t_final;
  while (result.t < t_final) {
    if (result.steps >= controls.max_steps) {
      throw DivergenceError("step cap of " + std::to_string(controls.max_steps) +
                            " reached at t=" + std::to_string(result.t));
    }
    try {
      double dt = dt_fn(result.state);
      if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw DivergenceError("nonpositive or non-finite time step");
      }
      const bool last = result.t + dt >= t_final;
      if (last) dt = t_final - result.t;
      result.state = rk4_step(rhs, result.state, dt, fill);
      result.t = last ? t_final : result.t + dt;
    } catch (const InvalidStateError& e) {
      throw DivergenceError(step_context(result) + e.what());
    } catch (const DivergenceError& e) {
      throw DivergenceError(step_context(result) + e.what());
    }
    ++result.steps;
    on_step(result.t, result.state);
  }
  return result;
}

}  // namespace radweno
