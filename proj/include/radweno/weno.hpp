#pragma once

#include <array>
#include <cmath>
#include <span>

#include "radweno/error.hpp"

// Fifth-order WENO reconstruction of interface values from point values.
//
// All kernels work on a five-point window (v1..v5) = (f_{j-2}..f_{j+2}) with
// the wind blowing from low to high index, and produce the value at j+1/2.
// The opposite wind direction is handled by mirroring the window; see
// reconstruct_minus().

namespace radweno::weno {

using Window = std::array<double, 5>;
using Triple = std::array<double, 3>;

struct Params {
  double epsilon = 1e-6;
  Triple linear_weights{0.1, 0.6, 0.3};
  // Exponent on (epsilon + beta). 2 is the Jiang-Shu form, 1 the unsquared one.
  int beta_power = 2;

  void validate() const {
    if (!(epsilon > 0.0)) throw ConfigError("weno epsilon must be positive");
    double sum = 0.0;
    for (double g : linear_weights) {
      if (!(g > 0.0)) throw ConfigError("weno linear weights must be positive");
      sum += g;
    }
    if (std::abs(sum - 1.0) > 1e-14) throw ConfigError("weno linear weights must sum to 1");
    if (beta_power != 1 && beta_power != 2) throw ConfigError("weno beta power must be 1 or 2");
  }

  bool operator==(const Params&) const = default;
};

// Third-order candidate interface values from the three sub-stencils.
constexpr Triple candidate_values(const Window& v) {
  return {v[0] / 3.0 - 7.0 / 6.0 * v[1] + 11.0 / 6.0 * v[2],
          -v[1] / 6.0 + 5.0 / 6.0 * v[2] + v[3] / 3.0,
          v[2] / 3.0 + 5.0 / 6.0 * v[3] - v[4] / 6.0};
}

constexpr Triple smoothness_indicators(const Window& v) {
  auto sq = [](double x) { return x * x; };
  return {13.0 / 12.0 * sq(v[0] - 2.0 * v[1] + v[2]) + 0.25 * sq(v[0] - 4.0 * v[1] + 3.0 * v[2]),
          13.0 / 12.0 * sq(v[1] - 2.0 * v[2] + v[3]) + 0.25 * sq(v[1] - v[3]),
          13.0 / 12.0 * sq(v[2] - 2.0 * v[3] + v[4]) + 0.25 * sq(3.0 * v[2] - 4.0 * v[3] + v[4])};
}

inline Triple nonlinear_weights(const Triple& betas, const Params& params) {
  Triple w{};
  double sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    double denom = params.epsilon + betas[k];
    if (params.beta_power == 2) denom *= denom;
    w[k] = params.linear_weights[k] / denom;
    sum += w[k];
  }
  for (double& x : w) x /= sum;
  return w;
}

constexpr double combine(const Triple& weights, const Triple& candidates) {
  return weights[0] * candidates[0] + weights[1] * candidates[1] + weights[2] * candidates[2];
}

struct Reconstruction {
  double value;
  Triple weights;
};

inline Reconstruction reconstruct_with_weights(const Window& v, const Params& params) {
  const Triple w = nonlinear_weights(smoothness_indicators(v), params);
  return {combine(w, candidate_values(v)), w};
}

inline double reconstruct_interface(const Window& v, const Params& params) {
  return reconstruct_with_weights(v, params).value;
}

// Six point values s_0..s_5 straddling the interface between s_2 and s_3.
using Window6 = std::array<double, 6>;

constexpr Window plus_window(const Window6& s) { return {s[0], s[1], s[2], s[3], s[4]}; }
constexpr Window minus_window(const Window6& s) { return {s[5], s[4], s[3], s[2], s[1]}; }

// Value at the shared interface for wind toward increasing index.
inline Reconstruction reconstruct_plus(const Window6& s, const Params& params) {
  return reconstruct_with_weights(plus_window(s), params);
}

// Value at the shared interface for wind toward decreasing index.
inline Reconstruction reconstruct_minus(const Window6& s, const Params& params) {
  return reconstruct_with_weights(minus_window(s), params);
}

}  // namespace radweno::weno
