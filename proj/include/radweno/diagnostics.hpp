#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "radweno/error.hpp"
#include "radweno/mesh.hpp"
#include "radweno/physics.hpp"
#include "radweno/schemes.hpp"

namespace radweno {

// Unweighted RMS difference.
inline double l2_error(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ConfigError("l2_error: length mismatch");
  if (a.empty()) throw ConfigError("l2_error: empty fields");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sum / static_cast<double>(a.size()));
}

inline double linf_error(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ConfigError("linf_error: length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// slope_k = log(e_k / e_{k+1}) / log(n_{k+1} / n_k)
inline std::vector<double> observed_orders(std::span<const double> errors,
                                           std::span<const double> resolutions) {
  if (errors.size() != resolutions.size()) throw ConfigError("observed_orders: length mismatch");
  for (double e : errors) {
    if (!(e > 0.0)) throw ConfigError("observed_orders: errors must be positive");
  }
  std::vector<double> out;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    if (!(resolutions[k + 1] > resolutions[k])) {
      throw ConfigError("observed_orders: resolutions must increase");
    }
    out.push_back(std::log(errors[k] / errors[k + 1]) /
                  std::log(resolutions[k + 1] / resolutions[k]));
  }
  return out;
}

struct ConvergenceReport {
  std::vector<std::size_t> resolutions;
  std::vector<double> errors;
  std::vector<double> orders;
};

inline ConvergenceReport make_report(std::vector<std::size_t> resolutions,
                                     std::vector<double> errors) {
  std::vector<double> n(resolutions.begin(), resolutions.end());
  ConvergenceReport r{std::move(resolutions), std::move(errors), {}};
  r.orders = observed_orders(r.errors, n);
  return r;
}

// ---------------------------------------------------------------------------
// Domain totals

enum class Component { Mass = 0, Momentum = 1, Energy = 2 };

enum class TotalMode {
  MethodAdapted,  // the telescoping sum of the evolved representation
  Gauss4,         // 4-point Gauss-Legendre of r^alpha times a quartic interpolant
};

inline const char* to_string(TotalMode mode) {
  return mode == TotalMode::MethodAdapted ? "adapted" : "gauss4";
}

namespace detail {

// Interpolates five (x, y) points at x0 in Lagrange form.
inline double lagrange5(const std::array<double, 5>& x, const std::array<double, 5>& y, double x0) {
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) {
    double term = y[i];
    for (int j = 0; j < 5; ++j) {
      if (j != i) term *= (x0 - x[j]) / (x[i] - x[j]);
    }
    sum += term;
  }
  return sum;
}

}  // namespace detail

// Per-cell values are physical (unscaled) interior values phi_i.
inline double gauss4_total(std::span<const double> phi, const RadialGrid& grid) {
  const std::size_t n = grid.n_cells();
  if (phi.size() != n) throw ConfigError("gauss4_total: length mismatch");
  if (n < 5) throw ConfigError("Gauss4 totals need at least 5 cells");
  static constexpr std::array<double, 4> nodes{-0.8611363115940526, -0.3399810435848563,
                                               0.3399810435848563, 0.8611363115940526};
  static constexpr std::array<double, 4> weights{0.3478548451374538, 0.6521451548625461,
                                                 0.6521451548625461, 0.3478548451374538};
  const int alpha = grid.alpha();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t start = std::min(i >= 2 ? i - 2 : 0, n - 5);
    std::array<double, 5> x{};
    std::array<double, 5> y{};
    for (int j = 0; j < 5; ++j) {
      x[j] = grid.center(grid.begin() + start + j);
      y[j] = phi[start + j];
    }
    const double lo = grid.face(grid.begin() + i);
    const double hi = grid.face(grid.begin() + i + 1);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double cell = 0.0;
    for (int q = 0; q < 4; ++q) {
      const double r = mid + half * nodes[q];
      cell += weights[q] * radial_power(r, alpha) * detail::lagrange5(x, y, r);
    }
    total += half * cell;
  }
  return total;
}

inline double discrete_total(const FieldState& s, const RadialGrid& grid, Component component,
                             TotalMode mode) {
  const auto c = static_cast<int>(component);
  if (mode == TotalMode::MethodAdapted) {
    double total = 0.0;
    for (std::size_t k = grid.begin(); k < grid.end(); ++k) {
      const double w = s.representation == Representation::MetricScaled ? grid.dr() : grid.cell_volume(k);
      total += w * s.cells[k][c];
    }
    return total;
  }
  std::vector<double> phi(grid.n_cells());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    phi[i] = physical_state(s, grid, grid.begin() + i).as_vec()[c];
  }
  return gauss4_total(phi, grid);
}

struct Totals {
  double mass = 0.0;
  double momentum = 0.0;
  double energy = 0.0;
};

inline Totals discrete_totals(const FieldState& s, const RadialGrid& grid, TotalMode mode) {
  return {discrete_total(s, grid, Component::Mass, mode),
          discrete_total(s, grid, Component::Momentum, mode),
          discrete_total(s, grid, Component::Energy, mode)};
}

struct Residual {
  double mass = 0.0;
  double energy = 0.0;
};

// Time series of total(t) - total(0). The first recorded row is the baseline.
class ConservationLedger {
 public:
  struct Row {
    double t;
    double delta_mass;
    double delta_momentum;
    double delta_energy;
  };

  explicit ConservationLedger(TotalMode mode) : mode_(mode) {}

  TotalMode mode() const { return mode_; }
  const Totals& baseline() const { return baseline_; }
  const std::vector<Row>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }

  void record(double t, const Totals& totals) {
    if (rows_.empty()) {
      baseline_ = totals;
      rows_.push_back({t, 0.0, 0.0, 0.0});
      return;
    }
    if (t < rows_.back().t) throw ConfigError("ledger rows must be time-ordered");
    rows_.push_back({t, totals.mass - baseline_.mass, totals.momentum - baseline_.momentum,
                     totals.energy - baseline_.energy});
  }

  void record(double t, const FieldState& s, const RadialGrid& grid) {
    record(t, discrete_totals(s, grid, mode_));
  }

 private:
  TotalMode mode_;
  Totals baseline_{};
  std::vector<Row> rows_;
};

// Residual of the latest row recorded at or before t.
inline Residual conservation_residual(const ConservationLedger& ledger, double t) {
  if (ledger.empty()) throw ConfigError("ledger has no baseline");
  const auto& rows = ledger.rows();
  auto it = std::upper_bound(rows.begin(), rows.end(), t,
                             [](double value, const ConservationLedger::Row& r) { return value < r.t; });
  if (it == rows.begin()) throw ConfigError("no ledger row at or before the requested time");
  --it;
  return {it->delta_mass, it->delta_energy};
}

// ---------------------------------------------------------------------------
// Comparing runs across resolutions

enum class Restriction {
  MidpointAverage,  // mean of the two fine cells straddling the coarse center
  Lagrange6,        // six-point centered interpolation, O(h^6)
};

// Samples a fine interior field at the centers of a grid that is coarser by a
// power-of-two factor. Each coarse center coincides with a fine face.
inline std::vector<double> restrict_to_coarse(std::span<const double> fine, std::size_t n_coarse,
                                              Restriction kind) {
  if (n_coarse == 0 || fine.size() % n_coarse != 0) {
    throw ConfigError("restriction needs the fine count to be a multiple of the coarse count");
  }
  const std::size_t ratio = fine.size() / n_coarse;
  if (ratio < 2 || (ratio & (ratio - 1)) != 0) {
    throw ConfigError("restriction ratio must be a power of two");
  }
  std::vector<double> out(n_coarse);
  for (std::size_t i = 0; i < n_coarse; ++i) {
    const std::size_t right = ratio * i + ratio / 2;  // fine cell just right of the coarse center
    const bool interior = right >= 3 && right + 2 < fine.size();
    if (kind == Restriction::Lagrange6 && interior) {
      out[i] = (3.0 * (fine[right - 3] + fine[right + 2]) - 25.0 * (fine[right - 2] + fine[right + 1]) +
                150.0 * (fine[right - 1] + fine[right])) /
               256.0;
    } else {
      out[i] = 0.5 * (fine[right - 1] + fine[right]);
    }
  }
  return out;
}

// Radius of the outermost steep density front (the leading shock), located at
// the face with the locally largest density jump and refined by a parabola
// through the neighboring jumps.
inline double shock_front(std::span<const double> centers, std::span<const double> rho,
                          double threshold = 0.25) {
  const std::size_t n = rho.size();
  if (n < 3 || centers.size() != n) throw ConfigError("shock_front needs matching profiles of 3+ cells");
  std::vector<double> jump(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) jump[i] = std::abs(rho[i + 1] - rho[i]);
  const double largest = *std::max_element(jump.begin(), jump.end());
  if (!(largest > 0.0)) throw ConfigError("shock_front: profile is flat");
  std::size_t i = n - 2;
  while (i > 0 && jump[i] < threshold * largest) --i;
  while (i > 0 && jump[i - 1] > jump[i]) --i;
  const double h = centers[1] - centers[0];
  double face = 0.5 * (centers[i] + centers[i + 1]);
  if (i > 0 && i + 1 < jump.size()) {
    const double a = jump[i - 1];
    const double b = jump[i];
    const double c = jump[i + 1];
    const double denom = a - 2.0 * b + c;
    if (denom < 0.0) face += 0.5 * h * (a - c) / denom;
  }
  return face;
}

}  // namespace radweno
