#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "radweno/error.hpp"

namespace radweno {

// r^alpha for the integer exponents used by radial geometries. Signed: a
// negative r with alpha = 1 gives a negative result.
constexpr double radial_power(double r, int alpha) {
  switch (alpha) {
    case 0: return 1.0;
    case 1: return r;
    default: return r * r;
  }
}

// Cartesian (0), cylindrical (1) or spherical (2) radial symmetry.
class Geometry {
 public:
  explicit Geometry(int alpha) : alpha_(alpha) {
    if (alpha < 0 || alpha > 2) {
      throw ConfigError("geometry exponent alpha must be 0, 1 or 2, got " +
                        std::to_string(alpha));
    }
  }

  static Geometry cartesian() { return Geometry(0); }
  static Geometry cylindrical() { return Geometry(1); }
  static Geometry spherical() { return Geometry(2); }

  int alpha() const { return alpha_; }
  bool operator==(const Geometry&) const = default;

 private:
  int alpha_;
};

// Uniform cell-centered radial mesh with ghost layers on both ends.
//
// Storage index k runs over [0, size()); interior cells occupy
// [begin(), end()). Face k is the left face of storage cell k, so faces are
// indexed over [0, size()]. Ghost centers may lie at negative radius; only
// boundary fills should read them.
class RadialGrid {
 public:
  RadialGrid(std::size_t n_cells, double r_min, double r_max, Geometry geometry,
             std::size_t ghost_depth)
      : n_cells_(n_cells),
        ghost_depth_(ghost_depth),
        r_min_(r_min),
        r_max_(r_max),
        geometry_(geometry) {
    if (n_cells == 0) throw ConfigError("grid needs at least one cell");
    if (!(r_max > r_min)) throw ConfigError("grid needs r_max > r_min");
    if (r_min < 0.0) throw ConfigError("grid needs r_min >= 0");
    dr_ = (r_max - r_min) / static_cast<double>(n_cells);
    const std::size_t total = n_cells + 2 * ghost_depth;
    centers_.resize(total);
    faces_.resize(total + 1);
    for (std::size_t k = 0; k <= total; ++k) {
      faces_[k] = r_min + offset(k) * dr_;
    }
    for (std::size_t k = 0; k < total; ++k) {
      centers_[k] = r_min + (offset(k) + 0.5) * dr_;
    }
  }

  std::size_t n_cells() const { return n_cells_; }
  std::size_t ghost_depth() const { return ghost_depth_; }
  std::size_t size() const { return centers_.size(); }
  std::size_t begin() const { return ghost_depth_; }
  std::size_t end() const { return ghost_depth_ + n_cells_; }

  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  double dr() const { return dr_; }
  const Geometry& geometry() const { return geometry_; }
  int alpha() const { return geometry_.alpha(); }

  double center(std::size_t k) const { return centers_[k]; }
  double face(std::size_t k) const { return faces_[k]; }
  const std::vector<double>& centers() const { return centers_; }
  const std::vector<double>& faces() const { return faces_; }

  // (r_{k+1/2}^{a+1} - r_{k-1/2}^{a+1}) / (a+1); exactly dr when a = 0.
  double cell_volume(std::size_t k) const {
    const int a = alpha();
    if (a == 0) return dr_;
    const double lo = faces_[k];
    const double hi = faces_[k + 1];
    return (radial_power(hi, a) * hi - radial_power(lo, a) * lo) / (a + 1);
  }

  double face_metric(std::size_t k) const { return radial_power(faces_[k], alpha()); }
  double center_metric(std::size_t k) const { return radial_power(centers_[k], alpha()); }

 private:
  double offset(std::size_t k) const {
    return static_cast<double>(k) - static_cast<double>(ghost_depth_);
  }

  std::size_t n_cells_;
  std::size_t ghost_depth_;
  double r_min_;
  double r_max_;
  double dr_ = 0.0;
  Geometry geometry_;
  std::vector<double> centers_;
  std::vector<double> faces_;
};

inline RadialGrid build_grid(std::size_t n_cells, double r_min, double r_max,
                             Geometry geometry, std::size_t ghost_depth) {
  return RadialGrid(n_cells, r_min, r_max, geometry, ghost_depth);
}

// Ghost depth required by the five-point reconstruction.
inline constexpr std::size_t kWenoGhostDepth = 3;

}  // namespace radweno
