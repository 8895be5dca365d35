#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "radweno/problems.hpp"
#include "radweno/schemes.hpp"

using namespace radweno;

namespace {

const GasModel kAir{1.4};
constexpr MethodId kAll[] = {MethodId::One, MethodId::Two, MethodId::Three};

double interior_max(const FieldState& d, const RadialGrid& g, int c) {
  double m = 0.0;
  for (std::size_t k = g.begin(); k < g.end(); ++k) m = std::max(m, std::abs(d.cells[k][c]));
  return m;
}

// Every storage cell, ghosts included, set from a primitive profile.
FieldState sampled_state(const RadialGrid& g, MethodId m, const std::function<Primitive(double)>& w) {
  FieldState s{representation_for(m), std::vector<Vec3>(g.size())};
  for (std::size_t k = 0; k < g.size(); ++k) {
    s.cells[k] = stored_image(conserved_from_primitive(w(g.center(k)), kAir), s.representation, g, k);
  }
  return s;
}

}  // namespace

TEST(Representation, MatchesMethod) {
  EXPECT_EQ(representation_for(MethodId::One), Representation::Conserved);
  EXPECT_EQ(representation_for(MethodId::Two), Representation::Conserved);
  EXPECT_EQ(representation_for(MethodId::Three), Representation::MetricScaled);
  EXPECT_STREQ(to_string(MethodId::Two), "two");
}

TEST(Representation, ScaledRoundTrip) {
  const auto g = build_grid(10, 0.0, 1.0, Geometry(2), 3);
  const std::vector<Primitive> w(10, Primitive{0.7, -0.3, 2.0});
  const FieldState s = make_field_state(w, g, kAir, MethodId::Three);
  EXPECT_DOUBLE_EQ(s.cells[g.begin()][0], 0.7 * g.center(g.begin()) * g.center(g.begin()));
  const auto back = interior_primitives(s, g, kAir);
  for (const auto& p : back) {
    EXPECT_NEAR(p.rho, 0.7, 1e-15);
    EXPECT_NEAR(p.u, -0.3, 1e-15);
    EXPECT_NEAR(p.p, 2.0, 1e-14);
  }
  EXPECT_THROW(make_field_state(std::vector<Primitive>(9, w[0]), g, kAir, MethodId::Three), ConfigError);
}

TEST(Rhs, RejectsMismatchedRepresentation) {
  const auto g = build_grid(10, 0.5, 1.5, Geometry(1), 3);
  const FieldState s = sampled_state(g, MethodId::Three, [](double) { return Primitive{1, 0, 1}; });
  EXPECT_THROW(rhs_method_one(s, g, kAir, {}), ConfigError);
  EXPECT_THROW(rhs_method_two(s, g, kAir, {}), ConfigError);
  const FieldState c = sampled_state(g, MethodId::One, [](double) { return Primitive{1, 0, 1}; });
  EXPECT_THROW(rhs_method_three(c, g, kAir, {}), ConfigError);
}

TEST(Rhs, RejectsShallowGhosts) {
  const auto g = build_grid(10, 0.5, 1.5, Geometry(1), 2);
  const FieldState s = sampled_state(g, MethodId::One, [](double) { return Primitive{1, 0, 1}; });
  EXPECT_THROW(rhs_method_one(s, g, kAir, {}), ConfigError);
}

TEST(Rhs, InvalidStateNamesCell) {
  const auto g = build_grid(10, 0.5, 1.5, Geometry(1), 3);
  FieldState s = sampled_state(g, MethodId::One, [](double) { return Primitive{1, 0, 1}; });
  s.cells[g.begin() + 4][2] = -1.0;
  try {
    rhs_method_one(s, g, kAir, {});
    FAIL() << "expected an invalid state";
  } catch (const InvalidStateError& e) {
    EXPECT_NE(std::string(e.what()).find("cell 4"), std::string::npos) << e.what();
  }
}

// The C-property: a stagnant uniform gas stays at rest.
TEST(Rhs, WellBalancedAtRest) {
  for (LambdaMode mode : {LambdaMode::WindowMax, LambdaMode::Pointwise}) {
    for (int alpha : {0, 1, 2}) {
      for (double r_min : {0.0, 0.3}) {
        const auto g = build_grid(64, r_min, r_min + 1.0, Geometry(alpha), 3);
        const Primitive rest{1.3, 0.0, 2.4};
        for (MethodId m : kAll) {
          FieldState s = make_field_state(std::vector<Primitive>(64, rest), g, kAir, m);
          const Boundaries b{{r_min == 0.0 ? BoundarySide::Kind::Reflecting : BoundarySide::Kind::Ambient, rest},
                             {BoundarySide::Kind::Ambient, rest}};
          fill_ghosts(s, g, kAir, b);
          SchemeOptions opt;
          opt.lambda_mode = mode;
          const FieldState d = rhs(m, s, g, kAir, opt);
          for (int c = 0; c < 3; ++c) {
            EXPECT_LE(interior_max(d, g, c), 1e-12 * rest.p / g.dr())
                << to_string(m) << " alpha " << alpha << " r_min " << r_min << " component " << c;
          }
        }
      }
    }
  }
}

TEST(Rhs, CartesianFormsCoincide) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
  const auto g = build_grid(40, 0.0, 1.0, Geometry(0), 3);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = u(rng), b = u(rng), c = u(rng);
    auto w = [&](double r) {
      return Primitive{1.0 + 0.3 * std::sin(2 * M_PI * r + a), 0.4 * std::cos(2 * M_PI * r + b),
                       1.0 + 0.2 * std::sin(4 * M_PI * r + c)};
    };
    const FieldState d1 = rhs_method_one(sampled_state(g, MethodId::One, w), g, kAir, {});
    const FieldState d2 = rhs_method_two(sampled_state(g, MethodId::Two, w), g, kAir, {});
    const FieldState d3 = rhs_method_three(sampled_state(g, MethodId::Three, w), g, kAir, {});
    for (std::size_t k = g.begin(); k < g.end(); ++k) {
      for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(d1.cells[k][i], d2.cells[k][i], 1e-12);
        EXPECT_NEAR(d1.cells[k][i], d3.cells[k][i], 1e-12);
      }
    }
  }
}

// Weighted sums of the mass and energy rates reduce to the two boundary fluxes.
TEST(Rhs, ConservativeFormsTelescope) {
  auto w = [](double r) {
    return Primitive{1.0 + 0.5 * std::exp(-20 * (r - 0.8) * (r - 0.8)), 0.3 * std::sin(3 * r), 1.0 + r * r};
  };
  for (int alpha : {1, 2}) {
    const auto g = build_grid(50, 0.2, 1.4, Geometry(alpha), 3);
    for (MethodId m : {MethodId::Two, MethodId::Three}) {
      const FieldState s = sampled_state(g, m, w);
      const FieldState d = rhs(m, s, g, kAir, {});
      const auto fx = detail::face_fluxes(detail::cell_data(s, g, kAir), g, kAir, {});
      for (int c : {0, 2}) {
        double sum = 0.0;
        for (std::size_t k = g.begin(); k < g.end(); ++k) {
          sum += (m == MethodId::Two ? g.cell_volume(k) : g.dr()) * d.cells[k][c];
        }
        double in = fx[g.begin()].flux[c], out = fx[g.end()].flux[c];
        if (m == MethodId::Two) {
          in *= g.face_metric(g.begin());
          out *= g.face_metric(g.end());
        }
        EXPECT_NEAR(sum + out - in, 0.0, 1e-12 * (std::abs(in) + std::abs(out)))
            << to_string(m) << " alpha " << alpha << " component " << c;
      }
    }
  }
}

namespace {

// Max interior error of the Euler RHS (as dU/dt in physical units) for a
// drifting density wave at constant velocity and pressure.
double euler_rhs_error(MethodId m, int alpha, std::size_t n) {
  const double u0 = 0.3, p0 = 1.0, k = 2.0 * M_PI;
  auto rho = [&](double r) { return 1.0 + 0.2 * std::sin(k * r); };
  auto drho = [&](double r) { return 0.2 * k * std::cos(k * r); };
  const auto g = build_grid(n, 0.5, 1.5, Geometry(alpha), 3);
  const FieldState s = sampled_state(g, m, [&](double r) { return Primitive{rho(r), u0, p0}; });
  const FieldState d = rhs(m, s, g, kAir, {});
  double err = 0.0;
  for (std::size_t i = g.begin(); i < g.end(); ++i) {
    const double r = g.center(i);
    // dU/dt = -F' - (alpha/r) (F - (0, p, 0)) with F affine in rho
    const Vec3 exact{-u0 * drho(r) - alpha / r * rho(r) * u0,
                     -u0 * u0 * drho(r) - alpha / r * rho(r) * u0 * u0,
                     -0.5 * u0 * u0 * u0 * drho(r) - alpha / r * u0 * (p0 / 0.4 + 0.5 * rho(r) * u0 * u0 + p0)};
    const double scale = m == MethodId::Three ? g.center_metric(i) : 1.0;
    for (int c = 0; c < 3; ++c) err = std::max(err, std::abs(d.cells[i][c] / scale - exact[c]));
  }
  return err;
}

}  // namespace

TEST(Rhs, RefinementOrderOnSmoothWave) {
  for (int alpha : {1, 2}) {
    for (MethodId m : kAll) {
      const double e1 = euler_rhs_error(m, alpha, 80);
      const double e2 = euler_rhs_error(m, alpha, 160);
      const double order = std::log2(e1 / e2);
      if (m == MethodId::Two) {
        EXPECT_NEAR(order, 2.0, 0.3) << "alpha " << alpha;
      } else {
        EXPECT_GT(order, 4.3) << to_string(m) << " alpha " << alpha;
      }
    }
  }
}

TEST(Advection, ZeroFieldHasZeroRate) {
  const auto g = build_grid(20, 0.0, 1.0, Geometry(1), 3);
  for (MethodId m : kAll) {
    const auto d = rhs_advection(std::vector<double>(g.size(), 0.0), g, 1.0, m, {});
    for (double x : d) EXPECT_EQ(x, 0.0);
  }
}

TEST(Advection, RejectsBadInput) {
  const auto g = build_grid(20, 0.0, 1.0, Geometry(1), 3);
  EXPECT_THROW(rhs_advection(std::vector<double>(3, 0.0), g, 1.0, MethodId::One, {}), ConfigError);
  EXPECT_THROW(rhs_advection(std::vector<double>(g.size(), 0.0), g, -1.0, MethodId::One, {}), ConfigError);
}

TEST(Advection, CartesianFormsCoincide) {
  const auto g = build_grid(30, 0.0, 1.0, Geometry(0), 3);
  std::vector<double> phi(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) phi[k] = std::sin(3.0 * g.center(k)) + 2.0;
  const auto a = rhs_advection(phi, g, 1.3, MethodId::One, {});
  const auto b = rhs_advection(phi, g, 1.3, MethodId::Two, {});
  const auto c = rhs_advection(phi, g, 1.3, MethodId::Three, {});
  for (std::size_t k = g.begin(); k < g.end(); ++k) {
    EXPECT_NEAR(a[k], b[k], 1e-12);
    EXPECT_NEAR(a[k], c[k], 1e-12);
  }
}

namespace {

double advection_rhs_error(MethodId m, std::size_t n) {
  // phi = sin^4(pi r)/r on [0.2, 0.8], alpha = 1, so r phi = sin^4(pi r)
  const auto g = build_grid(n, 0.2, 0.8, Geometry(1), 3);
  std::vector<double> field(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double r = g.center(k);
    const double phi = pow4(std::sin(M_PI * r)) / r;
    field[k] = m == MethodId::Three ? r * phi : phi;
  }
  const auto d = rhs_advection(field, g, 1.0, m, {});
  double err = 0.0;
  for (std::size_t k = g.begin(); k < g.end(); ++k) {
    const double r = g.center(k);
    const double s = std::sin(M_PI * r);
    const double flux_slope = 4.0 * M_PI * s * s * s * std::cos(M_PI * r);  // (r phi)'
    const double exact = m == MethodId::Three ? -flux_slope : -flux_slope / r;
    err = std::max(err, std::abs(d[k] - exact));
  }
  return err;
}

}  // namespace

// Pairwise orders wobble near the critical points of sin^4, so fit a line
// through four levels.
TEST(Advection, RefinementOrders) {
  for (MethodId m : kAll) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t n : {40, 80, 160, 320}) {
      const double x = std::log(static_cast<double>(n)), y = std::log(advection_rhs_error(m, n));
      sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    const double order = -(4 * sxy - sx * sy) / (4 * sxx - sx * sx);
    if (m == MethodId::Two) {
      EXPECT_NEAR(order, 2.0, 0.3);
    } else {
      EXPECT_GT(order, 4.5) << to_string(m);
    }
  }
}

TEST(TruncationGap, Examples) {
  auto lin = [](double r) { return r; };
  auto sq = [](double r) { return r * r; };
  EXPECT_NEAR(truncation_gap(lin, 1.0, 0.1, 1), 0.0, 1e-14);
  EXPECT_NEAR(truncation_gap(sq, 1.0, 0.1, 1), 0.0025, 1e-14);
  EXPECT_NEAR(truncation_gap(sq, 1.0, 0.05, 1), 0.000625, 1e-14);
  EXPECT_THROW(truncation_gap(sq, 0.0, 0.1, 1), ConfigError);
  EXPECT_THROW(truncation_gap(sq, 1.0, 0.1, 3), ConfigError);
}

TEST(TruncationGap, GridFormMatches) {
  const auto g = build_grid(10, 0.5, 1.5, Geometry(2), 3);
  auto f = [](double r) { return std::sin(r); };
  for (std::size_t k = g.begin(); k < g.end(); ++k) {
    EXPECT_NEAR(truncation_gap(f, g, k), truncation_gap(f, g.center(k), g.dr(), 2), 1e-12);
  }
}

TEST(TruncationGap, SecondOrderSlope) {
  const std::vector<std::function<double(double)>> fs{
      [](double r) { return r * r; }, [](double r) { return r * r * r; }, [](double r) { return std::sin(r); }};
  for (int alpha : {1, 2}) {
    for (const auto& f : fs) {
      const double e1 = std::abs(truncation_gap(f, 1.0, 0.02, alpha));
      const double e2 = std::abs(truncation_gap(f, 1.0, 0.01, alpha));
      const double order = std::log2(e1 / e2);
      EXPECT_GE(order, 1.9);
      EXPECT_LE(order, 2.1);
    }
  }
}

TEST(TruncationGap, VanishesInCartesian) {
  EXPECT_NEAR(truncation_gap([](double r) { return std::exp(r); }, 0.7, 0.1, 0), 0.0, 1e-13);
}
