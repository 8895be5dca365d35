#include <gtest/gtest.h>

#include <random>
#include <string>

#include "radweno/config.hpp"

using namespace radweno;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(ParseConfig, SodExample) {
  const auto p = parse_config("problem = sod\nmethod = three\nn_cells = 100\nt_final = 0.2");
  const RunConfig& c = p.config;
  EXPECT_EQ(c.problem, ProblemKind::Sod);
  EXPECT_EQ(c.method, MethodId::Three);
  EXPECT_EQ(c.n_cells, 100u);
  EXPECT_EQ(c.t_final, 0.2);
  EXPECT_EQ(c.cfl, 0.5);
  EXPECT_EQ(c.gamma, 1.4);
  EXPECT_EQ(c.alpha, 1);
  EXPECT_EQ(c.weno.epsilon, 1e-6);
  EXPECT_TRUE(p.warnings.empty());
}

TEST(ParseConfig, ProblemDefaults) {
  const auto c = parse_config("problem = acoustics").config;
  EXPECT_EQ(c.alpha, 2);
  EXPECT_EQ(c.t_final, default_final_time(ProblemKind::Acoustics));
  EXPECT_EQ(parse_config("").config, RunConfig{});
}

TEST(ParseConfig, CommentsAndWhitespace) {
  const auto c = parse_config("# a run\n\n   method=one   # trailing\n\talpha = 0\n").config;
  EXPECT_EQ(c.method, MethodId::One);
  EXPECT_EQ(c.alpha, 0);
}

TEST(ParseConfig, SedovLowersCflWithWarning) {
  const auto p = parse_config("problem = sedov\nmethod = three");
  EXPECT_EQ(p.config.cfl, 0.1);
  ASSERT_EQ(p.warnings.size(), 1u);
  const auto q = parse_config("problem = sedov\ncfl = 0.3");
  EXPECT_EQ(q.config.cfl, 0.3);
  EXPECT_TRUE(q.warnings.empty());
}

TEST(ParseConfig, ConstraintErrorsNameKeyAndLine) {
  const std::string e = error_of("problem = sod\ncfl = 1.5");
  EXPECT_NE(e.find("cfl"), std::string::npos) << e;
  EXPECT_NE(e.find("line 2"), std::string::npos) << e;
  EXPECT_NE(error_of("alpha = 3").find("alpha"), std::string::npos);
  EXPECT_NE(error_of("n_cells = 0").find("n_cells"), std::string::npos);
  EXPECT_NE(error_of("gamma = 1").find("gamma"), std::string::npos);
  EXPECT_NE(error_of("t_final = -1").find("t_final"), std::string::npos);
  EXPECT_NE(error_of("weno_beta_power = 3").find("weno_beta_power"), std::string::npos);
  EXPECT_NE(error_of("weno_epsilon = 0").find("weno_epsilon"), std::string::npos);
}

TEST(ParseConfig, RejectsUnknownRepeatedAndMalformed) {
  std::string e = error_of("method = two\nresolution = 5");
  EXPECT_NE(e.find("resolution"), std::string::npos) << e;
  EXPECT_NE(e.find("line 2"), std::string::npos) << e;
  e = error_of("cfl = 0.2\ncfl = 0.3");
  EXPECT_NE(e.find("repeated"), std::string::npos) << e;
  e = error_of("n_cells = abc");
  EXPECT_NE(e.find("n_cells"), std::string::npos) << e;
  EXPECT_FALSE(error_of("n_cells = 10.5").empty());
  EXPECT_FALSE(error_of("cfl = 0.5x").empty());
  EXPECT_FALSE(error_of("method = four").empty());
  EXPECT_FALSE(error_of("lambda_mode = both").empty());
  EXPECT_FALSE(error_of("just words").empty());
  EXPECT_FALSE(error_of("cfl =").empty());
}

TEST(ParseConfig, EnumeratedValues) {
  const auto c = parse_config("lambda_mode = pointwise\ntotal_mode = gauss4\nout_dir = /tmp/x y").config;
  EXPECT_EQ(c.lambda_mode, LambdaMode::Pointwise);
  EXPECT_EQ(c.total_mode, TotalSelection::Gauss4);
  EXPECT_EQ(c.out_dir, "/tmp/x y");
  EXPECT_EQ(parse_method("two"), MethodId::Two);
  EXPECT_THROW(parse_method("2"), ConfigError);
}

TEST(SerializeConfig, RoundTripsRandomConfigs) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> pick(0, 1000000);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const ProblemKind kinds[] = {ProblemKind::Advection, ProblemKind::Acoustics, ProblemKind::Sod};
  for (int trial = 0; trial < 500; ++trial) {
    RunConfig c;
    c.problem = kinds[pick(rng) % 3];
    c.method = static_cast<MethodId>(pick(rng) % 3);
    c.alpha = pick(rng) % 3;
    c.n_cells = 1 + pick(rng) % 5000;
    c.cfl = 1e-3 + 0.999 * unit(rng);
    c.gamma = 1.0 + 1e-6 + 2.0 * unit(rng);
    c.t_final = 3.0 * unit(rng);
    c.weno.epsilon = 1e-12 + unit(rng) * 1e-3;
    c.weno.beta_power = 1 + pick(rng) % 2;
    c.lambda_mode = pick(rng) % 2 ? LambdaMode::Pointwise : LambdaMode::WindowMax;
    c.total_mode = static_cast<TotalSelection>(pick(rng) % 3);
    c.out_dir = "out/run_" + std::to_string(trial);
    const auto back = parse_config(serialize_config(c));
    EXPECT_EQ(back.config, c) << serialize_config(c);
    EXPECT_TRUE(back.warnings.empty());
  }
}

TEST(Format, ShortestRoundTrip) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int trial = 0; trial < 2000; ++trial) {
    const double x = u(rng) * std::pow(10.0, static_cast<double>(trial % 40) - 20.0);
    double y = 0.0;
    ASSERT_TRUE(parse_double(format_double(x), y));
    EXPECT_EQ(x, y);
  }
  EXPECT_EQ(format_double(0.2), "0.2");
  double y = 0.0;
  EXPECT_TRUE(parse_double("+1.5", y));
  EXPECT_FALSE(parse_double("1.5e", y));
  EXPECT_FALSE(parse_double("", y));
}
