#include <gtest/gtest.h>

#include <fstream>

#include "bpv/config.hpp"
#include "bpv/errors.hpp"

using namespace bpv;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_config_text(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Config, EmptyFileGivesDefaults) {
  const RunConfig c = parse_config_text("# nothing\n");
  EXPECT_EQ(c.grid.nx, 128);
  EXPECT_EQ(c.grid.ny, 128);
  EXPECT_DOUBLE_EQ(c.grid.lx, 2.56e5);
  EXPECT_DOUBLE_EQ(c.beta, 1.6e-9);
  EXPECT_EQ(c.steps, 4320);
  EXPECT_FALSE(c.dt.has_value());
  EXPECT_TRUE(std::holds_alternative<closure::InvariantHyper>(c.dissipation));
  EXPECT_DOUBLE_EQ(c.raw_gamma, 0.1);
  EXPECT_DOUBLE_EQ(c.raw_alpha, 0.53);
}

TEST(Config, ParsesSections) {
  const RunConfig c = parse_config_text(R"(
[run]
seed = 42
steps = 10
dt = 12.5   # seconds
[grid]
nx = 64
ny = 32
[dissipation]
type = classical
n = 3
nu = 1e10
[ic]
amplitude = 20
[output]
out_dir = "runs/a"
)");
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.steps, 10);
  ASSERT_TRUE(c.dt.has_value());
  EXPECT_DOUBLE_EQ(*c.dt, 12.5);
  EXPECT_EQ(c.grid.nx, 64);
  EXPECT_EQ(c.grid.ny, 32);
  const auto& d = std::get<closure::Classical>(c.dissipation);
  EXPECT_EQ(d.n, 3);
  EXPECT_DOUBLE_EQ(d.nu, 1e10);
  EXPECT_DOUBLE_EQ(c.ic.amplitude, 20.0);
  EXPECT_EQ(c.output.out_dir, "runs/a");
}

TEST(Config, AutoDt) {
  EXPECT_FALSE(parse_config_text("[run]\ndt = auto\n").dt.has_value());
}

TEST(Config, UnknownKeyIsNamed) {
  const std::string e = error_of("[dissipation]\ntype = invariant_hyper\nviscocity = 3\n");
  EXPECT_NE(e.find("viscocity"), std::string::npos) << e;
}

TEST(Config, AllProblemsReportedTogether) {
  const std::string e = error_of("[grid]\nnx = abc\nfoo = 1\n[run]\nsteps = 1\nsteps = 2\n[bogus]\n");
  EXPECT_NE(e.find("grid.nx"), std::string::npos) << e;
  EXPECT_NE(e.find("foo"), std::string::npos) << e;
  EXPECT_NE(e.find("duplicate"), std::string::npos) << e;
  EXPECT_NE(e.find("bogus"), std::string::npos) << e;
}

TEST(Config, RangeChecks) {
  EXPECT_NE(error_of("[run]\nsteps = 0\n").find("steps"), std::string::npos);
  EXPECT_NE(error_of("[ic]\namplitude = 0\n").find("amplitude"), std::string::npos);
  EXPECT_NE(error_of("[dissipation]\ntype = classical\nn = 0\n"), "");
  EXPECT_NE(error_of("[run]\ndt = -1\n"), "");
  EXPECT_NE(error_of("[model]\nraw_alpha = 1.5\n"), "");
}

TEST(Config, InapplicableDissipationKey) {
  EXPECT_NE(error_of("[dissipation]\ntype = down_gradient\nnu = 1\n"), "");
  EXPECT_NE(error_of("[dissipation]\ntype = conservative_fourth\nn = 2\n"), "");
  EXPECT_NE(error_of("[dissipation]\ntype = laplacian\n").find("laplacian"), std::string::npos);
}

TEST(Config, FormatRoundTrip) {
  RunConfig c;
  c.seed = 7;
  c.dt = 0.1 + 0.2;
  c.grid.lx = 1.0 / 3.0;
  c.dissipation = closure::DownGradientInvariant{0.123456789012345678};
  c.output.out_dir = "x/y";
  const RunConfig back = parse_config_text(format_config(c));
  EXPECT_EQ(format_config(back), format_config(c));
  EXPECT_EQ(*back.dt, *c.dt);
  EXPECT_EQ(back.grid.lx, c.grid.lx);
  EXPECT_EQ(std::get<closure::DownGradientInvariant>(back.dissipation).K, 0.123456789012345678);
}

TEST(Config, MissingFile) {
  EXPECT_THROW(parse_config("/nonexistent/run.cfg"), ConfigError);
  const std::string path = ::testing::TempDir() + "ok.cfg";
  std::ofstream(path) << "[run]\nsteps = 3\n";
  EXPECT_EQ(parse_config(path).steps, 3);
}
