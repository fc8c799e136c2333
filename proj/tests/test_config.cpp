#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "smhd/config.hpp"
#include "smhd/error.hpp"

using namespace smhd;

namespace {

RunConfig parse(const std::string& s) {
  std::istringstream is(s);
  return parse_config(is, "test.ini");
}

std::string error_of(const std::string& s) {
  try {
    parse(s);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Config, DefaultsAreValid) {
  const RunConfig c = parse("");
  EXPECT_EQ(c.n, 4);
  EXPECT_EQ(c.steps, 50);
  EXPECT_EQ(c.case_name, "decay-trig");
  EXPECT_EQ(c.levels, (std::vector<int>{2, 4, 8}));
  EXPECT_EQ(c.operator_levels, (std::vector<int>{8, 12, 16}));
}

TEST(Config, ParsesAllSections) {
  const RunConfig c = parse(R"(
# comment
[mesh]
n = 3
[physics]
Re = 100
Rm = inf   ; ideal induction
s = 2
mu = 0.5
[time]
dt = 0.005
steps = 7
[case]
name = helical
[solver]
tol = 1e-11
max_iterations = 20
scheme = newton
newton_switch = 1e-3
exec = serial
[output]
dir = results
vtk_every = 2
checkpoint_every = 3
[convergence]
levels = 2, 3, 5
final_time = 0.2
dt_factor = 0.05
min_eoc = 0.8
[operators]
levels = 3, 6
[conserve]
tol = 1e-9
[debug]
mutate_incidence = true
)");
  EXPECT_EQ(c.n, 3);
  EXPECT_DOUBLE_EQ(c.params.inv_re, 0.01);
  EXPECT_EQ(c.params.inv_rm, 0.0);
  EXPECT_EQ(c.params.sc, 2.0);
  EXPECT_EQ(c.params.mu, 0.5);
  EXPECT_EQ(c.dt, 0.005);
  EXPECT_EQ(c.steps, 7);
  EXPECT_EQ(c.case_name, "helical");
  EXPECT_EQ(c.solver.tol, 1e-11);
  EXPECT_EQ(c.solver.max_iterations, 20);
  EXPECT_EQ(c.solver.scheme, NonlinearScheme::Newton);
  EXPECT_EQ(c.solver.exec, Exec::Serial);
  EXPECT_EQ(c.out_dir, "results");
  EXPECT_EQ(c.vtk_every, 2);
  EXPECT_EQ(c.checkpoint_every, 3);
  EXPECT_EQ(c.levels, (std::vector<int>{2, 3, 5}));
  EXPECT_EQ(c.operator_levels, (std::vector<int>{3, 6}));
  EXPECT_EQ(c.min_eoc, 0.8);
  EXPECT_EQ(c.conserve_tol, 1e-9);
  EXPECT_TRUE(c.mutate_incidence);
}

TEST(Config, ErrorsNameTheLine) {
  EXPECT_NE(error_of("[mesh]\nsize = 3\n").find("test.ini:2"), std::string::npos);
  EXPECT_NE(error_of("[mesh]\nsize = 3\n").find("size"), std::string::npos);
  EXPECT_NE(error_of("[nope]\n").find("unknown section"), std::string::npos);
  EXPECT_NE(error_of("n = 3\n").find("outside"), std::string::npos);
  EXPECT_FALSE(error_of("[mesh]\nn = three\n").empty());
  EXPECT_FALSE(error_of("[mesh]\nn\n").empty());
  EXPECT_FALSE(error_of("[mesh\n").empty());
  EXPECT_FALSE(error_of("[solver]\nscheme = magic\n").empty());
  EXPECT_FALSE(error_of("[debug]\nmutate_incidence = maybe\n").empty());
}

TEST(Config, RejectsOutOfRangeValues) {
  EXPECT_FALSE(error_of("[mesh]\nn = 0\n").empty());
  EXPECT_FALSE(error_of("[physics]\nRe = -1\n").empty());
  EXPECT_FALSE(error_of("[physics]\nmu = 0\n").empty());
  EXPECT_FALSE(error_of("[time]\ndt = 0\n").empty());
  EXPECT_FALSE(error_of("[time]\nsteps = -2\n").empty());
  EXPECT_FALSE(error_of("[convergence]\nlevels = 4, 2\n").empty());
  EXPECT_FALSE(error_of("[convergence]\nlevels = 4\n").empty());
  EXPECT_FALSE(error_of("[operators]\nlevels = 0, 2\n").empty());
  EXPECT_FALSE(error_of("[solver]\ntol = 0\n").empty());
}

TEST(Config, MissingFile) { EXPECT_THROW(load_config("/nonexistent/smhd.ini"), ConfigError); }
