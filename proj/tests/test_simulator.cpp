#include "cnqual/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <sstream>
#include <vector>

#include <doctest.h>

#include "cnqual/bounds.hpp"
#include "cnqual/csv.hpp"
#include "cnqual/matrix.hpp"

using namespace cnqual;

namespace {

// One Crank-Nicolson step from the unit step at the last grid point,
// m = 7, tau = 0.025 (s = 1.6). Exact rationals from a fraction-arithmetic
// elimination; the last component goes negative while the norm contracts.
const std::vector<double> kExampleStep = {
    40960.0 / 32515717.0,   10240.0 / 2501209.0,  391680.0 / 32515717.0,
    640.0 / 18257.0,        3312800.0 / 32515717.0, 740520.0 / 2501209.0,
    -4541547.0 / 32515717.0};

// The same vector rounded to four decimals.
const std::vector<double> kExampleStep4dp = {0.0013, 0.0041,  0.0120, 0.0351,
                                             0.1019, 0.2961, -0.1397};

SimConfig example_config(int steps = 1) {
  SimConfig config;
  config.grid.m = 7;
  config.theta = 0.5;
  config.tau = 0.025;
  config.steps = steps;
  config.initial = StepProfile{7.0 / 8.0};
  return config;
}

}  // namespace

TEST_CASE("step profiles follow the grid points") {
  const auto w7 = make_step_profile(GridConfig{7}, 7.0 / 8.0);
  CHECK(w7 == std::vector<double>{0, 0, 0, 0, 0, 0, 1});
  CHECK(make_step_profile(GridConfig{3}, 0.1) == std::vector<double>{1, 1, 1});
  CHECK(make_step_profile(GridConfig{3}, 0.99) == std::vector<double>{0, 0, 0});
  CHECK_THROWS_AS(make_step_profile(GridConfig{3}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_step_profile(GridConfig{3}, 1.0), std::invalid_argument);
}

TEST_CASE("one Crank-Nicolson step reproduces the worked example") {
  const SimConfig config = example_config();
  const auto w1 = step(config, make_step_profile(config.grid, 7.0 / 8.0));
  REQUIRE(w1.size() == 7);
  for (int i = 0; i < 7; ++i) {
    INFO("component ", i + 1);
    CHECK(std::fabs(w1[i] - kExampleStep[i]) <= 1e-12);
    CHECK(std::fabs(w1[i] - kExampleStep4dp[i]) <= 1e-4);
  }
  double norm = 0.0;
  for (double v : w1) norm = std::max(norm, std::fabs(v));
  CHECK(std::fabs(norm - 0.2961) <= 1e-4);
  CHECK(w1.back() < 0.0);
}

TEST_CASE("trivial step fixed points") {
  SimConfig backward;
  backward.grid.m = 5;
  backward.theta = 1.0;
  backward.tau = 3.0;
  backward.steps = 1;
  const std::vector<double> zero(5, 0.0);
  CHECK(step(backward, zero) == zero);

  // m = 1 at s = 1 maps every scalar to zero: (1-s)/(1+s) = 0
  SimConfig scalar;
  scalar.grid.m = 1;
  scalar.theta = 0.5;
  scalar.tau = 0.25;  // h = 1/2, s = 1
  scalar.steps = 1;
  const auto out = step(scalar, {0.37});
  CHECK(std::fabs(out[0]) <= 1e-15);
}

TEST_CASE("a theta = 1/2 step equals multiplication by the iteration matrix") {
  for (int m : {1, 2, 5, 12, 32}) {
    for (double s : {0.3, 1.0, 2.7}) {
      SimConfig config;
      config.grid.m = m;
      config.theta = 0.5;
      const double h = config.grid.h();
      config.tau = s * h * h;
      config.steps = 1;

      std::vector<double> w(m);
      for (int i = 0; i < m; ++i) w[i] = std::sin(0.7 * (i + 1)) + 0.2;
      const auto stepped = step(config, w);

      const CnMatrix a = build_A_numeric(m, CflPoint::from_s(s));
      for (int i = 0; i < m; ++i) {
        double dot = 0.0;
        for (int j = 0; j < m; ++j) dot += a.entry(i, j) * w[j];
        CHECK(std::fabs(stepped[i] - dot) <= 1e-12 * std::max(1.0, std::fabs(dot)));
      }
    }
  }
}

TEST_CASE("run flags the worked example violation") {
  const SimTrace trace = run(example_config());
  REQUIRE(trace.states.size() == 2);
  CHECK(trace.times[1] == doctest::Approx(0.025));
  REQUIRE(trace.first_positivity_violation.has_value());
  CHECK(*trace.first_positivity_violation == 1);
  CHECK(!trace.first_norm_violation.has_value());
  CHECK(trace.norms[1] == doctest::Approx(0.2960648230515723).epsilon(1e-12));
  CHECK(trace.norms[1] < trace.norms[0]);
}

TEST_CASE("no violations below the positivity bound") {
  SimConfig config;
  config.grid.m = 7;
  config.theta = 0.5;
  const double h = config.grid.h();
  config.tau = 1.0 * h * h;  // s = 1.0 < s_7 for positivity
  config.steps = 50;
  config.initial = StepProfile{7.0 / 8.0};
  const SimTrace trace = run(config);
  CHECK(!trace.first_positivity_violation.has_value());
  CHECK(!trace.first_norm_violation.has_value());
  for (double v : trace.min_entries) CHECK(v >= -1e-12);
}

TEST_CASE("norms never grow below the contractivity bound") {
  // s = 1.6 violates positivity for m = 7 but stays under s_7 contractivity
  const SimTrace trace = run(example_config(50));
  CHECK(trace.first_positivity_violation.has_value());
  CHECK(!trace.first_norm_violation.has_value());
  for (size_t n = 1; n < trace.norms.size(); ++n) {
    CHECK(trace.norms[n] <= trace.norms[n - 1] * (1.0 + 1e-12));
  }
  // sanity against the bound module: 1.6 really sits between the two bounds
  CHECK(positivity_bound(7).value->s < 1.6);
  CHECK(contractivity_bound(7).value->s > 1.6);
}

TEST_CASE("backward Euler runs unrestricted") {
  for (double s : {1.0, 10.0, 100.0}) {
    SimConfig config;
    config.grid.m = 8;
    config.theta = 1.0;
    const double h = config.grid.h();
    config.tau = s * h * h;
    config.steps = 20;
    config.initial = StepProfile{0.5};
    const SimTrace trace = run(config);
    CHECK(!trace.first_positivity_violation.has_value());
    CHECK(!trace.first_norm_violation.has_value());
  }
}

TEST_CASE("zero initial data stays at zero") {
  SimConfig config;
  config.grid.m = 4;
  config.tau = 0.1;
  config.steps = 5;
  config.initial = std::vector<double>{0.0, 0.0, 0.0, 0.0};
  const SimTrace trace = run(config);
  CHECK(!trace.first_positivity_violation.has_value());
  CHECK(!trace.first_norm_violation.has_value());
  for (const auto& state : trace.states) {
    for (double v : state) CHECK(v == 0.0);
  }
}

TEST_CASE("config validation") {
  SimConfig config;
  config.grid.m = 3;
  config.tau = 0.1;
  config.steps = 1;
  config.initial = std::vector<double>{1.0, 2.0};  // wrong length
  CHECK_THROWS_AS(run(config), std::invalid_argument);
  config.initial = StepProfile{0.5};
  config.theta = 1.5;
  CHECK_THROWS_AS(run(config), std::invalid_argument);
  config.theta = 0.5;
  config.tau = -1.0;
  CHECK_THROWS_AS(run(config), std::invalid_argument);
}

TEST_CASE("trace CSV carries one column per component") {
  const SimTrace trace = run(example_config());
  std::ostringstream out;
  write_trace_csv(out, trace);
  const std::string text = out.str();
  CHECK(text.rfind("t,w_1,w_2,w_3,w_4,w_5,w_6,w_7,min_entry,inf_norm\n", 0) == 0);
  CHECK(text.find("\n0,0,0,0,0,0,0,1,0,1\n") != std::string::npos);
  CHECK(text.find("0.025,") != std::string::npos);
}
