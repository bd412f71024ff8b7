#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cnqual/matrix.hpp"

namespace cnqual {

/// Step-function initial profile: component i is 1 where x_i = i h >= a.
struct StepProfile {
  double a = 0.5;
};

struct SimConfig {
  GridConfig grid;
  double theta = 0.5;
  double tau = 0.0;
  int steps = 1;
  std::variant<StepProfile, std::vector<double>> initial = StepProfile{};

  double s() const {
    const double h = grid.h();
    return grid.d * tau / (h * h);
  }
};

std::vector<double> make_step_profile(const GridConfig& grid, double a);

/// One theta-method step (I - theta tau B)^{-1} (I + (1-theta) tau B) w via
/// a single tridiagonal solve. theta = 1/2 is the Crank-Nicolson map.
std::vector<double> step(const SimConfig& config, const std::vector<double>& w);

struct SimTrace {
  std::vector<double> times;                 // t_n = n tau, from t_0 = 0
  std::vector<std::vector<double>> states;   // w_0, w_1, ..., w_N
  std::vector<double> min_entries;           // per-state minimum component
  std::vector<double> norms;                 // per-state max-norm
  std::optional<int> first_positivity_violation;  // step index, if any
  std::optional<int> first_norm_violation;        // step index, if any
};

/// Iterate the step map, recording min entries and norms. A positivity
/// violation is flagged only for nonnegative initial data (min entry below
/// -1e-12 ||w_0||_inf); a norm violation whenever a step grows the max-norm
/// beyond relative 1e-12.
SimTrace run(const SimConfig& config);

}  // namespace cnqual
