#include "cnqual/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cnqual {

namespace {

// Local Thomas solve for tridiag(off, diag, off) x = rhs; the simulator keeps
// its own solver so its path stays independent of the matrix module.
void tridiag_solve(double diag, double off, std::vector<double>& rhs) {
  const int m = static_cast<int>(rhs.size());
  std::vector<double> c_prime(m > 1 ? m - 1 : 0);
  double denom = diag;
  if (denom == 0.0) throw std::runtime_error("simulator: zero pivot");
  rhs[0] /= denom;
  for (int i = 1; i < m; ++i) {
    c_prime[i - 1] = off / denom;
    denom = diag - off * c_prime[i - 1];
    if (denom == 0.0) throw std::runtime_error("simulator: zero pivot");
    rhs[i] = (rhs[i] - off * rhs[i - 1]) / denom;
  }
  for (int i = m - 2; i >= 0; --i) {
    rhs[i] -= c_prime[i] * rhs[i + 1];
  }
}

void validate(const SimConfig& config) {
  if (config.grid.m < 1) throw std::invalid_argument("simulator: m must be >= 1");
  if (!(config.grid.d > 0.0)) throw std::invalid_argument("simulator: d must be positive");
  if (!(config.theta >= 0.0 && config.theta <= 1.0)) {
    throw std::invalid_argument("simulator: theta must lie in [0, 1]");
  }
  if (!(config.tau > 0.0)) throw std::invalid_argument("simulator: tau must be positive");
}

double max_norm(const std::vector<double>& v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::fabs(x));
  return best;
}

double min_component(const std::vector<double>& v) {
  double lowest = v.empty() ? 0.0 : v[0];
  for (double x : v) lowest = std::min(lowest, x);
  return lowest;
}

}  // namespace

std::vector<double> make_step_profile(const GridConfig& grid, double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw std::invalid_argument("make_step_profile: a must lie in (0, 1)");
  }
  std::vector<double> w(grid.m, 0.0);
  const double h = grid.h();
  for (int i = 1; i <= grid.m; ++i) {
    if (i * h >= a) w[i - 1] = 1.0;
  }
  return w;
}

std::vector<double> step(const SimConfig& config, const std::vector<double>& w) {
  validate(config);
  const int m = config.grid.m;
  if (static_cast<int>(w.size()) != m) {
    throw std::invalid_argument("step: state length must equal m");
  }
  const double h = config.grid.h();
  const double scale = config.grid.d * config.tau / (h * h);  // tau B = scale tridiag(1,-2,1)
  const double expl = (1.0 - config.theta) * scale;
  const double impl = config.theta * scale;

  // rhs = (I + (1-theta) tau B) w
  std::vector<double> rhs(m);
  for (int i = 0; i < m; ++i) {
    double v = (1.0 - 2.0 * expl) * w[i];
    if (i > 0) v += expl * w[i - 1];
    if (i + 1 < m) v += expl * w[i + 1];
    rhs[i] = v;
  }
  // (I - theta tau B) has diag 1 + 2 impl, off-diag -impl
  tridiag_solve(1.0 + 2.0 * impl, -impl, rhs);
  return rhs;
}

SimTrace run(const SimConfig& config) {
  validate(config);
  if (config.steps < 1) throw std::invalid_argument("run: steps must be >= 1");

  std::vector<double> w;
  if (const auto* profile = std::get_if<StepProfile>(&config.initial)) {
    w = make_step_profile(config.grid, profile->a);
  } else {
    w = std::get<std::vector<double>>(config.initial);
    if (static_cast<int>(w.size()) != config.grid.m) {
      throw std::invalid_argument("run: custom initial state length must equal m");
    }
  }

  const bool monitor_positivity = min_component(w) >= 0.0;
  const double positivity_floor = -1e-12 * max_norm(w);

  SimTrace trace;
  trace.times.push_back(0.0);
  trace.states.push_back(w);
  trace.min_entries.push_back(min_component(w));
  trace.norms.push_back(max_norm(w));

  for (int n = 1; n <= config.steps; ++n) {
    w = step(config, w);
    trace.times.push_back(n * config.tau);
    trace.states.push_back(w);
    const double lowest = min_component(w);
    const double norm = max_norm(w);
    trace.min_entries.push_back(lowest);
    trace.norms.push_back(norm);
    if (monitor_positivity && !trace.first_positivity_violation && lowest < positivity_floor) {
      trace.first_positivity_violation = n;
    }
    if (!trace.first_norm_violation && norm > trace.norms[n - 1] * (1.0 + 1e-12)) {
      trace.first_norm_violation = n;
    }
  }
  return trace;
}

}  // namespace cnqual
