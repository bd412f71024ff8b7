#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cnqual/bounds.hpp"

namespace cnqual {

// Brute-force verification path. Everything here works on the numeric
// matrix alone (build_A_numeric, min_entry, inf_norm); the polynomial and
// bound machinery is deliberately never touched.

/// True iff A_m(s) has no entry below -1e-12 (1 + s).
bool positivity_predicate(int m, double s);

/// True iff ||A_m(s)||_inf <= 1 + 1e-12.
bool contractivity_predicate(int m, double s);

struct ThresholdEstimate {
  Property property = Property::Positivity;
  int m = 1;
  double s_lo = 0.0;  // predicate holds
  double s_hi = 0.0;  // predicate fails

  double width() const { return s_hi - s_lo; }
  double midpoint() const { return 0.5 * (s_lo + s_hi); }
};

enum class ThresholdStatus {
  Found,              // predicate flips inside the bracket
  UnboundedDetected,  // predicate still true at the bracket top
  NeverHolds,         // predicate already false at the bracket bottom
};

struct ThresholdResult {
  ThresholdStatus status = ThresholdStatus::Found;
  std::optional<ThresholdEstimate> estimate;
};

/// Bisect the property predicate over s. Each property holds exactly up to
/// a sharp threshold in s, so a plain bisection localizes the bound.
ThresholdResult empirical_threshold(Property property, int m,
                                    std::pair<double, double> bracket = {1e-3, 8.0},
                                    double tol = 1e-9);

struct CrossValidateRow {
  int m = 1;
  std::optional<double> closed_s;     // empty = unbounded
  std::optional<double> empirical_s;  // empty = unbounded detected
  double deviation = 0.0;
  bool pass = false;
};

struct CrossValidateReport {
  Property property = Property::Positivity;
  double tol = 0.0;
  std::vector<CrossValidateRow> rows;
  double max_deviation = 0.0;
  bool all_pass = false;
};

/// Compare the closed-form bound against the empirical threshold for every
/// m <= m_max. Unbounded entries must agree on both sides.
CrossValidateReport cross_validate(Property property, int m_max, double tol = 1e-6);

}  // namespace cnqual
