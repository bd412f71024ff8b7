#pragma once

#include <optional>
#include <vector>

namespace cnqual {

enum class Property { Positivity, Contractivity };

inline constexpr double kDefaultBisectTol = 1e-13;

/// A root of one of the threshold equations in all three coordinates.
struct RootPoint {
  double omega = 0.0;
  double x = 0.0;  // cosh(omega)
  double s = 0.0;  // 1/(x - 1)
};

/// A sharp CFL bound for one qualitative property.
///
/// `m` empty marks the limit row (mesh refined without end); `value` empty
/// marks an unbounded entry (the property holds for every s > 0).
struct QualBound {
  Property property = Property::Positivity;
  std::optional<int> m;
  std::optional<RootPoint> value;
  int iterations = 0;
  double residual = 0.0;  // equation residual normalized by the larger side

  bool unbounded() const { return !value.has_value(); }
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// (log(2 + sqrt(2)), log(2 + sqrt(3))]: every positivity root lives here.
Bracket positivity_bracket();

/// [log((3 + sqrt(5) + sqrt(-2 + 6 sqrt(5)))/4), log 3): every finite
/// contractivity root (m >= 4) lives here.
Bracket contractivity_bracket();

/// Largest s for which A_m(s) has no negative entry: s = 1/(cosh(w) - 1)
/// at the unique root w of coth(m w) sinh(w) = 3 cosh(w) - 4.
///
/// For m large enough that the root is indistinguishable from the limit
/// angle in double precision (roughly m >= 13), the correctly rounded limit
/// point is returned with iterations = 0.
QualBound positivity_bound(int m, double tol = kDefaultBisectTol);

/// Largest s keeping ||A_m(s)||_inf <= 1. Unbounded for m in {1, 2, 3};
/// for m >= 4 the root of the parity-dependent central-row equation.
/// Saturates at the limit point (s = 3/2) once the root is within double
/// resolution of log 3 (roughly m >= 55).
QualBound contractivity_bound(int m, double tol = kDefaultBisectTol);

/// Limits of the bound sequences: (2(2 - sqrt(2)), 3/2). Both are
/// re-verified against their defining limit equations on every call.
struct LimitBounds {
  double s_pos = 0.0;
  double s_con = 0.0;
};
LimitBounds limit_bounds();

/// Mesh-independent theta-method bounds, theta in [0, 1]:
///   positivity   (1 - sqrt(1-theta)) / (theta (1-theta))
///   contractivity (2 - theta) / (4 (1-theta)^2)
/// Both unbounded at theta = 1; the positivity formula is evaluated in the
/// rationalized form 1/((1 + sqrt(1-theta))(1-theta)), which carries its
/// analytic value 1/2 at theta = 0.
struct ThetaBounds {
  std::optional<double> positivity;
  std::optional<double> contractivity;
};
ThetaBounds theta_literature_bounds(double theta);

/// One QualBound per requested m, optionally followed by the limit row.
std::vector<QualBound> bound_table(Property property, const std::vector<int>& ms,
                                   bool include_limit = true,
                                   double tol = kDefaultBisectTol);

}  // namespace cnqual
