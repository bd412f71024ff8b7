#include "cnqual/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "cnqual/polynomials.hpp"
#include "cnqual/scaled_real.hpp"

namespace cnqual {

namespace {

constexpr double kTailFloor = 1e-13;  // below this the root merges with the limit

double contractivity_bracket_lo() {
  return std::log((3.0 + std::sqrt(5.0) + std::sqrt(-2.0 + 6.0 * std::sqrt(5.0))) / 4.0);
}

RootPoint root_point(double omega) {
  RootPoint p;
  p.omega = omega;
  p.x = std::cosh(omega);
  p.s = 1.0 / (p.x - 1.0);
  return p;
}

// Central-row residuals rearranged so the finite-m part never cancels.
// Contractive iff residual >= 0; the residual is increasing in omega.
//
// Odd m: the inequality collapses to
//   (e^w - 3) - (1 - tanh(m w / 2)) sinh(w) + 2 cosh(w/2) sech(m w / 2) >= 0
// with 1 - tanh(u) = 2/(expm1(2u) + 2) and sech written through exp(-u),
// so every m-dependent term decays instead of overflowing.
double odd_tail(int m, double w) {
  const double one_minus_tanh = 2.0 / (std::expm1(m * w) + 2.0);
  const double em = std::exp(-0.5 * m * w);
  const double sech = 2.0 * em / (1.0 + em * em);
  return 2.0 * std::cosh(0.5 * w) * sech - one_minus_tanh * std::sinh(w);
}

double odd_residual(int m, double w) { return std::expm1(w) - 2.0 + odd_tail(m, w); }

// Even m: dividing the two sides by their common exponential factor e^{m w}
// leaves  2 e^{w/2} sinh^2(w/2) N1 >= cosh(w/2) N2  with
//   N1 = (1 - e^{-m w})(1 + e^{-(m+1) w})
//   N2 = (1 - e^{-(m+1) w})(1 - e^{-m w/2})(1 - e^{-(m-2) w/2})
// N1 - 1 and N2 - 1 are expanded exactly in the small exponentials.
double even_tail(int m, double w) {
  const double u1 = std::exp(-m * w);
  const double u2 = std::exp(-(m + 1.0) * w);
  const double d_n1 = -u1 + u2 - u1 * u2;
  const double a = u2;
  const double b = std::exp(-0.5 * m * w);
  const double c = std::exp(-0.5 * (m - 2.0) * w);
  const double d_n2 = -(a + b + c) + (a * b + a * c + b * c) - a * b * c;
  const double sh = std::sinh(0.5 * w);
  return 2.0 * std::exp(0.5 * w) * sh * sh * d_n1 - std::cosh(0.5 * w) * d_n2;
}

double even_limit_part(double w) {
  const double sh = std::sinh(0.5 * w);
  return 2.0 * std::exp(0.5 * w) * sh * sh - std::cosh(0.5 * w);
}

double even_residual(int m, double w) { return even_limit_part(w) + even_tail(m, w); }

// Normalized residual of the original two-sided equation, in scaled form.
double raw_contractivity_residual(int m, double w) {
  ScaledReal lhs, rhs;
  if (m % 2 == 1) {
    lhs = ScaledReal::from(2.0) * ScaledReal::sinh(0.25 * (m - 1.0) * w) *
          ScaledReal::sinh(0.25 * (m + 1.0) * w);
    rhs = ScaledReal::sinh(0.5 * w) * ScaledReal::sinh(0.5 * (m + 1.0) * w);
  } else {
    lhs = ScaledReal::sinh(0.5 * w) * ScaledReal::sinh(0.5 * w) *
          ScaledReal::sinh(0.5 * m * w) *
          (ScaledReal::sinh(0.5 * (m + 2.0) * w) - ScaledReal::sinh(0.5 * m * w));
    rhs = ScaledReal::sinh(w) * ScaledReal::sinh(0.5 * (m + 1.0) * w) *
          ScaledReal::sinh(0.25 * m * w) * ScaledReal::sinh(0.25 * (m - 2.0) * w);
  }
  const ScaledReal larger = lhs.log_abs() > rhs.log_abs() ? lhs : rhs;
  return ((lhs - rhs) / larger).value();
}

}  // namespace

Bracket positivity_bracket() {
  return Bracket{std::log(2.0 + std::sqrt(2.0)), std::log(2.0 + std::sqrt(3.0))};
}

Bracket contractivity_bracket() {
  return Bracket{contractivity_bracket_lo(), std::log(3.0)};
}

QualBound positivity_bound(int m, double tol) {
  if (m < 1) throw std::invalid_argument("positivity_bound: m must be >= 1");
  const RootSolve root = solve_isolated_root_p(m, tol);
  QualBound b;
  b.property = Property::Positivity;
  b.m = m;
  if (root.saturated) {
    RootPoint p;
    p.omega = root.omega;
    p.x = root.x;
    p.s = 2.0 * (2.0 - std::sqrt(2.0));
    b.value = p;
  } else {
    b.value = root_point(root.omega);
  }
  b.iterations = root.iterations;
  b.residual = root.residual;
  return b;
}

QualBound contractivity_bound(int m, double tol) {
  if (m < 1) throw std::invalid_argument("contractivity_bound: m must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("contractivity_bound: tol must be > 0");

  QualBound b;
  b.property = Property::Contractivity;
  b.m = m;
  if (m <= 3) return b;  // contractive for every s > 0

  const bool odd = (m % 2 == 1);
  const auto residual = [m, odd](double w) {
    return odd ? odd_residual(m, w) : even_residual(m, w);
  };

  const Bracket br = contractivity_bracket();
  const double hi_end = br.hi;

  // root within double resolution of log 3: report the limit point
  const double tail = odd ? odd_tail(m, hi_end) : even_tail(m, hi_end);
  if (tail < kTailFloor) {
    RootPoint p;
    p.omega = hi_end;
    p.x = 5.0 / 3.0;
    p.s = 1.5;
    b.value = p;
    b.residual = raw_contractivity_residual(m, p.omega);
    return b;
  }

  // left end widened below the closed endpoint, which is itself the m = 4 root
  double lo = br.lo - 1e-9;
  double hi = hi_end;
  if (!(residual(lo) < 0.0) || !(residual(hi) > 0.0)) {
    throw std::runtime_error("contractivity_bound: no sign change on the root bracket");
  }
  int iterations = 0;
  while (hi - lo > tol && iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  b.value = root_point(0.5 * (lo + hi));
  b.iterations = iterations;
  b.residual = raw_contractivity_residual(m, b.value->omega);
  return b;
}

LimitBounds limit_bounds() {
  LimitBounds l;
  l.s_pos = 2.0 * (2.0 - std::sqrt(2.0));
  l.s_con = 1.5;

  // the limit values must sit on their defining equations
  const double w_pos = std::log(2.0 + std::sqrt(2.0));
  const double pos_residual = 3.0 * std::cosh(w_pos) - 4.0 - std::sinh(w_pos);
  const double w_con = std::log(3.0);
  const double odd_limit = std::exp(-0.5 * w_con) - std::sinh(0.5 * w_con);
  const double sh = std::sinh(0.5 * w_con);
  const double even_limit = 2.0 * std::expm1(w_con) - std::sinh(w_con) / (sh * sh);
  if (std::fabs(pos_residual) > 1e-12 || std::fabs(odd_limit) > 1e-12 ||
      std::fabs(even_limit) > 1e-12) {
    throw std::logic_error("limit_bounds: limit equations not satisfied");
  }
  return l;
}

ThetaBounds theta_literature_bounds(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw std::domain_error("theta_literature_bounds: theta must lie in [0, 1]");
  }
  ThetaBounds t;
  if (theta == 1.0) return t;  // fully implicit: no restriction
  t.positivity = 1.0 / ((1.0 + std::sqrt(1.0 - theta)) * (1.0 - theta));
  t.contractivity = (2.0 - theta) / (4.0 * (1.0 - theta) * (1.0 - theta));
  return t;
}

std::vector<QualBound> bound_table(Property property, const std::vector<int>& ms,
                                   bool include_limit, double tol) {
  if (ms.empty()) throw std::invalid_argument("bound_table: m list must be nonempty");
  std::vector<QualBound> rows;
  rows.reserve(ms.size() + 1);
  for (int m : ms) {
    rows.push_back(property == Property::Positivity ? positivity_bound(m, tol)
                                                    : contractivity_bound(m, tol));
  }
  if (include_limit) {
    QualBound limit;
    limit.property = property;
    RootPoint p;
    if (property == Property::Positivity) {
      p.omega = std::log(2.0 + std::sqrt(2.0));
      p.x = (6.0 + std::sqrt(2.0)) / 4.0;
      p.s = 2.0 * (2.0 - std::sqrt(2.0));
    } else {
      p.omega = std::log(3.0);
      p.x = 5.0 / 3.0;
      p.s = 1.5;
    }
    limit.value = p;
    rows.push_back(limit);
  }
  return rows;
}

}  // namespace cnqual
