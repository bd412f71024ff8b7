#include "cnqual/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cnqual {

namespace {

void seeds(PolyKind kind, double x, double& p0, double& p1) {
  switch (kind) {
    case PolyKind::U:
      p0 = 1.0;
      p1 = 2.0 * x;
      break;
    case PolyKind::P:
      p0 = -1.0;
      p1 = 2.0 * x - 4.0;
      break;
    case PolyKind::C:
      p0 = 0.0;
      p1 = 4.0 * (x - 1.0);
      break;
  }
}

// coth(t) - 1, exact for all t > 0, degrades gracefully to 0 for huge t.
double coth_minus_one(double t) { return 2.0 / std::expm1(2.0 * t); }

// 3 cosh(w) - 4 - sinh(w); vanishes at the limit angle log(2 + sqrt(2)).
double limit_equation(double w) {
  return 3.0 * std::cosh(w) - 4.0 - std::sinh(w);
}

}  // namespace

double eval_recurrence(PolyKind kind, int n, double x) {
  if (n < 0) throw std::invalid_argument("eval_recurrence: n must be >= 0");
  if (!std::isfinite(x)) throw std::invalid_argument("eval_recurrence: x must be finite");
  double p0 = 0.0, p1 = 0.0;
  seeds(kind, x, p0, p1);
  if (n == 0) return p0;
  double prev = p0, cur = p1;
  for (int k = 2; k <= n; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  if (!std::isfinite(cur)) throw std::range_error("eval_recurrence: value exceeds double range");
  return cur;
}

ScaledReal eval_hyperbolic_scaled(PolyKind kind, int n, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::domain_error("eval_hyperbolic: omega must be positive and finite");
  }
  if (n < 0) throw std::invalid_argument("eval_hyperbolic: n must be >= 0");
  const ScaledReal sinh_w = ScaledReal::sinh(omega);
  switch (kind) {
    case PolyKind::U:
      return ScaledReal::sinh((n + 1.0) * omega) / sinh_w;
    case PolyKind::C:
      return ScaledReal::from(4.0 * (std::cosh(omega) - 1.0)) *
             ScaledReal::sinh(n * omega) / sinh_w;
    case PolyKind::P:
      return ScaledReal::from(3.0 * std::cosh(omega) - 4.0) *
                 ScaledReal::sinh(n * omega) / sinh_w -
             ScaledReal::cosh(n * omega);
  }
  throw std::logic_error("eval_hyperbolic: unreachable");
}

double eval_hyperbolic(PolyKind kind, int n, double omega) {
  return eval_hyperbolic_scaled(kind, n, omega).value();
}

bool IdentityReport::within(double rel_tol) const {
  const double bound = rel_tol * scale;
  return std::fabs(p_from_u) <= bound && std::fabs(c_from_sum) <= bound &&
         std::fabs(c_factored) <= bound;
}

IdentityReport check_identities(int n, double x) {
  if (n < 2) throw std::invalid_argument("check_identities: n must be >= 2");
  const double un = eval_recurrence(PolyKind::U, n, x);
  const double un1 = eval_recurrence(PolyKind::U, n - 1, x);
  const double un2 = eval_recurrence(PolyKind::U, n - 2, x);
  const double pn = eval_recurrence(PolyKind::P, n, x);
  const double cn = eval_recurrence(PolyKind::C, n, x);

  IdentityReport r;
  r.p_from_u = pn - (2.0 * un2 - 4.0 * un1 + un);
  r.c_from_sum = cn - (pn + un);
  r.c_factored = cn - 4.0 * (x - 1.0) * un1;
  r.scale = std::max({1.0, std::fabs(pn), std::fabs(cn), std::fabs(un),
                      4.0 * std::fabs(un1), 2.0 * std::fabs(un2)});
  return r;
}

RootSolve solve_isolated_root_p(int n, double tol) {
  if (n < 1) throw std::invalid_argument("isolated_root_p: n must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("isolated_root_p: tol must be > 0");

  const double omega_inf = std::log(2.0 + std::sqrt(2.0));
  const double omega_one = std::log(2.0 + std::sqrt(3.0));

  // residual of coth(n w) sinh(w) = 3 cosh(w) - 4, written so that the
  // finite-n part q = coth - 1 never cancels:  q(n w) sinh(w) - limit(w)
  const auto residual = [n](double w) {
    return coth_minus_one(n * w) * std::sinh(w) - limit_equation(w);
  };

  RootSolve out;

  // Past this size the root sits closer to the limit angle than bisection
  // can resolve; report the correctly rounded limit point instead.
  const double tail = coth_minus_one(n * omega_inf) * std::sinh(omega_inf);
  if (tail < 1e-13) {
    out.omega = omega_inf;
    out.x = (6.0 + std::sqrt(2.0)) / 4.0;
    out.saturated = true;
    out.residual = tail / (3.0 * out.x - 4.0);
    return out;
  }

  // open end nudged right so the left value is clear of rounding noise in
  // limit_equation; closed end nudged right because the n = 1 root sits
  // exactly on it
  double lo = omega_inf + 1e-15;
  double hi = omega_one + 1e-9;
  const double f_lo = residual(lo);
  const double f_hi = residual(hi);
  if (!(f_lo > 0.0) || !(f_hi <= 0.0)) {
    throw std::runtime_error("isolated_root_p: no sign change on the root bracket");
  }
  while (hi - lo > tol && out.iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++out.iterations;
  }
  out.omega = 0.5 * (lo + hi);
  out.x = std::cosh(out.omega);
  // normalized by the equation's right side, which is O(1) on the bracket
  out.residual = residual(out.omega) / (3.0 * out.x - 4.0);
  return out;
}

IsolatedRoot isolated_root_p(int n) {
  const RootSolve s = solve_isolated_root_p(n);
  return IsolatedRoot{s.omega, s.x};
}

int count_interior_roots(PolyKind kind, int n) {
  if (n < 2) throw std::invalid_argument("count_interior_roots: n must be >= 2");
  if (kind == PolyKind::U) {
    throw std::invalid_argument("count_interior_roots: kind must be P or C");
  }
  const int cells = 512 * n;
  const double spacing = 2.0 / cells;

  const auto sign_at = [&](double x) {
    double v = eval_recurrence(kind, n, x);
    if (v == 0.0) {
      // refine once: nudge off the exact zero by a quarter cell
      v = eval_recurrence(kind, n, x + 0.25 * spacing);
    }
    return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
  };

  int count = 0;
  int prev = sign_at(-1.0 + 0.5 * spacing);
  for (int j = 1; j < cells; ++j) {
    const int cur = sign_at(-1.0 + (j + 0.5) * spacing);
    if (prev * cur < 0) ++count;
    if (cur != 0) prev = cur;
  }
  return count;
}

}  // namespace cnqual
