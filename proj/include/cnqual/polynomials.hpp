#pragma once

#include "cnqual/scaled_real.hpp"

namespace cnqual {

/// The three polynomial families behind the Crank-Nicolson iteration matrix.
/// All satisfy the same three-term recurrence p_n = 2x p_{n-1} - p_{n-2} and
/// differ only in their seeds:
///   U: (1, 2x)        Chebyshev polynomials of the second kind
///   P: (-1, 2x - 4)   diagonal-band family; its isolated root > 1 fixes the
///                     positivity threshold
///   C: (0, 4(x - 1))  off-diagonal family, C_n = 4(x-1) U_{n-1}
enum class PolyKind { U, P, C };

/// p_n(x) by direct recurrence. Total on finite inputs; throws
/// std::range_error if the value grows past double range.
double eval_recurrence(PolyKind kind, int n, double x);

/// p_n(cosh(omega)) through the hyperbolic closed forms, omega > 0:
///   U_n = sinh((n+1) w) / sinh(w)
///   C_n = 4 (cosh(w) - 1) sinh(n w) / sinh(w)
///   P_n = (3 cosh(w) - 4) sinh(n w) / sinh(w) - cosh(n w)
/// Large n*omega is evaluated in scaled form, so ratios of two family values
/// at the same omega stay accurate even when raw magnitudes overflow.
ScaledReal eval_hyperbolic_scaled(PolyKind kind, int n, double omega);

/// Same as eval_hyperbolic_scaled collapsed to double (+-inf on overflow).
/// Throws std::domain_error for omega <= 0.
double eval_hyperbolic(PolyKind kind, int n, double omega);

/// Residuals of the three cross-family identities at (n, x), n >= 2:
///   P_n = 2 U_{n-2} - 4 U_{n-1} + U_n
///   C_n = P_n + U_n
///   C_n = 4 (x - 1) U_{n-1}
struct IdentityReport {
  double p_from_u = 0.0;
  double c_from_sum = 0.0;
  double c_factored = 0.0;
  double scale = 0.0;  // largest |term| entering the identities, floor 1

  bool within(double rel_tol = 1e-10) const;
};
IdentityReport check_identities(int n, double x);

/// The isolated root of P_n outside [-1, 1]: x_n = cosh(omega_n) with
/// omega_n the unique positive root of coth(n w) sinh(w) = 3 cosh(w) - 4.
struct IsolatedRoot {
  double omega = 0.0;
  double x = 0.0;
};

/// Root solve with bisection bookkeeping; positivity bounds reuse it.
/// `saturated` is set when the root is closer to the limit log(2 + sqrt(2))
/// than double arithmetic can resolve; the limit point is returned then.
struct RootSolve {
  double omega = 0.0;
  double x = 0.0;
  int iterations = 0;
  double residual = 0.0;  // normalized residual of the defining equation
  bool saturated = false;
};
RootSolve solve_isolated_root_p(int n, double tol = 1e-13);

IsolatedRoot isolated_root_p(int n);

/// Number of sign changes of the family over (-1, 1) on a midpoint grid of
/// 512*n cells, refining once wherever a grid value lands exactly on zero.
/// Equals n-1 for the P and C families, n >= 2.
int count_interior_roots(PolyKind kind, int n);

}  // namespace cnqual
