#pragma once

#include <optional>
#include <vector>

namespace cnqual {

/// Uniform spatial mesh on (0, 1) with homogeneous Dirichlet ends:
/// m interior points, width h = 1/(m+1), diffusion coefficient d.
struct GridConfig {
  int m = 1;
  double d = 1.0;

  double h() const { return 1.0 / (m + 1); }
};

/// Coupled CFL coordinates: s = d*tau/h^2, x = 1 + 1/s, omega = arccosh(x).
struct CflPoint {
  double s = 0.0;
  double x = 0.0;
  double omega = 0.0;
  std::optional<double> tau;

  static CflPoint from_s(double s);
  static CflPoint from_grid(const GridConfig& grid, double tau);
};

/// Symmetric constant-coefficient tridiagonal matrix.
struct TridiagMatrix {
  int dim = 1;
  double sub = 0.0;
  double diag = 0.0;
  double sup = 0.0;
};

/// Dense Crank-Nicolson iteration matrix of dimension m at a CFL point.
class CnMatrix {
 public:
  CnMatrix(int m, CflPoint s) : m_(m), s_(s), entries_(m * size_t(m), 0.0) {}

  int dim() const { return m_; }
  const CflPoint& cfl() const { return s_; }

  double entry(int i, int j) const { return entries_[size_t(i) * m_ + j]; }
  double& at(int i, int j) { return entries_[size_t(i) * m_ + j]; }
  const std::vector<double>& data() const { return entries_; }

 private:
  int m_;
  CflPoint s_;
  std::vector<double> entries_;
};

/// (d/h^2) tridiag(1, -2, 1) of dimension m.
TridiagMatrix build_B(const GridConfig& grid);

/// A_m = (I - (s/2)T)^{-1} (I + (s/2)T), T = tridiag(1,-2,1), assembled
/// column by column with a tridiagonal LU solve. O(m^2).
CnMatrix build_A_numeric(int m, const CflPoint& s);

/// A_m assembled from the polynomial representation: each entry is a short
/// sum of C_k values (P_m substituting the top term on the diagonal) over
/// the common denominator U_m, all evaluated at x = 1 + 1/s in scaled form.
CnMatrix build_A_closed(int m, const CflPoint& s);

double min_entry(const CnMatrix& a);

/// max_i sum_j |a_ij|
double inf_norm(const CnMatrix& a);

/// The same norm from the central-row closed formula, m >= 2.
double inf_norm_closed(int m, const CflPoint& s);

/// Logarithmic max-norm: max_i (a_ii + sum_{j != i} |a_ij|).
double log_norm_inf(const TridiagMatrix& t);

}  // namespace cnqual
