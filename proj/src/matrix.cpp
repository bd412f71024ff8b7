#include "cnqual/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cnqual/polynomials.hpp"
#include "cnqual/scaled_real.hpp"

namespace cnqual {

namespace {

// Thomas factorization of the constant tridiagonal M = tridiag(off, diag, off),
// reused across right-hand sides.
struct TridiagFactors {
  std::vector<double> c_prime;
  double diag;
  double off;
};

TridiagFactors factorize(int m, double diag, double off) {
  TridiagFactors f{std::vector<double>(m > 1 ? m - 1 : 0), diag, off};
  double denom = diag;
  for (int i = 0; i + 1 < m; ++i) {
    if (denom == 0.0) throw std::runtime_error("tridiagonal solve: zero pivot");
    f.c_prime[i] = off / denom;
    denom = diag - off * f.c_prime[i];
  }
  if (denom == 0.0) throw std::runtime_error("tridiagonal solve: zero pivot");
  return f;
}

void solve_in_place(const TridiagFactors& f, std::vector<double>& rhs) {
  const int m = static_cast<int>(rhs.size());
  double denom = f.diag;
  rhs[0] /= denom;
  for (int i = 1; i < m; ++i) {
    denom = f.diag - f.off * f.c_prime[i - 1];
    rhs[i] = (rhs[i] - f.off * rhs[i - 1]) / denom;
  }
  for (int i = m - 2; i >= 0; --i) {
    rhs[i] -= f.c_prime[i] * rhs[i + 1];
  }
}

void require_positive_cfl(const CflPoint& s) {
  if (!(s.s > 0.0) || !std::isfinite(s.s)) {
    throw std::invalid_argument("CflPoint: s must be positive and finite");
  }
}

// Sums of sinh(k*omega) with prefix tables per parity, in scaled form.
// C_k = 4(x-1) sinh(k w)/sinh(w), and the C_k are nondecreasing in k for
// x > 1, so prefix differencing loses at most log2(m) bits.
class SinhPrefix {
 public:
  SinhPrefix(int m, double omega) : all_(m + 1) {
    all_[0] = ScaledReal::from(0.0);
    for (int k = 1; k <= m; ++k) {
      all_[k] = all_[k - 1] + ScaledReal::sinh(k * omega);
    }
    same_.resize(m + 1);
    same_[0] = ScaledReal::from(0.0);
    if (m >= 1) same_[1] = ScaledReal::sinh(omega);
    for (int k = 2; k <= m; ++k) {
      same_[k] = same_[k - 2] + ScaledReal::sinh(k * omega);
    }
  }

  // sinh(lo w) + sinh((lo+2) w) + ... + sinh(hi w); zero when hi < lo
  ScaledReal stride2(int lo, int hi) const {
    if (hi < lo) return ScaledReal::from(0.0);
    return same_[hi] - (lo >= 2 ? same_[lo - 2] : ScaledReal::from(0.0));
  }

  // sinh(lo w) + ... + sinh(hi w), contiguous
  ScaledReal contiguous(int lo, int hi) const {
    if (hi < lo) return ScaledReal::from(0.0);
    return all_[hi] - all_[lo - 1];
  }

 private:
  std::vector<ScaledReal> all_;   // prefix over all k
  std::vector<ScaledReal> same_;  // prefix over k of the same parity
};

}  // namespace

CflPoint CflPoint::from_s(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw std::invalid_argument("CflPoint: s must be positive and finite");
  }
  CflPoint p;
  p.s = s;
  const double delta = 1.0 / s;  // x - 1, formed before the cancellation-prone sum
  p.x = 1.0 + delta;
  p.omega = std::log1p(delta + std::sqrt(delta * (delta + 2.0)));
  return p;
}

CflPoint CflPoint::from_grid(const GridConfig& grid, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("CflPoint: tau must be positive");
  const double h = grid.h();
  CflPoint p = from_s(grid.d * tau / (h * h));
  p.tau = tau;
  return p;
}

TridiagMatrix build_B(const GridConfig& grid) {
  if (grid.m < 1) throw std::invalid_argument("build_B: m must be >= 1");
  if (!(grid.d > 0.0)) throw std::invalid_argument("build_B: d must be positive");
  const double scale = grid.d / (grid.h() * grid.h());
  return TridiagMatrix{grid.m, scale, -2.0 * scale, scale};
}

CnMatrix build_A_numeric(int m, const CflPoint& s) {
  if (m < 1) throw std::invalid_argument("build_A_numeric: m must be >= 1");
  require_positive_cfl(s);
  const double half = 0.5 * s.s;
  // M = I - (s/2)T, N = I + (s/2)T with T = tridiag(1,-2,1)
  const TridiagFactors f = factorize(m, 1.0 + s.s, -half);

  CnMatrix a(m, s);
  std::vector<double> col(m);
  for (int j = 0; j < m; ++j) {
    std::fill(col.begin(), col.end(), 0.0);
    col[j] = 1.0 - s.s;
    if (j > 0) col[j - 1] = half;
    if (j + 1 < m) col[j + 1] = half;
    solve_in_place(f, col);
    for (int i = 0; i < m; ++i) a.at(i, j) = col[i];
  }
  return a;
}

CnMatrix build_A_closed(int m, const CflPoint& s) {
  if (m < 1) throw std::invalid_argument("build_A_closed: m must be >= 1");
  require_positive_cfl(s);
  const double w = s.omega;

  const SinhPrefix prefix(m, w);
  const ScaledReal sinh_w = ScaledReal::sinh(w);
  const ScaledReal u_m = ScaledReal::sinh((m + 1.0) * w) / sinh_w;
  const ScaledReal p_m = eval_hyperbolic_scaled(PolyKind::P, m, w);
  const ScaledReal c_scale = ScaledReal::from(4.0 * (s.x - 1.0)) / sinh_w;

  CnMatrix a(m, s);
  for (int i1 = 1; i1 <= m; ++i1) {
    for (int j1 = i1; j1 <= m; ++j1) {
      // fold (i, j) into the quadrant representative: i <= j, i + j <= m + 1
      int i = i1, j = j1;
      if (i + j > m + 1) {
        const int fi = m + 1 - j;
        const int fj = m + 1 - i;
        i = fi;
        j = fj;
      }
      // i summands with C indices m+2-i-j, m+4-i-j, ..., m-(j-i); on the
      // diagonal the top index is m and P_m takes its place
      const int lo = m + 2 - i - j;
      ScaledReal num;
      if (i == j) {
        num = p_m + c_scale * prefix.stride2(lo, m - 2);
      } else {
        num = c_scale * prefix.stride2(lo, m - (j - i));
      }
      const double v = (num / u_m).value();
      a.at(i1 - 1, j1 - 1) = v;
      a.at(j1 - 1, i1 - 1) = v;
    }
  }
  return a;
}

double min_entry(const CnMatrix& a) {
  double lowest = a.entry(0, 0);
  for (double v : a.data()) lowest = std::min(lowest, v);
  return lowest;
}

double inf_norm(const CnMatrix& a) {
  const int m = a.dim();
  double best = 0.0;
  for (int i = 0; i < m; ++i) {
    double row = 0.0;
    for (int j = 0; j < m; ++j) row += std::fabs(a.entry(i, j));
    best = std::max(best, row);
  }
  return best;
}

double inf_norm_closed(int m, const CflPoint& s) {
  if (m < 2) throw std::invalid_argument("inf_norm_closed: m must be >= 2");
  require_positive_cfl(s);
  const double w = s.omega;

  const SinhPrefix prefix(m, w);
  const ScaledReal sinh_w = ScaledReal::sinh(w);
  const ScaledReal u_m = ScaledReal::sinh((m + 1.0) * w) / sinh_w;
  const ScaledReal p_m = eval_hyperbolic_scaled(PolyKind::P, m, w);
  const ScaledReal c_scale = ScaledReal::from(4.0 * (s.x - 1.0)) / sinh_w;

  ScaledReal total;
  if (m % 2 == 1) {
    // central row: |P_m + C_1 + C_3 + ... + C_{m-2}| plus twice the runs
    // C_{i+2} + C_{i+4} + ... + C_{m-1-i}, i = 0 .. (m-3)/2
    ScaledReal diag = p_m + c_scale * prefix.stride2(1, m - 2);
    if (diag.sign() < 0) diag = -diag;
    ScaledReal off;
    for (int i = 0; i <= (m - 3) / 2; ++i) {
      off = off + prefix.stride2(i + 2, m - 1 - i);
    }
    total = diag + (ScaledReal::from(2.0) * c_scale) * off;
  } else {
    // either central row: |P_m + C_2 + ... + C_{m-2}| plus the contiguous
    // runs C_{i+1} .. C_{m-i}, i = 1 .. m/2-1, plus C_1 + C_3 + ... + C_{m-1}
    ScaledReal diag = p_m + c_scale * prefix.stride2(2, m - 2);
    if (diag.sign() < 0) diag = -diag;
    ScaledReal off;
    for (int i = 1; i <= m / 2 - 1; ++i) {
      off = off + prefix.contiguous(i + 1, m - i);
    }
    off = off + prefix.stride2(1, m - 1);
    total = diag + c_scale * off;
  }
  return (total / u_m).value();
}

double log_norm_inf(const TridiagMatrix& t) {
  if (t.dim < 1) throw std::invalid_argument("log_norm_inf: dim must be >= 1");
  if (t.dim == 1) return t.diag;
  const double boundary =
      std::max(t.diag + std::fabs(t.sup), t.diag + std::fabs(t.sub));
  if (t.dim == 2) return boundary;
  const double interior = t.diag + std::fabs(t.sub) + std::fabs(t.sup);
  return std::max(boundary, interior);
}

}  // namespace cnqual
