#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace cnqual {

/// Floating-point value carried as mant * 2^exp2, with |mant| in [0.5, 1).
///
/// Hyperbolic recurrence values grow like exp(n*omega) and leave double
/// range long before the ratios of interest do. Keeping the binary exponent
/// in a separate 64-bit integer makes products, quotients and sums of such
/// values exact in the exponent, so ratios stay accurate to ~1e-14 relative
/// even when the raw magnitudes are far beyond 1e308.
class ScaledReal {
 public:
  ScaledReal() = default;

  static ScaledReal from(double v) {
    ScaledReal r;
    r.mant_ = v;
    r.normalize();
    return r;
  }

  /// exp(t) for arbitrary t, exact in the exponent part.
  static ScaledReal exp(double t) {
    const double k = std::floor(t * kInvLn2);
    // two-part ln2 keeps the reduction error at ~k*1e-17 absolute
    const double r = (t - k * kLn2Hi) - k * kLn2Lo;
    ScaledReal out;
    out.mant_ = std::exp(r);
    out.exp2_ = static_cast<std::int64_t>(k);
    out.normalize();
    return out;
  }

  /// sinh(t), t >= 0; switches to the factored form e^t(1-e^{-2t})/2 once
  /// the direct evaluation would overflow.
  static ScaledReal sinh(double t) {
    if (t < 350.0) return from(std::sinh(t));
    return exp(t) * from(-0.5 * std::expm1(-2.0 * t));
  }

  /// cosh(t), t >= 0, with the same large-argument treatment.
  static ScaledReal cosh(double t) {
    if (t < 350.0) return from(std::cosh(t));
    return exp(t) * from(0.5 * (1.0 + std::exp(-2.0 * t)));
  }

  bool zero() const { return mant_ == 0.0; }
  int sign() const { return mant_ > 0.0 ? 1 : (mant_ < 0.0 ? -1 : 0); }

  /// Nearest double; +-inf (or 0) when the exponent leaves double range.
  double value() const {
    if (mant_ == 0.0) return 0.0;
    if (exp2_ > 1100) {
      return mant_ > 0 ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
    }
    if (exp2_ < -1100) return mant_ > 0 ? 0.0 : -0.0;
    return std::ldexp(mant_, static_cast<int>(exp2_));
  }

  /// log(|value|); -inf for zero.
  double log_abs() const {
    if (mant_ == 0.0) return -std::numeric_limits<double>::infinity();
    return std::log(std::fabs(mant_)) + static_cast<double>(exp2_) * kLn2;
  }

  ScaledReal operator-() const {
    ScaledReal r = *this;
    r.mant_ = -r.mant_;
    return r;
  }

  friend ScaledReal operator*(ScaledReal a, ScaledReal b) {
    ScaledReal r;
    r.mant_ = a.mant_ * b.mant_;
    r.exp2_ = a.exp2_ + b.exp2_;
    r.normalize();
    return r;
  }

  friend ScaledReal operator/(ScaledReal a, ScaledReal b) {
    ScaledReal r;
    r.mant_ = a.mant_ / b.mant_;
    r.exp2_ = a.exp2_ - b.exp2_;
    r.normalize();
    return r;
  }

  friend ScaledReal operator+(ScaledReal a, ScaledReal b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    if (a.exp2_ < b.exp2_) std::swap(a, b);
    const std::int64_t d = a.exp2_ - b.exp2_;
    if (d > 1000) return a;  // smaller operand below 2^-1000 relative
    ScaledReal r;
    r.mant_ = a.mant_ + std::ldexp(b.mant_, static_cast<int>(-d));
    r.exp2_ = a.exp2_;
    r.normalize();
    return r;
  }

  friend ScaledReal operator-(ScaledReal a, ScaledReal b) { return a + (-b); }

  /// a/b as a plain double.
  static double ratio(const ScaledReal& a, const ScaledReal& b) {
    return (a / b).value();
  }

 private:
  static constexpr double kLn2 = 0.6931471805599453;
  // hi part zero-padded so k * kLn2Hi is exact for |k| below 2^20
  static constexpr double kLn2Hi = 6.93147180369123816490e-01;
  static constexpr double kLn2Lo = 1.90821492927058770002e-10;
  static constexpr double kInvLn2 = 1.4426950408889634;

  void normalize() {
    if (mant_ == 0.0 || !std::isfinite(mant_)) {
      if (mant_ == 0.0) exp2_ = 0;
      return;
    }
    int e = 0;
    mant_ = std::frexp(mant_, &e);
    exp2_ += e;
  }

  double mant_ = 0.0;
  std::int64_t exp2_ = 0;
};

}  // namespace cnqual
