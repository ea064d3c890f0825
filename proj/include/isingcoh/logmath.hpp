#pragma once

// Log-domain helpers shared by the closed-form evaluators. All reductions run
// in a fixed pairwise order so results are bitwise reproducible.

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace isingcoh {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// Pairwise (tree) sum in index order.
double pairwise_sum(std::span<const double> xs);

/// log(sum_i exp(xs[i])). Returns -inf for an empty span or all -inf input.
double log_sum_exp(std::span<const double> xs);

/// log(sinh(x)) for x >= 0; -inf at x = 0.
double log_sinh(double x);

/// log(cosh(x)), any x.
double log_cosh(double x);

/// A real number stored as sign * exp(log_magnitude). sign == 0 iff the value
/// is exactly zero, in which case log_magnitude is -inf.
class SignedLogReal {
 public:
  SignedLogReal() = default;

  static SignedLogReal from_log(int sign, double log_magnitude);
  static SignedLogReal from_value(double v);

  int sign() const noexcept { return sign_; }
  double log_magnitude() const noexcept { return log_mag_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  /// Converts back to a double; may overflow to +-inf or underflow to 0.
  double value() const;

  SignedLogReal operator*(const SignedLogReal& o) const;
  SignedLogReal operator/(const SignedLogReal& o) const;
  SignedLogReal operator-() const { return from_log(-sign_, log_mag_); }

 private:
  int sign_ = 0;
  double log_mag_ = kNegInf;
};

/// Signed log-sum-exp: shifts every magnitude by the largest one, then sums
/// the signed remainders pairwise.
SignedLogReal signed_sum(std::span<const SignedLogReal> terms);

}  // namespace isingcoh
