#include "isingcoh/logmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace isingcoh {

namespace {

constexpr std::size_t kPairwiseBlock = 8;

}  // namespace

double pairwise_sum(std::span<const double> xs) {
  if (xs.size() <= kPairwiseBlock) {
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc;
  }
  const std::size_t half = xs.size() / 2;
  return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

double log_sum_exp(std::span<const double> xs) {
  if (xs.empty()) return kNegInf;
  const double top = *std::max_element(xs.begin(), xs.end());
  if (top == kNegInf) return kNegInf;
  if (std::isinf(top)) return top;
  std::vector<double> shifted(xs.size());
  std::transform(xs.begin(), xs.end(), shifted.begin(),
                 [top](double x) { return std::exp(x - top); });
  return top + std::log(pairwise_sum(shifted));
}

double log_sinh(double x) {
  if (x < 0.0) throw std::domain_error("log_sinh requires x >= 0");
  if (x == 0.0) return kNegInf;
  // sinh(x) = e^x (1 - e^{-2x}) / 2
  return x + std::log(-std::expm1(-2.0 * x)) - std::log(2.0);
}

double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

SignedLogReal SignedLogReal::from_log(int sign, double log_magnitude) {
  SignedLogReal r;
  if (sign == 0 || log_magnitude == kNegInf) return r;
  r.sign_ = sign > 0 ? 1 : -1;
  r.log_mag_ = log_magnitude;
  return r;
}

SignedLogReal SignedLogReal::from_value(double v) {
  if (v == 0.0) return {};
  return from_log(v > 0.0 ? 1 : -1, std::log(std::abs(v)));
}

double SignedLogReal::value() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(log_mag_);
}

SignedLogReal SignedLogReal::operator*(const SignedLogReal& o) const {
  if (is_zero() || o.is_zero()) return {};
  return from_log(sign_ * o.sign_, log_mag_ + o.log_mag_);
}

SignedLogReal SignedLogReal::operator/(const SignedLogReal& o) const {
  if (o.is_zero()) throw std::domain_error("SignedLogReal division by zero");
  if (is_zero()) return {};
  return from_log(sign_ * o.sign_, log_mag_ - o.log_mag_);
}

SignedLogReal signed_sum(std::span<const SignedLogReal> terms) {
  double top = kNegInf;
  for (const auto& t : terms) {
    if (!t.is_zero()) top = std::max(top, t.log_magnitude());
  }
  if (top == kNegInf) return {};
  std::vector<double> shifted;
  shifted.reserve(terms.size());
  for (const auto& t : terms) {
    shifted.push_back(t.is_zero() ? 0.0 : t.sign() * std::exp(t.log_magnitude() - top));
  }
  const double rest = pairwise_sum(shifted);
  if (rest == 0.0) return {};
  return SignedLogReal::from_log(rest > 0.0 ? 1 : -1, top + std::log(std::abs(rest)));
}

}  // namespace isingcoh
