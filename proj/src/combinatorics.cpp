#include "isingcoh/combinatorics.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "isingcoh/logmath.hpp"

namespace isingcoh {

namespace {

__extension__ using u128 = unsigned __int128;
constexpr u128 kU64Max = std::numeric_limits<std::uint64_t>::max();

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // C(n, i) = C(n, i-1) * (n - i + 1) / i stays integral at every step.
  u128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<u128>(n - i + 1) / static_cast<u128>(i);
    if (acc > kU64Max) {
      throw OverflowError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t degeneracy(LevelIndex idx, int n) {
  const int a = std::abs(idx.twos);
  if (n <= 0 || a > n || (n - a) % 2 != 0 || idx.d < 0) return 0;
  if (a == n || idx.d == 0) return (a == n && idx.d == 0) ? 1 : 0;
  if (idx.d > max_domains(idx.twos, n)) return 0;
  const u128 c1 = binomial((n - a) / 2 - 1, idx.d - 1);
  const u128 c2 = binomial((n + a) / 2 - 1, idx.d - 1);
  const u128 prod = c1 * c2;
  // c1 * c2 * n / d is an integer; divide first where possible to stay in range.
  const u128 result = prod / static_cast<u128>(idx.d) * static_cast<u128>(n) +
                      prod % static_cast<u128>(idx.d) * static_cast<u128>(n) /
                          static_cast<u128>(idx.d);
  if (result > kU64Max) {
    throw OverflowError("degeneracy exceeds 64 bits at n=" + std::to_string(n));
  }
  return static_cast<std::uint64_t>(result);
}

double log_r_weight(int twos, int n, double beta_j) {
  const int lo = min_domains(twos, n);
  const int hi = max_domains(twos, n);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int d = lo; d <= hi; ++d) {
    const auto omega = static_cast<double>(degeneracy({twos, d}, n));
    terms.push_back(std::log(omega) + 0.5 * beta_j * interaction_count(d, n));
  }
  return log_sum_exp(terms);
}

double log_r_hypergeometric(int twos, int n, double beta_j) {
  const int abs_twos = std::abs(twos);
  if (abs_twos >= n) {
    throw NonTerminatingSeries("hypergeometric form needs |twos| < n");
  }
  // Upper parameters a = 1 - (n + twos)/2, b = 1 - (n - twos)/2; both are
  // nonpositive integers here, so the series stops after min(-a, -b) + 1 terms.
  const int a = 1 - (n + abs_twos) / 2;
  const int b = 1 - (n - abs_twos) / 2;
  if (a > 0 && b > 0) {
    throw NonTerminatingSeries("no nonpositive upper parameter");
  }
  const int last = std::min(-a, -b);
  const double log_z = -2.0 * beta_j;

  std::vector<SignedLogReal> terms;
  terms.reserve(static_cast<std::size_t>(last + 1));
  SignedLogReal term = SignedLogReal::from_log(1, 0.0);
  for (int k = 0; k <= last; ++k) {
    terms.push_back(term);
    // t_{k+1} / t_k = (a+k)(b+k) / ((2+k)(1+k)) * z
    const double num = static_cast<double>(a + k) * static_cast<double>(b + k);
    const double den = static_cast<double>(2 + k) * static_cast<double>(1 + k);
    if (num == 0.0) break;
    term = term * SignedLogReal::from_log(num > 0 ? 1 : -1,
                                          std::log(std::abs(num)) - std::log(den) + log_z);
  }
  const SignedLogReal series = signed_sum(terms);
  if (series.sign() <= 0) {
    throw std::logic_error("hypergeometric series for R must be positive");
  }
  return std::log(static_cast<double>(n)) + 0.5 * beta_j * (n - 4) + series.log_magnitude();
}

double r_hypergeometric(int twos, int n, double beta_j) {
  return std::exp(log_r_hypergeometric(twos, n, beta_j));
}

}  // namespace isingcoh
