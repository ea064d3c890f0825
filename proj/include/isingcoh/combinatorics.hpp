#pragma once

// Ring-configuration counting for the periodic Ising chain of source spins.
//
// A configuration is indexed by its magnetization `twos` = 2s (sum of sigma^z,
// always an integer with twos = n mod 2) and by `d`, the number of e-domains
// (half the number of domain walls). The Ising interaction count of such a
// configuration is n - 4d.

#include <cstdint>
#include <stdexcept>

namespace isingcoh {

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class NonTerminatingSeries : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct LevelIndex {
  int twos = 0;
  int d = 0;

  friend bool operator==(const LevelIndex&, const LevelIndex&) = default;
};

/// Exact binomial coefficient; 0 when k < 0 or k > n. Throws OverflowError if
/// the value does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// Largest domain count d reachable at magnetization `twos` on a ring of n.
inline int max_domains(int twos, int n) {
  const int a = twos < 0 ? -twos : twos;
  return (n - a) / 2;
}

/// Smallest domain count with nonzero degeneracy: 0 for the uniform states,
/// 1 otherwise.
inline int min_domains(int twos, int n) {
  const int a = twos < 0 ? -twos : twos;
  return a == n ? 0 : 1;
}

/// Sum over ring bonds of sigma_i sigma_{i+1} for a level with d e-domains.
inline int interaction_count(int d, int n) { return n - 4 * d; }

/// Number of ring configurations with magnetization idx.twos and idx.d
/// e-domains. Zero for unreachable indices (including parity mismatch).
std::uint64_t degeneracy(LevelIndex idx, int n);

/// log R(s, n) with R = sum_d degeneracy * exp(beta_j * (n - 4d) / 2),
/// summed directly over the reachable d range. R(s) = R(-s).
double log_r_weight(int twos, int n, double beta_j);

/// log R(s, n) through the terminating Gauss series
///   n e^{beta_j (n-4)/2} 2F1(1 - n/2 - s, 1 - n/2 + s; 2; e^{-2 beta_j}),
/// valid for |twos| < n. Throws NonTerminatingSeries otherwise.
double log_r_hypergeometric(int twos, int n, double beta_j);

/// R(s, n) as a plain double via the hypergeometric series. May overflow for
/// extreme |beta_j| n; prefer log_r_hypergeometric.
double r_hypergeometric(int twos, int n, double beta_j);

}  // namespace isingcoh
