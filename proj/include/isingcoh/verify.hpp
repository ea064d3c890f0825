#pragma once

// Seeded oracle-equivalence and property suites. Shared by the `verify` CLI
// subcommand and the acceptance tests; every suite is deterministic for a
// given seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "isingcoh/model.hpp"

namespace isingcoh::verify {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  double worst = 0.0;          // largest observed error (or smallest margin)
  double tolerance = 0.0;
  std::string counterexample;  // first failing case, empty on success
};

/// Portable uniform draws from a 64-bit Mersenne twister (no reliance on
/// implementation-defined standard distributions).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);
  double log_uniform(double lo, double hi);
  int integer(int lo, int hi);  // inclusive

 private:
  std::mt19937_64 engine_;
};

/// closed-form coherence vs exhaustive enumeration, |diff| <= 1e-12,
/// N <= max_n, T log-uniform in [0.1, 100].
CheckResult check_enum_equivalence(std::uint64_t seed, int cases, int max_n);

/// enumeration log Z vs log_partition, relative 1e-12.
CheckResult check_enum_partition(std::uint64_t seed, int cases, int max_n);

/// dense rho0 vs closed-form rho0 (<= 1e-8 elementwise) and dense spectrum vs
/// analytic level multiset (<= 1e-9).
CheckResult check_dense_equivalence(std::uint64_t seed, int cases, int max_n);

/// (twos, d) census of enumerated ring configurations equals the degeneracy
/// formula for every n <= max_n, and the degeneracies sum to 2^n.
CheckResult check_census(int max_n);

/// Strict increase of C in J, omega_a and gamma: `cases` random parameter
/// sets, T in {0.5, 5, 50}, margin > 1e-12.
CheckResult check_monotonicity(std::uint64_t seed, int cases);

/// direct R sum vs terminating hypergeometric series, relative 1e-10, over
/// `points` seeded (twos, N <= max_n, |beta J| <= 20) draws.
CheckResult check_hypergeometric(std::uint64_t seed, int points, int max_n);

/// Phase label at J = transition_j is Critical and agrees with the scanned
/// ground manifold for random draws.
CheckResult check_phase_consistency(std::uint64_t seed, int cases);

struct VerifyConfig {
  int max_n_enum = 12;
  int max_n_dense = 6;
  int cases = 200;
  std::uint64_t seed = 20251106;
};

/// Rejects configurations outside the oracle caps (throws std::invalid_argument).
void check_config(const VerifyConfig& config);

std::vector<CheckResult> run_all(const VerifyConfig& config);

}  // namespace isingcoh::verify
