#pragma once

// Brute-force reference evaluators. Nothing here uses the analytic
// factorization of the spectrum or the degeneracy formula:
//   * the enumeration oracle walks all 2^n ring configurations and solves the
//     target 2x2 block per configuration;
//   * the dense oracle builds H in the raw 2^(n+1) product basis, diagonalizes
//     it with cyclic Jacobi rotations and partial-traces the Gibbs state.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "isingcoh/model.hpp"
#include "isingcoh/observables.hpp"

namespace isingcoh::oracle {

inline constexpr int kEnumCap = 20;
inline constexpr int kDenseCap = 8;

class DimensionTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One source configuration: bit i set means source i is in |e>.
struct RingConfig {
  std::uint64_t bits;
  int twos;
  int d;
  int interaction;  // sum_i sigma_i sigma_{i+1} on the periodic ring
};

RingConfig classify(std::uint64_t bits, int n);

/// Histogram of (twos, d) over all 2^n configurations, indexed
/// [(twos + n) / 2][d].
std::vector<std::vector<std::uint64_t>> configuration_census(int n);

struct EnumSums {
  double log_partition;
  double coherence;
};

/// Exhaustive microstate sums. Shards of the 2^n range may run on separate
/// threads; shard results are combined in fixed order.
EnumSums enum_sums(const ModelParams& p, Temperature t, unsigned threads = 0);

double enum_coherence(const ModelParams& p, Temperature t, unsigned threads = 0);

/// Row-major real symmetric matrix.
class DenseSymMatrix {
 public:
  explicit DenseSymMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {}

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }

  double frobenius_norm() const;
  double trace() const;

 private:
  std::size_t dim_;
  std::vector<double> a_;
};

/// H in the product basis |target> (x) |source_1 ... source_n>, index
/// = target_bit * 2^n + source_bits, with bit value 1 meaning |e>.
DenseSymMatrix dense_hamiltonian(const ModelParams& p);

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  DenseSymMatrix vectors;      // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi eigensolver. Stops when the off-diagonal Frobenius norm drops
/// below 1e-12 ||m||; throws NoConvergence after a bounded number of sweeps.
EigenDecomposition jacobi_eigh(DenseSymMatrix m);

/// 2x2 reduced density matrix, rows/columns ordered {|e>, |g>}.
using Matrix2 = std::array<std::array<double, 2>, 2>;

Matrix2 dense_rho0_matrix(const ModelParams& p, Temperature t);

Rho0 dense_rho0(const ModelParams& p, Temperature t);

}  // namespace isingcoh::oracle
