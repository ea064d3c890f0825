#include "isingcoh/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "isingcoh/logmath.hpp"
#include "isingcoh/spectrum.hpp"

namespace isingcoh::oracle {

namespace {

constexpr std::uint64_t kShardSize = 1u << 10;
constexpr int kMaxJacobiSweeps = 100;

int spin(std::uint64_t bits, int i) { return (bits >> i) & 1u ? 1 : -1; }

void require_cap(int n, int cap, const char* who) {
  if (n > cap) {
    throw DimensionTooLarge(std::string(who) + ": n=" + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  }
}

// Energies of the target 2x2 block for one source configuration:
// diag(omega0/2 + c, -omega0/2 + c), off-diagonal gamma * twos / 2.
struct BlockLevels {
  double minus;
  double plus;
  double half_gap;
};

BlockLevels block_levels(const ModelParams& p, const RingConfig& cfg) {
  const double centre = 0.5 * p.omega_a * cfg.twos - 0.5 * p.j * cfg.interaction;
  const double half_gap = 0.5 * std::hypot(p.omega0, p.gamma * cfg.twos);
  return {centre - half_gap, centre + half_gap, half_gap};
}

struct ShardSums {
  double partition = 0.0;
  double cross = 0.0;
};

}  // namespace

RingConfig classify(std::uint64_t bits, int n) {
  int magnet = 0;
  int bonds = 0;
  for (int i = 0; i < n; ++i) {
    magnet += spin(bits, i);
    bonds += spin(bits, i) * spin(bits, (i + 1) % n);
  }
  return {bits, magnet, (n - bonds) / 4, bonds};
}

std::vector<std::vector<std::uint64_t>> configuration_census(int n) {
  require_cap(n, kEnumCap, "configuration_census");
  std::vector<std::vector<std::uint64_t>> hist(
      static_cast<std::size_t>(n + 1), std::vector<std::uint64_t>(n / 2 + 1, 0));
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const RingConfig cfg = classify(bits, n);
    ++hist[static_cast<std::size_t>((cfg.twos + n) / 2)][static_cast<std::size_t>(cfg.d)];
  }
  return hist;
}

EnumSums enum_sums(const ModelParams& p, Temperature t, unsigned threads) {
  require_cap(p.n, kEnumCap, "enum_sums");
  const double beta = t.beta();
  const std::uint64_t total = std::uint64_t{1} << p.n;

  double e0 = std::numeric_limits<double>::infinity();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    e0 = std::min(e0, block_levels(p, classify(bits, p.n)).minus);
  }

  const std::uint64_t shards = (total + kShardSize - 1) / kShardSize;
  std::vector<ShardSums> partial(shards);
  auto run_shard = [&](std::uint64_t shard) {
    const std::uint64_t lo = shard * kShardSize;
    const std::uint64_t hi = std::min(total, lo + kShardSize);
    std::vector<double> z;
    std::vector<double> cross;
    z.reserve(hi - lo);
    cross.reserve(hi - lo);
    for (std::uint64_t bits = lo; bits < hi; ++bits) {
      const RingConfig cfg = classify(bits, p.n);
      const BlockLevels lv = block_levels(p, cfg);
      const double w_minus = std::exp(-beta * (lv.minus - e0));
      const double w_plus = std::exp(-beta * (lv.plus - e0));
      // Off-diagonal of each 2x2 eigenprojector: -+ (gamma twos / 2) / (2 half_gap).
      const double x = 0.25 * p.gamma * cfg.twos / lv.half_gap;
      z.push_back(w_minus + w_plus);
      cross.push_back(x * (w_plus - w_minus));
    }
    partial[shard] = {pairwise_sum(z), pairwise_sum(cross)};
  };

  unsigned workers = threads ? threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(shards));
  if (workers == 1) {
    for (std::uint64_t s = 0; s < shards; ++s) run_shard(s);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t s = w; s < shards; s += workers) run_shard(s);
      });
    }
  }

  std::vector<double> z(shards);
  std::vector<double> cross(shards);
  for (std::uint64_t s = 0; s < shards; ++s) {
    z[s] = partial[s].partition;
    cross[s] = partial[s].cross;
  }
  const double z_total = pairwise_sum(z);
  return {std::log(z_total) - beta * e0, 2.0 * std::abs(pairwise_sum(cross)) / z_total};
}

double enum_coherence(const ModelParams& p, Temperature t, unsigned threads) {
  return enum_sums(p, t, threads).coherence;
}

double DenseSymMatrix::frobenius_norm() const {
  return std::sqrt(std::inner_product(a_.begin(), a_.end(), a_.begin(), 0.0));
}

double DenseSymMatrix::trace() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
  return acc;
}

DenseSymMatrix dense_hamiltonian(const ModelParams& p) {
  require_cap(p.n, kDenseCap, "dense_hamiltonian");
  const int n = p.n;
  const std::uint64_t sources = std::uint64_t{1} << n;
  DenseSymMatrix h(static_cast<std::size_t>(2 * sources));
  for (std::uint64_t target = 0; target < 2; ++target) {
    for (std::uint64_t src = 0; src < sources; ++src) {
      const std::size_t row = target * sources + src;
      const int sz0 = target ? 1 : -1;
      // (omega0/2) sigma_0^z
      h(row, row) += 0.5 * p.omega0 * sz0;
      for (int i = 0; i < n; ++i) {
        // (omega_a/2) sigma_i^z
        h(row, row) += 0.5 * p.omega_a * spin(src, i);
        // -(J/2) sigma_i^z sigma_{i+1}^z, periodic
        h(row, row) += -0.5 * p.j * spin(src, i) * spin(src, (i + 1) % n);
        // (gamma/2) sigma_0^x sigma_i^z flips the target bit
        const std::size_t col = (1 - target) * sources + src;
        h(col, row) += 0.5 * p.gamma * spin(src, i);
      }
    }
  }
  return h;
}

EigenDecomposition jacobi_eigh(DenseSymMatrix a) {
  const std::size_t n = a.dim();
  DenseSymMatrix v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  const double norm = a.frobenius_norm();
  auto off_norm = [&] {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) acc += a(i, j) * a(i, j);
    return std::sqrt(acc);
  };

  bool converged = false;
  for (int sweep = 0; sweep <= kMaxJacobiSweeps; ++sweep) {
    if (off_norm() <= 1e-12 * norm) {
      converged = true;
      break;
    }
    if (sweep == kMaxJacobiSweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged) {
    throw NoConvergence("jacobi_eigh: no convergence after " +
                        std::to_string(kMaxJacobiSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  EigenDecomposition out{std::vector<double>(n), DenseSymMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

Matrix2 dense_rho0_matrix(const ModelParams& p, Temperature t) {
  const double beta = t.beta();
  const EigenDecomposition eig = jacobi_eigh(dense_hamiltonian(p));
  const std::size_t dim = eig.values.size();
  const std::size_t sources = dim / 2;
  const double e0 = eig.values.front();

  // Block index 0 is |e> (target bit 1), 1 is |g> (target bit 0).
  const std::array<std::size_t, 2> offset{sources, 0};
  std::array<std::vector<double>, 4> parts;
  std::vector<double> weights(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    weights[k] = std::exp(-beta * (eig.values[k] - e0));
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        double overlap = 0.0;
        for (std::size_t src = 0; src < sources; ++src) {
          overlap += eig.vectors(offset[a] + src, k) * eig.vectors(offset[b] + src, k);
        }
        parts[2 * a + b].push_back(weights[k] * overlap);
      }
    }
  }
  const double z = pairwise_sum(weights);
  Matrix2 rho{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) rho[a][b] = pairwise_sum(parts[2 * a + b]) / z;
  return rho;
}

Rho0 dense_rho0(const ModelParams& p, Temperature t) {
  const Matrix2 m = dense_rho0_matrix(p, t);
  return {m[0][0], m[1][1], m[0][1]};
}

}  // namespace isingcoh::oracle
