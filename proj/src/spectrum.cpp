#include "isingcoh/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace isingcoh {

const char* to_string(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::Ferromagnetic: return "Ferromagnetic";
    case PhaseLabel::Antiferromagnetic: return "Antiferromagnetic";
    case PhaseLabel::Critical: return "Critical";
  }
  return "Unknown";
}

double branch_gap(int twos, const ModelParams& p) {
  return std::hypot(p.omega0, p.gamma * twos);
}

EnergyPair energy_pair(LevelIndex idx, const ModelParams& p) {
  // twos / 2 is exact in binary floating point.
  const double s = 0.5 * idx.twos;
  const double centre = p.omega_a * s - 0.5 * p.j * interaction_count(idx.d, p.n);
  const double half_gap = 0.5 * branch_gap(idx.twos, p);
  return {centre - half_gap, centre + half_gap};
}

MixingWeights mixing_weights(int twos, const ModelParams& p) {
  const double g = branch_gap(twos, p);
  const double coupling = p.gamma * twos;  // 2 gamma s
  // 1/2 (1 - omega0/g) rewritten without cancellation for small coupling.
  const double p2_plus = coupling * coupling / (2.0 * g * (g + p.omega0));
  const double p2_minus = 1.0 - p2_plus;
  const double cross = 0.5 * coupling / g;  // gamma s / g
  return {p2_minus, p2_plus, -cross, cross};
}

std::vector<SpectrumLevel> all_levels(const ModelParams& p) {
  std::vector<SpectrumLevel> levels;
  for (int twos = -p.n; twos <= p.n; twos += 2) {
    for (int d = min_domains(twos, p.n); d <= max_domains(twos, p.n); ++d) {
      const std::uint64_t omega = degeneracy({twos, d}, p.n);
      if (omega == 0) continue;
      const EnergyPair e = energy_pair({twos, d}, p);
      levels.push_back({twos, d, Branch::Minus, e.minus, omega});
      levels.push_back({twos, d, Branch::Plus, e.plus, omega});
    }
  }
  return levels;
}

double ground_tolerance(double ground_energy) {
  return 1e-9 * std::max(1.0, std::abs(ground_energy));
}

double ground_energy(const ModelParams& p) {
  double lowest = std::numeric_limits<double>::infinity();
  for (int twos = -p.n; twos <= p.n; twos += 2) {
    for (int d = min_domains(twos, p.n); d <= max_domains(twos, p.n); ++d) {
      lowest = std::min(lowest, energy_pair({twos, d}, p).minus);
    }
  }
  return lowest;
}

std::vector<SpectrumLevel> ground_level(const ModelParams& p) {
  const auto levels = all_levels(p);
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& lv : levels) lowest = std::min(lowest, lv.energy);
  const double tol = ground_tolerance(lowest);
  std::vector<SpectrumLevel> manifold;
  std::copy_if(levels.begin(), levels.end(), std::back_inserter(manifold),
               [&](const SpectrumLevel& lv) { return lv.energy - lowest <= tol; });
  return manifold;
}

namespace {

LevelIndex aligned_candidate(int n) { return {-n, 0}; }

// s = 0 with n/2 domains for even n, s = -1/2 with (n-1)/2 domains for odd n.
LevelIndex antialigned_candidate(int n) {
  return n % 2 == 0 ? LevelIndex{0, n / 2} : LevelIndex{-1, (n - 1) / 2};
}

}  // namespace

PhaseInfo phase_classify(const ModelParams& p) {
  if (p.n == 1) {
    return {PhaseLabel::Ferromagnetic, std::numeric_limits<double>::infinity()};
  }
  const double e_aligned = energy_pair(aligned_candidate(p.n), p).minus;
  const double e_anti = energy_pair(antialigned_candidate(p.n), p).minus;
  const double delta = e_anti - e_aligned;
  const double tol = ground_tolerance(std::min(e_aligned, e_anti));
  if (delta > tol) return {PhaseLabel::Ferromagnetic, delta};
  if (delta < -tol) return {PhaseLabel::Antiferromagnetic, delta};
  return {PhaseLabel::Critical, delta};
}

std::optional<double> transition_j(const ModelParams& p) {
  if (p.n == 1) return std::nullopt;
  ModelParams zero_j = p;
  zero_j.j = 0.0;
  const LevelIndex anti = antialigned_candidate(p.n);
  const double delta_at_zero = energy_pair(anti, zero_j).minus -
                               energy_pair(aligned_candidate(p.n), zero_j).minus;
  // delta(J) = delta(0) + J * [(n - eps_anti) - (n - eps_aligned)] / 2 = delta(0) + 2 d J
  return -delta_at_zero / (2.0 * anti.d);
}

double even_n_transition_line(const ModelParams& p) {
  if (p.n % 2 != 0) throw std::invalid_argument("even_n_transition_line: n must be even");
  if (!(p.gamma > 0.0)) throw std::invalid_argument("even_n_transition_line: gamma must be > 0");
  const double x = p.omega0 / (p.gamma * p.n);
  return -0.5 * p.omega_a - 0.5 * p.gamma * (std::sqrt(1.0 + x * x) - x);
}

}  // namespace isingcoh
