#pragma once

// Analytic spectrum of the coupled target + ring Hamiltonian. Every
// eigenvector factorizes into a target state times a source product state
// |s, m>, so the levels are labelled by (twos, d, branch).

#include <cstdint>
#include <optional>
#include <vector>

#include "isingcoh/combinatorics.hpp"
#include "isingcoh/model.hpp"

namespace isingcoh {

enum class Branch { Minus, Plus };

struct EnergyPair {
  double minus;
  double plus;
};

struct SpectrumLevel {
  int twos;
  int d;
  Branch branch;
  double energy;
  std::uint64_t degeneracy;
};

/// Target-state weights for the two branches at magnetization twos.
/// p2_* is |c2|^2 (population of |g>), cross_* is c2 c1^*.
struct MixingWeights {
  double p2_minus;
  double p2_plus;
  double cross_minus;
  double cross_plus;
};

enum class PhaseLabel { Ferromagnetic, Antiferromagnetic, Critical };

const char* to_string(PhaseLabel label);

struct PhaseInfo {
  PhaseLabel label;
  /// E_min(antiferro candidate) - E_min(aligned). +inf for n = 1, where the
  /// two candidates coincide.
  double delta_e_min;
};

/// sqrt(omega0^2 + (gamma * twos)^2), the splitting of the two branches.
double branch_gap(int twos, const ModelParams& p);

EnergyPair energy_pair(LevelIndex idx, const ModelParams& p);

MixingWeights mixing_weights(int twos, const ModelParams& p);

/// All (twos, d, branch) levels with nonzero degeneracy, ascending twos then
/// ascending d, minus before plus.
std::vector<SpectrumLevel> all_levels(const ModelParams& p);

/// Absolute degeneracy tolerance used for ground manifolds and phase labels.
double ground_tolerance(double ground_energy);

/// Lowest energy over the whole analytic spectrum.
double ground_energy(const ModelParams& p);

/// Every level within ground_tolerance of the minimum, found by scanning all
/// levels.
std::vector<SpectrumLevel> ground_level(const ModelParams& p);

PhaseInfo phase_classify(const ModelParams& p);

/// Coupling J at which the aligned and antialigned candidates cross, from the
/// affine dependence of delta_e_min on J. p.j is ignored. Empty for n = 1.
std::optional<double> transition_j(const ModelParams& p);

/// The closed-form even-n transition line,
///   J = -omega_a/2 - (gamma/2)(sqrt(1 + x^2) - x),  x = omega0 / (gamma n).
/// Requires even n and gamma > 0.
double even_n_transition_line(const ModelParams& p);

}  // namespace isingcoh
