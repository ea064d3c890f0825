#pragma once

// Thermal observables of the target two-level system: partition function,
// reduced density matrix and the local coherence C = |rho_ge + rho_eg|.
//
// Every Boltzmann sum is evaluated in the log domain (or with the ground
// energy subtracted), so beta * E may span thousands without overflow.
// Reductions run over ascending twos, then ascending d, with pairwise sums.

#include "isingcoh/model.hpp"

namespace isingcoh {

/// Target-TLS reduced density matrix in the {|e>, |g>} basis. The
/// off-diagonal element is real.
struct Rho0 {
  double rho_e;
  double rho_g;
  double rho_ge;

  double coherence() const;
};

/// log Z from the positive-magnetization form: R-weighted cosh products over
/// s > 0 plus the s = 0 term for even n.
double log_partition(const ModelParams& p, Temperature t);

/// Local coherence C in [0, 1]. T = 0 dispatches to
/// ground_manifold_coherence.
double coherence(const ModelParams& p, Temperature t);

/// Same quantity from the signed sum over every magnetization (negative s
/// included), without folding s and -s together. Requires T > 0.
double coherence_full_sum(const ModelParams& p, Temperature t);

/// Zero-temperature coherence: the degeneracy-weighted average of the minus
/// branch cross term over the (possibly degenerate) ground manifold.
double ground_manifold_coherence(const ModelParams& p);

/// Reduced density matrix from the degeneracy-weighted level sums. Requires
/// T > 0.
Rho0 rho0(const ModelParams& p, Temperature t);

}  // namespace isingcoh
