#pragma once

// Closed-form bounds, asymptotes and limiting regimes of the coherence.
//
// The high-temperature estimators come in two flavours that must not be
// confused: high_t_asymptotic takes T -> infinity at fixed J, while
// upper_bound_high_t takes J -> infinity first. The two orders disagree.

#include <string>

#include "isingcoh/model.hpp"

namespace isingcoh {

/// J -> +infinity envelope: a single effective source of gap n*omega_a and
/// coupling n*gamma. At T = 0 returns the tanh -> 1 value.
double upper_bound(const ModelParams& p, Temperature t);

/// J -> -infinity envelope: zero for even n, a single unpaired source for odd
/// n. At T = 0 returns the tanh -> 1 value.
double lower_bound(const ModelParams& p, Temperature t);

/// Zero-temperature coherence from the per-phase closed forms.
double c0_ground(const ModelParams& p);

enum class HighTOrder { Leading, LeadingPlusSubleading };

struct AsymptoticEstimate {
  double value;
  HighTOrder order;

  std::string order_description() const;
};

/// omega_a gamma n / (4 T^2) [ (1 + J/T) ]. Requires T > 0.
AsymptoticEstimate high_t_asymptotic(const ModelParams& p, Temperature t,
                                     HighTOrder order = HighTOrder::LeadingPlusSubleading);

/// Large-T expansion of upper_bound: omega_a gamma n^2 / (4 T^2).
double upper_bound_high_t(const ModelParams& p, Temperature t);

/// gamma -> infinity limit, tanh(beta n omega_a / 2).
double gamma_infinity_limit(const ModelParams& p, Temperature t);

/// Coefficient of gamma in the small-gamma expansion of C. p.gamma is ignored.
double small_gamma_slope(const ModelParams& p, Temperature t);

/// omega_a -> infinity limit: only the fully polarized s = n/2 terms survive.
double omega_a_infinity_limit(const ModelParams& p, Temperature t);

}  // namespace isingcoh
