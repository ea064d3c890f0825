#pragma once
// Rounding floor shared by every log-domain evaluation of C.
//
// Each Boltzmann exponent is formed from products like beta * J * (n - 4d),
// so two algebraically equal evaluation orders can differ by a few ulps of
// the largest exponent kappa = beta (|J| n + omega_a n + g_max). Below
// kappa ~ 100 that floor is under 1e-13; above it the agreement is pinned to
// 4 eps kappa.
#include <algorithm>
#include <cmath>
#include <limits>

#include "isingcoh/model.hpp"

namespace isingcoh::testing {

inline double exponent_scale(const ModelParams& p, Temperature t) {
  const double g_max = std::hypot(p.omega0, p.gamma * p.n);
  return t.beta() * (std::abs(p.j) * p.n + p.omega_a * p.n + g_max);
}

inline double agreement_tolerance(const ModelParams& p, Temperature t, double floor = 1e-13) {
  return std::max(floor, 4.0 * std::numeric_limits<double>::epsilon() * exponent_scale(p, t));
}

}  // namespace isingcoh::testing
