#include "isingcoh/limits.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "isingcoh/combinatorics.hpp"
#include "isingcoh/logmath.hpp"
#include "isingcoh/spectrum.hpp"

namespace isingcoh {

namespace {

// tanh(beta * x / 2), with the T = 0 value 1 for x > 0.
double half_tanh(Temperature t, double x) {
  if (t.is_zero()) return x > 0.0 ? 1.0 : 0.0;
  return std::tanh(0.5 * t.beta() * x);
}

double beta_of(Temperature t, const char* who) {
  if (t.is_zero()) throw std::domain_error(std::string(who) + " requires T > 0");
  return t.beta();
}

// Coherence of a single effective source: gap `gap_a`, coupling `coupling`.
double single_source(const ModelParams& p, Temperature t, double gap_a, double coupling) {
  const double g = std::hypot(p.omega0, coupling);
  return coupling / g * half_tanh(t, gap_a) * half_tanh(t, g);
}

}  // namespace

double upper_bound(const ModelParams& p, Temperature t) {
  return single_source(p, t, p.n * p.omega_a, p.n * p.gamma);
}

double lower_bound(const ModelParams& p, Temperature t) {
  if (p.n % 2 == 0) return 0.0;
  return single_source(p, t, p.omega_a, p.gamma);
}

double c0_ground(const ModelParams& p) {
  const double aligned = p.n * p.gamma / std::hypot(p.omega0, p.n * p.gamma);
  switch (phase_classify(p).label) {
    case PhaseLabel::Ferromagnetic:
      return aligned;
    case PhaseLabel::Antiferromagnetic:
      return p.n % 2 == 0 ? 0.0 : p.gamma / std::hypot(p.gamma, p.omega0);
    case PhaseLabel::Critical:
      if (p.n % 2 == 0) return aligned / 3.0;
      // Odd n: aligned (degeneracy 1) and s = -1/2 (degeneracy n) levels.
      return (aligned + p.n * p.gamma / std::hypot(p.gamma, p.omega0)) / (1.0 + p.n);
  }
  throw std::logic_error("unreachable phase label");
}

std::string AsymptoticEstimate::order_description() const {
  return order == HighTOrder::Leading ? "leading T^-2" : "leading T^-2 + subleading T^-3";
}

AsymptoticEstimate high_t_asymptotic(const ModelParams& p, Temperature t, HighTOrder order) {
  const double beta = beta_of(t, "high_t_asymptotic");
  double value = 0.25 * p.omega_a * p.gamma * p.n * beta * beta;
  if (order == HighTOrder::LeadingPlusSubleading) value *= 1.0 + p.j * beta;
  return {value, order};
}

double upper_bound_high_t(const ModelParams& p, Temperature t) {
  const double beta = beta_of(t, "upper_bound_high_t");
  return 0.25 * p.omega_a * p.gamma * p.n * p.n * beta * beta;
}

double gamma_infinity_limit(const ModelParams& p, Temperature t) {
  beta_of(t, "gamma_infinity_limit");
  return half_tanh(t, p.n * p.omega_a);
}

double small_gamma_slope(const ModelParams& p, Temperature t) {
  const double beta = beta_of(t, "small_gamma_slope");
  const double beta_j = beta * p.j;
  std::vector<double> numerator;
  std::vector<double> q;
  if (p.n % 2 == 0) {
    q.push_back(log_r_weight(0, p.n, beta_j) - std::log(2.0));
  }
  for (int twos = 2 - p.n % 2; twos <= p.n; twos += 2) {
    const double s = 0.5 * twos;
    const double log_r = log_r_weight(twos, p.n, beta_j);
    numerator.push_back(std::log(s) + log_r + log_sinh(beta * s * p.omega_a));
    q.push_back(log_r + log_cosh(beta * s * p.omega_a));
  }
  return 2.0 / p.omega0 * std::tanh(0.5 * beta * p.omega0) *
         std::exp(log_sum_exp(numerator) - log_sum_exp(q));
}

double omega_a_infinity_limit(const ModelParams& p, Temperature t) {
  beta_of(t, "omega_a_infinity_limit");
  const double coupling = p.n * p.gamma;
  const double g = std::hypot(p.omega0, coupling);
  return coupling / g * half_tanh(t, g);
}

}  // namespace isingcoh
