#include "isingcoh/observables.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "isingcoh/combinatorics.hpp"
#include "isingcoh/logmath.hpp"
#include "isingcoh/spectrum.hpp"

namespace isingcoh {

namespace {

const double kLog2 = std::log(2.0);

double require_beta(Temperature t, const char* who) {
  if (t.is_zero()) throw std::domain_error(std::string(who) + " requires T > 0");
  return t.beta();
}

// Per-magnetization terms of the folded sums, ascending twos, s = 0 first
// for even n. `log_weight` is the log of that magnetization's share of Z;
// `ratio` is its coherence contribution divided by that share,
//   (2 gamma s / g) tanh(beta omega_a s) tanh(beta g / 2),
// which carries no large exponent.
struct FoldedTerms {
  std::vector<double> log_weight;
  std::vector<double> ratio;
};

FoldedTerms folded_terms(const ModelParams& p, double beta) {
  FoldedTerms out;
  const double beta_j = beta * p.j;
  if (p.n % 2 == 0) {
    out.log_weight.push_back(kLog2 + log_r_weight(0, p.n, beta_j) +
                             log_cosh(0.5 * beta * p.omega0));
    out.ratio.push_back(0.0);
  }
  for (int twos = 2 - p.n % 2; twos <= p.n; twos += 2) {
    const double s = 0.5 * twos;
    const double g = branch_gap(twos, p);
    out.log_weight.push_back(2.0 * kLog2 + log_r_weight(twos, p.n, beta_j) +
                             log_cosh(beta * p.omega_a * s) + log_cosh(0.5 * beta * g));
    out.ratio.push_back(2.0 * p.gamma * s / g * std::tanh(beta * p.omega_a * s) *
                        std::tanh(0.5 * beta * g));
  }
  return out;
}

double checked_unit(double c) {
  // Values are mathematically in [0, 1]; allow only rounding-level excursions.
  assert(c >= 0.0 && c <= 1.0 + 1e-12);
  return c;
}

}  // namespace

double Rho0::coherence() const { return 2.0 * std::abs(rho_ge); }

double log_partition(const ModelParams& p, Temperature t) {
  const double beta = require_beta(t, "log_partition");
  return log_sum_exp(folded_terms(p, beta).log_weight);
}

double coherence(const ModelParams& p, Temperature t) {
  if (t.is_zero()) return ground_manifold_coherence(p);
  const FoldedTerms terms = folded_terms(p, t.beta());
  // Weighted average of the ratios, with weights relative to the largest so
  // the dominant magnetization enters with weight exactly 1.
  const double top = *std::max_element(terms.log_weight.begin(), terms.log_weight.end());
  std::vector<double> weights(terms.log_weight.size());
  std::vector<double> weighted(terms.log_weight.size());
  for (std::size_t k = 0; k < weights.size(); ++k) {
    weights[k] = std::exp(terms.log_weight[k] - top);
    weighted[k] = weights[k] * terms.ratio[k];
  }
  return checked_unit(pairwise_sum(weighted) / pairwise_sum(weights));
}

double coherence_full_sum(const ModelParams& p, Temperature t) {
  const double beta = require_beta(t, "coherence_full_sum");
  std::vector<SignedLogReal> numerator;
  std::vector<double> partition;
  const double log_gamma4 = p.gamma > 0.0 ? std::log(4.0 * p.gamma) : kNegInf;
  for (int twos = -p.n; twos <= p.n; twos += 2) {
    const double s = 0.5 * twos;
    const double g = branch_gap(twos, p);
    for (int d = min_domains(twos, p.n); d <= max_domains(twos, p.n); ++d) {
      const double log_omega = std::log(static_cast<double>(degeneracy({twos, d}, p.n)));
      const double centre = p.omega_a * s - 0.5 * p.j * interaction_count(d, p.n);
      const double base = log_omega - beta * centre;
      if (twos != 0) {
        numerator.push_back(SignedLogReal::from_log(
            twos > 0 ? 1 : -1, log_gamma4 + std::log(std::abs(s)) - std::log(g) + base +
                                   log_sinh(0.5 * beta * g)));
      }
      partition.push_back(kLog2 + base + log_cosh(0.5 * beta * g));
    }
  }
  const SignedLogReal num = signed_sum(numerator);
  if (num.is_zero()) return 0.0;
  return checked_unit(std::exp(num.log_magnitude() - log_sum_exp(partition)));
}

double ground_manifold_coherence(const ModelParams& p) {
  std::vector<double> weighted_cross;
  std::vector<double> weights;
  for (const SpectrumLevel& lv : ground_level(p)) {
    const double omega = static_cast<double>(lv.degeneracy);
    const MixingWeights mw = mixing_weights(lv.twos, p);
    const double cross = lv.branch == Branch::Minus ? mw.cross_minus : mw.cross_plus;
    weighted_cross.push_back(omega * 2.0 * cross);
    weights.push_back(omega);
  }
  return checked_unit(std::abs(pairwise_sum(weighted_cross)) / pairwise_sum(weights));
}

Rho0 rho0(const ModelParams& p, Temperature t) {
  const double beta = require_beta(t, "rho0");
  const double e0 = ground_energy(p);
  std::vector<double> excited;  // weight on |e>
  std::vector<double> ground;   // weight on |g>
  std::vector<double> cross;
  for (int twos = -p.n; twos <= p.n; twos += 2) {
    const MixingWeights mw = mixing_weights(twos, p);
    for (int d = min_domains(twos, p.n); d <= max_domains(twos, p.n); ++d) {
      const double omega = static_cast<double>(degeneracy({twos, d}, p.n));
      const EnergyPair e = energy_pair({twos, d}, p);
      const double w_minus = omega * std::exp(-beta * (e.minus - e0));
      const double w_plus = omega * std::exp(-beta * (e.plus - e0));
      // |c1^-|^2 = |c2^+|^2 and |c1^+|^2 = |c2^-|^2
      excited.push_back(mw.p2_plus * w_minus + mw.p2_minus * w_plus);
      ground.push_back(mw.p2_minus * w_minus + mw.p2_plus * w_plus);
      cross.push_back(mw.cross_minus * w_minus + mw.cross_plus * w_plus);
    }
  }
  const double s_e = pairwise_sum(excited);
  const double s_g = pairwise_sum(ground);
  const double z = s_e + s_g;
  return {s_e / z, s_g / z, pairwise_sum(cross) / z};
}

}  // namespace isingcoh
