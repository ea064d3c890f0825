#include "doctest.h"
#include "isingcoh/observables.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "isingcoh/oracle.hpp"
#include "isingcoh/spectrum.hpp"
#include "tolerance.hpp"

using namespace isingcoh;

namespace {

struct Draw {
  ModelParams p;
  Temperature t;
};

Draw random_draw(std::mt19937_64& rng, int max_n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto log_u = [&](double lo, double hi) { return lo * std::pow(hi / lo, u(rng)); };
  const ModelParams p{log_u(0.1, 30), log_u(0.1, 30), log_u(0.01, 30), -10 + 20 * u(rng),
                      1 + static_cast<int>(rng() % static_cast<unsigned>(max_n))};
  return {p, Temperature(log_u(0.05, 200))};
}

double first_gap(const ModelParams& p) {
  const double e0 = ground_energy(p);
  double gap = INFINITY;
  for (const SpectrumLevel& l : all_levels(p)) {
    if (l.energy - e0 > ground_tolerance(e0)) gap = std::min(gap, l.energy - e0);
  }
  return gap;
}

}  // namespace

TEST_CASE("decoupled partition function") {
  const ModelParams p{10, 2, 0, 0, 5};
  for (double t : {0.3, 1.0, 7.0}) {
    const double b = 1.0 / t;
    const double expect = std::log(2 * std::cosh(b * 5.0)) + 5 * std::log(2 * std::cosh(b * 1.0));
    CHECK(log_partition(p, Temperature(t)) == doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("infinite temperature limits") {
  const ModelParams p{10, 2, 3, -4, 7};
  const Temperature hot(1e12);
  CHECK(log_partition(p, hot) == doctest::Approx(8 * std::log(2.0)).epsilon(1e-10));
  const Rho0 r = rho0(p, hot);
  CHECK(r.rho_e == doctest::Approx(0.5));
  CHECK(r.rho_g == doctest::Approx(0.5));
  CHECK(std::abs(r.rho_ge) < 1e-9);
  CHECK(coherence(p, hot) < 1e-9);
}

TEST_CASE("zero coupling gives zero coherence and a free Gibbs state") {
  for (double t : {0.0, 0.01, 1.0, 100.0}) CHECK(coherence({10, 2, 0, 4, 8}, Temperature(t)) == 0.0);
  const double t = 4.0, b = 1 / t;
  const Rho0 r = rho0({10, 2, 0, -3, 6}, Temperature(t));
  CHECK(r.rho_ge == 0.0);
  CHECK(r.rho_g == doctest::Approx(std::exp(b * 5) / (2 * std::cosh(b * 5))).epsilon(1e-14));
}

TEST_CASE("ferromagnetic ground-state coherence") {
  const ModelParams p{10, 2, 3, 4, 8};
  CHECK(coherence(p, Temperature(1e-3)) == doctest::Approx(24.0 / 26.0).epsilon(1e-12));
  CHECK(coherence(p, Temperature(0.0)) == doctest::Approx(24.0 / 26.0).epsilon(1e-15));
  CHECK(ground_manifold_coherence(p) == doctest::Approx(24.0 / 26.0).epsilon(1e-15));
}

TEST_CASE("ground manifolds: antiferromagnetic and critical") {
  CHECK(ground_manifold_coherence({20, 12, 3, -10, 8}) == 0.0);
  ModelParams crit{20, 12, 3, 0, 8};
  crit.j = *transition_j(crit);
  CHECK(ground_manifold_coherence(crit) ==
        doctest::Approx(24.0 / std::sqrt(976.0) / 3.0).epsilon(1e-14));
}

TEST_CASE("small ring against the microstate sum") {
  const ModelParams p{10, 2, 3, -1, 3};
  CHECK(std::abs(coherence(p, Temperature(2)) - oracle::enum_coherence(p, Temperature(2))) <= 1e-12);
}

TEST_CASE("folded and full signed sums agree") {
  std::mt19937_64 rng(5);
  int at_floor = 0;
  for (int i = 0; i < 2000; ++i) {
    const Draw d = random_draw(rng, 40);
    const double tol = testing::agreement_tolerance(d.p, d.t);
    at_floor += tol == 1e-13;
    CHECK(std::abs(coherence(d.p, d.t) - coherence_full_sum(d.p, d.t)) <= tol);
  }
  CHECK(at_floor > 200);  // the 1e-13 regime is actually exercised
}

TEST_CASE("rho0 is a normalized PSD state consistent with coherence") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 2000; ++i) {
    const Draw d = random_draw(rng, 64);
    const Rho0 r = rho0(d.p, d.t);
    CHECK(std::abs(r.rho_e + r.rho_g - 1.0) <= 1e-15);
    CHECK(r.rho_e >= 0.0);
    CHECK(r.rho_g >= 0.0);
    CHECK(r.rho_e * r.rho_g - r.rho_ge * r.rho_ge >= -1e-15);
    CHECK(std::abs(r.coherence() - coherence(d.p, d.t)) <= testing::agreement_tolerance(d.p, d.t));
    const double c = coherence(d.p, d.t);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
  }
}

TEST_CASE("extreme exponents stay finite") {
  for (double j : {-1e3, 1e3}) {
    const double c = coherence({10, 2, 3, j, 64}, Temperature(0.01));
    CHECK(std::isfinite(c));
    CHECK(std::isfinite(log_partition({10, 2, 3, j, 64}, Temperature(0.01))));
  }
}

TEST_CASE("low temperature approaches the ground manifold") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const ModelParams p = random_draw(rng, 16).p;
    const Temperature t(1e-3 * first_gap(p));
    CHECK(std::abs(coherence(p, t) - ground_manifold_coherence(p)) <= 1e-6);
  }
}

TEST_CASE("high temperature: T^2 C approaches omega_a gamma N / 4") {
  const ModelParams p{10, 2, 3, 4, 8};
  const double target = 2.0 * 3.0 * 8 / 4;
  double prev = INFINITY;
  for (double t : {1e3, 1e4, 1e5, 1e6}) {
    const double err = std::abs(t * t * coherence(p, Temperature(t)) - target);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev / target < 1e-4);
}

TEST_CASE("a single source does not feel J") {
  for (double t : {0.1, 1.0, 10.0}) {
    const double ref = coherence({10, 2, 3, 0, 1}, Temperature(t));
    for (double j : {-50.0, -1.0, 3.0, 80.0})
      CHECK(coherence({10, 2, 3, j, 1}, Temperature(t)) == doctest::Approx(ref).epsilon(1e-14));
  }
}

TEST_CASE("T = 0 is rejected where a Boltzmann sum is required") {
  CHECK_THROWS_AS(log_partition({10, 2, 3, 4, 8}, Temperature(0)), std::domain_error);
  CHECK_THROWS_AS(rho0({10, 2, 3, 4, 8}, Temperature(0)), std::domain_error);
  CHECK_THROWS_AS(coherence_full_sum({10, 2, 3, 4, 8}, Temperature(0)), std::domain_error);
}
