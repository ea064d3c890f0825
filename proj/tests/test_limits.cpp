#include "doctest.h"
#include "isingcoh/limits.hpp"

#include <cmath>
#include <random>

#include "isingcoh/observables.hpp"
#include "isingcoh/spectrum.hpp"
#include "tolerance.hpp"

using namespace isingcoh;

TEST_CASE("bound examples") {
  const ModelParams single{10, 2, 3, 0, 1};
  for (double t : {0.2, 1.0, 30.0})
    CHECK(upper_bound(single, Temperature(t)) ==
          doctest::Approx(coherence(single, Temperature(t))).epsilon(1e-13));

  const ModelParams p{10, 2, 3, 4, 8};
  CHECK(upper_bound(p, Temperature(0)) == doctest::Approx(24.0 / 26.0));
  CHECK(upper_bound(p, Temperature(1e-4)) == doctest::Approx(24.0 / 26.0));
  const Temperature hot(1e5);
  CHECK(upper_bound(p, hot) == doctest::Approx(upper_bound_high_t(p, hot)).epsilon(1e-6));

  CHECK(lower_bound(p, Temperature(1.0)) == 0.0);
  const ModelParams odd{10, 2, 3, 4, 3};
  CHECK(lower_bound(odd, Temperature(0)) == doctest::Approx(3.0 / std::sqrt(109.0)));
  const double expect = 3.0 / std::sqrt(109.0) * std::tanh(1.0) * std::tanh(0.5 * std::sqrt(109.0));
  CHECK(expect == doctest::Approx(0.2188).epsilon(5e-4));
  CHECK(lower_bound(odd, Temperature(1)) == doctest::Approx(expect).epsilon(1e-15));
  CHECK(std::abs(coherence({10, 2, 3, -1e3, 3}, Temperature(1)) - expect) <= 1e-9);
}

TEST_CASE("bounds are reached at |J| = 1000") {
  for (int n : {2, 3, 8, 9}) {
    for (double t : {0.5, 1.0, 3.0}) {
      const ModelParams up{10, 2, 3, 1e3, n};
      const ModelParams down{10, 2, 3, -1e3, n};
      CHECK(std::abs(coherence(up, Temperature(t)) - upper_bound(up, Temperature(t))) <= 1e-9);
      CHECK(std::abs(coherence(down, Temperature(t)) - lower_bound(down, Temperature(t))) <= 1e-9);
    }
  }
}

TEST_CASE("coherence stays inside the envelope") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p{0.1 + 20 * u(rng), 0.1 + 10 * u(rng), 10 * u(rng), -20 + 40 * u(rng),
                        1 + static_cast<int>(rng() % 30)};
    const Temperature t(0.05 + 100 * u(rng));
    const double c = coherence(p, t);
    // The envelope is attained as |J| grows, so allow the rounding floor.
    const double tol = testing::agreement_tolerance(p, t, 1e-15);
    CHECK(c <= upper_bound(p, t) + tol);
    CHECK(c >= lower_bound(p, t) - tol);
  }
}

TEST_CASE("c0_ground matches the ground manifold in every phase") {
  CHECK(c0_ground({10, 2, 3, 4, 8}) == doctest::Approx(24.0 / 26.0));
  CHECK(c0_ground({20, 12, 3, -10, 8}) == 0.0);
  ModelParams crit{20, 12, 3, 0, 8};
  crit.j = *transition_j(crit);
  CHECK(c0_ground(crit) == doctest::Approx(24.0 / std::sqrt(976.0) / 3.0).epsilon(1e-14));
  CHECK(c0_ground(crit) == doctest::Approx(0.2561).epsilon(4e-4));

  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.1, 25.0);
  for (int i = 0; i < 500; ++i) {
    ModelParams p{u(rng), u(rng), u(rng), 0, 1 + static_cast<int>(rng() % 30)};
    const auto j_pt = transition_j(p);
    for (double offset : {-3.0, -0.01, 0.0, 0.01, 3.0}) {
      p.j = (j_pt ? *j_pt : -1.0) + offset;
      CHECK(c0_ground(p) == doctest::Approx(ground_manifold_coherence(p)).epsilon(1e-13));
    }
  }
}

TEST_CASE("high-temperature estimators") {
  const ModelParams p{10, 2, 3, 8, 8};
  const auto lead = high_t_asymptotic(p, Temperature(10), HighTOrder::Leading);
  CHECK(lead.value * 100 == doctest::Approx(12.0));
  CHECK(lead.order == HighTOrder::Leading);
  CHECK(lead.order_description() != high_t_asymptotic(p, Temperature(10)).order_description());
  CHECK(high_t_asymptotic(p, Temperature(10)).value == doctest::Approx(lead.value * 1.8));
  const ModelParams free_ring{10, 2, 3, 0, 8};
  CHECK(high_t_asymptotic(free_ring, Temperature(10)).value ==
        high_t_asymptotic(free_ring, Temperature(10), HighTOrder::Leading).value);

  const ModelParams fig{10, 2, 3, 250, 8};
  const double ratio = coherence(fig, Temperature(1e4)) / high_t_asymptotic(fig, Temperature(1e4)).value;
  CHECK(ratio >= 0.99);
  CHECK(ratio <= 1.01);
  for (double t = 1e2; t <= 1e4 * 1.0001; t *= std::pow(10.0, 0.25)) {
    const double c = coherence(fig, Temperature(t));
    const double two = high_t_asymptotic(fig, Temperature(t)).value;
    const double one = high_t_asymptotic(fig, Temperature(t), HighTOrder::Leading).value;
    CHECK(std::abs(two - c) < std::abs(one - c));
  }
  CHECK_THROWS_AS(high_t_asymptotic(p, Temperature(0)), std::domain_error);
}

TEST_CASE("strong coupling limit") {
  const ModelParams p{10, 2, 1e6, 4, 6};
  CHECK(std::abs(coherence(p, Temperature(3)) - gamma_infinity_limit(p, Temperature(3))) <= 1e-4);
  CHECK(gamma_infinity_limit(p, Temperature(1e-3)) == doctest::Approx(1.0));
  CHECK(gamma_infinity_limit(p, Temperature(1e9)) < 1e-8);

  double prev = INFINITY;
  for (double g : {10.0, 1e2, 1e3, 1e4}) {
    const ModelParams q{10, 2, g, 4, 6};
    const double err = std::abs(coherence(q, Temperature(3)) - gamma_infinity_limit(q, Temperature(3)));
    CHECK(err < prev);
    prev = err;
  }
}

TEST_CASE("small coupling slope") {
  for (int n : {1, 2, 5, 8, 13}) {
    for (double j : {-3.0, 0.0, 2.0}) {
      for (double t : {0.3, 2.0, 20.0}) {
        const ModelParams p{10, 2, 0, j, n};
        const Temperature temp(t);
        const double slope = small_gamma_slope(p, temp);
        CHECK(slope > 0);
        const double g = 1e-6, h = 1e-7;
        ModelParams hi = p, lo = p;
        hi.gamma = g + h;
        lo.gamma = g - h;
        const double fd = (coherence(hi, temp) - coherence(lo, temp)) / (2 * h);
        CHECK(std::abs(fd / slope - 1.0) <= 1e-5);
      }
    }
  }
  const double b = 1.0 / 2.0;
  CHECK(small_gamma_slope({10, 2, 0, 7, 1}, Temperature(2)) ==
        doctest::Approx(std::tanh(b * 5) * std::tanh(b * 1) / 10).epsilon(1e-14));
}

TEST_CASE("large source gap limit") {
  const ModelParams p{10, 1e3, 3, 4, 7};
  const double lim = omega_a_infinity_limit(p, Temperature(5));
  CHECK(std::abs(coherence(p, Temperature(5)) - lim) <= 1e-6);
  const ModelParams q{10, 2, 3, 4, 8};
  CHECK(omega_a_infinity_limit(q, Temperature(1e-4)) == doctest::Approx(24.0 / 26.0));
  // Truncating the magnetization sums to s = N/2 reproduces the limit exactly.
  const double g = std::hypot(10.0, 21.0);
  const double truncated = 21.0 / g * std::sinh(0.5 * g / 5) / std::cosh(0.5 * g / 5);
  CHECK(lim == doctest::Approx(truncated).epsilon(1e-15));
}
