#include "doctest.h"
#include "isingcoh/logmath.hpp"

#include <cmath>
#include <vector>

using namespace isingcoh;

TEST_CASE("log_sum_exp survives exponents far outside double range") {
  const std::vector<double> big{1000.0, 1000.0};
  CHECK(log_sum_exp(big) == doctest::Approx(1000.0 + std::log(2.0)).epsilon(1e-15));
  const std::vector<double> small{-2000.0, -2000.0 + std::log(3.0)};
  CHECK(log_sum_exp(small) == doctest::Approx(-2000.0 + std::log(4.0)).epsilon(1e-15));
  CHECK(log_sum_exp(std::vector<double>{}) == kNegInf);
  CHECK(log_sum_exp(std::vector<double>{kNegInf, kNegInf}) == kNegInf);
}

TEST_CASE("log_sinh and log_cosh match direct evaluation in range") {
  for (double x : {1e-8, 1e-3, 0.3, 1.0, 7.5, 30.0}) {
    CHECK(log_sinh(x) == doctest::Approx(std::log(std::sinh(x))).epsilon(1e-13));
    CHECK(log_cosh(x) == doctest::Approx(std::log(std::cosh(x))).epsilon(1e-13));
    CHECK(log_cosh(-x) == log_cosh(x));
  }
  CHECK(log_sinh(800.0) == doctest::Approx(800.0 - std::log(2.0)));
  CHECK(log_cosh(800.0) == doctest::Approx(800.0 - std::log(2.0)));
  CHECK(log_sinh(0.0) == kNegInf);
  CHECK(log_cosh(0.0) == 0.0);
}

TEST_CASE("signed sums keep the sign of cancelling terms") {
  const std::vector<SignedLogReal> terms{SignedLogReal::from_value(5.0),
                                         SignedLogReal::from_value(-7.0),
                                         SignedLogReal::from_value(1.5)};
  const SignedLogReal s = signed_sum(terms);
  CHECK(s.sign() == -1);
  CHECK(s.value() == doctest::Approx(-0.5));

  const std::vector<SignedLogReal> cancel{SignedLogReal::from_value(2.0),
                                          SignedLogReal::from_value(-2.0)};
  CHECK(signed_sum(cancel).is_zero());

  const auto huge = SignedLogReal::from_log(-1, 900.0);
  const auto prod = huge * SignedLogReal::from_log(-1, -899.0);
  CHECK(prod.sign() == 1);
  CHECK(prod.value() == doctest::Approx(std::exp(1.0)));
  CHECK((huge / huge).value() == doctest::Approx(1.0));
  CHECK(SignedLogReal::from_value(0.0).is_zero());
}

TEST_CASE("pairwise_sum is order-fixed and exact on small integers") {
  std::vector<double> xs(1000);
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<double>(i);
  CHECK(pairwise_sum(xs) == 499500.0);
}
