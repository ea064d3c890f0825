#include "doctest.h"
#include "isingcoh/model.hpp"

#include <cmath>
#include <limits>

using namespace isingcoh;

namespace {

ModelErrorKind kind_of(const ModelParams& p, int cap = kMaxSources) {
  try {
    validate(p, cap);
  } catch (const ModelError& e) {
    return e.kind();
  }
  FAIL("expected a ModelError for " << describe(p));
  return ModelErrorKind::NonFinite;
}

}  // namespace

TEST_CASE("validate accepts the reference parameter sets") {
  const ModelParams ferro{10, 2, 3, 4, 8};
  CHECK(validate(ferro) == ferro);
  const ModelParams single{10, 2, 3, 0, 1};
  CHECK(validate(single) == single);
  const ModelParams decoupled{10, 2, 0, -3, 5};
  CHECK(validate(decoupled) == decoupled);
  const ModelParams biggest{10, 2, 3, 1, kMaxSources};
  CHECK(validate(biggest) == biggest);
}

TEST_CASE("validate rejects each invariant violation with its kind") {
  CHECK(kind_of({0, 2, 3, 4, 8}) == ModelErrorKind::NonPositiveGap);
  CHECK(kind_of({10, -1, 3, 4, 8}) == ModelErrorKind::NonPositiveGap);
  CHECK(kind_of({10, 2, -0.5, 4, 8}) == ModelErrorKind::NegativeCoupling);
  CHECK(kind_of({10, 2, 3, 4, 0}) == ModelErrorKind::NZero);
  CHECK(kind_of({10, 2, 3, 4, -2}) == ModelErrorKind::NZero);
  CHECK(kind_of({10, 2, 3, 4, kMaxSources + 1}) == ModelErrorKind::NTooLarge);
  CHECK(kind_of({10, 2, 3, 4, 12}, 8) == ModelErrorKind::NTooLarge);
  CHECK(kind_of({10, 2, 3, std::nan(""), 4}) == ModelErrorKind::NonFinite);
  CHECK(kind_of({std::numeric_limits<double>::infinity(), 2, 3, 1, 4}) ==
        ModelErrorKind::NonFinite);
}

TEST_CASE("validate is idempotent") {
  for (const ModelParams& p : {ModelParams{10, 2, 3, 4, 8}, ModelParams{0.1, 50, 0, -7, 3},
                               ModelParams{1e-3, 1e3, 1e3, 1e3, 64}}) {
    CHECK(validate(validate(p)) == validate(p));
  }
}

TEST_CASE("temperature") {
  CHECK(Temperature(0.0).is_zero());
  CHECK_THROWS_AS(Temperature(0.0).beta(), std::domain_error);
  CHECK(Temperature(4.0).beta() == doctest::Approx(0.25));
  CHECK_THROWS_AS(Temperature(-1.0), ModelError);
  CHECK_THROWS_AS(Temperature(std::nan("")), ModelError);
  CHECK_THROWS_AS(Temperature(std::numeric_limits<double>::infinity()), ModelError);
}
