#include "forestmaps/random_model.hpp"

#include <doctest.h>

using namespace fm;

namespace {

const Precision kPrec{50, 1e-20};

void near(const Real& a, const char* expected, const char* tol, const char* what) {
  Real gap = abs(a - Real(expected));
  CHECK_MESSAGE(gap <= Real(tol), what << ": got " << sci(a, 30) << " gap " << sci(gap, 3));
}

}  // namespace

TEST_SUITE("random_model") {
  TEST_CASE("limits at u = 1 and at the boundary") {
    PrecisionScope scope(kPrec);
    near(kappa(Real(1), kPrec), "0.5640411277927382339397142617484062474276", "1e-25", "kappa(1)");
    near(component_slope(Real(1), kPrec), "0.2820205638963691169698571308742031237138", "1e-25", "slope(1)");
    near(kappa(Real(0), kPrec), "0.2404900146990321114004846212041812431441", "1e-25", "kappa(0)");
    CHECK(abs(kappa(Real(-1), kPrec)) < Real("1e-40"));
    auto law = s_limit_law(Real(1), 3, kPrec);
    near(law.probs[0], "0.1396726898246548148250028729420104424493", "1e-25", "law k=1");
    CHECK(law.partial_sum < 1);
  }

  TEST_CASE("domains") {
    CHECK_THROWS_AS(component_slope(Real(0), kPrec), std::domain_error);
    CHECK_THROWS_AS(kappa(Real(-2), kPrec), std::domain_error);
    CHECK_THROWS_AS(s_limit_law(Real(-1) / 2, 3, kPrec), std::domain_error);
    CHECK_THROWS_AS(s_limit_law(Real(1), 0, kPrec), std::invalid_argument);
    CHECK_THROWS_AS(s_finite_law(Rational(1), 1, 3, kPrec), std::invalid_argument);
    CHECK_THROWS_AS(activity_component_identity(Rational(0), 10), std::domain_error);
  }

  TEST_CASE("activity and component counts agree exactly") {
    CHECK(activity_component_identity(Rational(1), 40) == 0);
    CHECK(activity_component_identity(Rational(1, 2), 40) == 0);
    CHECK(activity_component_identity(Rational(3), 25) == 0);
  }

  TEST_CASE("two derivative routes agree") {
    for (int n : {20, 60}) {
      auto a = internal_activity_per_n(Rational(1), n, kPrec);
      PrecisionScope scope(kPrec);
      CHECK(abs(a.by_dual - a.by_composition) < Real("1e-30"));
    }
  }

  TEST_CASE("component slope increases with u") {
    PrecisionScope scope(kPrec);
    Real prev = 0;
    for (const char* u : {"0.25", "0.5", "1", "2"}) {
      Real s = component_slope(Real(u), kPrec);
      CHECK(s > prev);
      prev = s;
    }
  }

  TEST_CASE("finite laws are probabilities") {
    auto f = s_finite_law(Rational(1), 60, 5, kPrec);
    PrecisionScope scope(kPrec);
    Real total = 0;
    for (const auto& q : f) {
      CHECK(q >= 0);
      total += q;
    }
    CHECK(total <= 1);
  }
}
