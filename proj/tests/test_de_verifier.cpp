#include "forestmaps/de_verifier.hpp"

#include <doctest.h>

using namespace fm;

TEST_SUITE("de_verifier") {
  TEST_CASE("every identity vanishes") {
    for (Identity id : all_identities()) {
      auto r = check_identity(id, 20);
      CHECK_MESSAGE(r.is_zero, name_of(id));
      CHECK(r.first_nonzero == -1);
      CHECK(r.tested_order >= 18);
    }
  }

  TEST_CASE("perturbed inputs are caught") {
    for (Identity id : all_identities()) {
      auto r = check_identity(id, 16, Perturbation{3, Rational(1, 7)});
      CHECK_MESSAGE(!r.is_zero, name_of(id));
    }
    auto r = check_identity(Identity::phi_second, 12, Perturbation{3, 1});
    CHECK(r.first_nonzero == 2);
  }

  TEST_CASE("the opposite sign on S' does not vanish") {
    const int n = 10;
    auto sol = solve_symbolic(3, n);
    UPoly u = UPoly::u(), u1 = UPoly::u() + UPoly(1);
    ZSeries z = ZSeries::monomial(UPoly(1), 1, n), one = ZSeries::monomial(UPoly(1), 0, n);
    ZSeries R = sol.R, S = sol.S, RS = R * S;
    ZSeries D = (z * z).scaled(36) + (z.scaled(24) - one + (u * Rational(24)) * z) * R + (u1 * RS).scaled(4) -
                (u1 * u1 * RS * S).scaled(4) + (u1 * u1 * R * R).scaled(4);
    ZSeries inner = z.scaled(3) + (u - UPoly(3)) * R - (z * S).scaled(12) + (u1 * RS).scaled(4);
    ZSeries lhs = D * derivative(S);
    CHECK(is_zero_through(lhs - inner.scaled(-2), n - 1));
    ZSeries wrong = lhs - inner.scaled(2);
    CHECK_FALSE(is_zero_through(wrong, n - 1));
    CHECK(wrong[1] == UPoly({0, -4}));
  }

  TEST_CASE("DE tables") {
    CHECK(de_terms(DeName::fprime_4valent).size() == 66);
    CHECK(de_terms(DeName::h_4valent).size() == 14);
    CHECK(de_terms(DeName::w_cubic).size() == 24);
    for (DeName d : all_des()) CHECK(differential_order(de_terms(d)) == 2);
    CHECK(degree(de_terms(DeName::fprime_4valent)) == 7);
    CHECK(degree(de_terms(DeName::h_4valent)) == 3);
    CHECK(degree(de_terms(DeName::w_cubic)) == 5);
  }

  TEST_CASE("DEs vanish on the solver output") {
    for (DeName d : all_des()) {
      auto r = check_de(d, 14);
      CHECK_MESSAGE(r.is_zero, name_of(d));
      CHECK(r.tested_order == 12);
      auto f = check_de(d, 24, UMode::fixed(Rational(1, 3)));
      CHECK_MESSAGE(f.is_zero, name_of(d));
      CHECK(f.u_mode == "1/3");
    }
  }

  TEST_CASE("DE perturbations are caught") {
    for (DeName d : all_des()) {
      auto r = check_de(d, 12, UMode::indeterminate(), Perturbation{5, 1});
      CHECK_MESSAGE(!r.is_zero, name_of(d));
    }
  }

  TEST_CASE("hand-made DE") {
    // exp(z) solves y' = y
    auto t = parse_de_terms(R"([{"coeff":"1","z_pow":0,"u_pow":0,"derivs":[1]},
                               {"coeff":"-1","z_pow":0,"u_pow":0,"derivs":[0]}])");
    CHECK(differential_order(t) == 1);
    QSeries e(8);
    Rational f = 1;
    for (int k = 0; k <= 8; ++k) {
      e[k] = Rational(1) / f;
      f *= Rational(k + 1);
    }
    CHECK(is_zero_through(de_residual(t, e, Rational(0)), 7));
    CHECK_THROWS_AS(de_residual(t, QSeries(0), Rational(0)), std::invalid_argument);
  }

  TEST_CASE("bad input") {
    CHECK_THROWS_AS(check_identity(Identity::pp1, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_de(DeName::h_4valent, 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_identity("no_such_identity"), std::invalid_argument);
    CHECK_THROWS_AS(parse_de("no_such_de"), std::invalid_argument);
    CHECK_THROWS(parse_de_terms("{}"));
    CHECK(parse_de(name_of(DeName::w_cubic)) == DeName::w_cubic);
    CHECK(parse_de("w_cubic") == DeName::w_cubic);
    for (Identity id : all_identities()) CHECK(parse_identity(name_of(id)) == id);
  }
}
