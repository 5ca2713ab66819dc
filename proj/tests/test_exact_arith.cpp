#include "forestmaps/series.hpp"
#include "forestmaps/solver.hpp"
#include "forestmaps/tree_counts.hpp"

#include <doctest.h>

#include <random>

using namespace fm;

namespace {

ZSeries from_polys(std::vector<UPoly> c) { return ZSeries(std::move(c)); }

ZSeries random_series(std::mt19937& g, int order) {
  std::uniform_int_distribution<long> d(-4, 4);
  ZSeries s(order);
  for (int i = 0; i <= order; ++i) s[i] = UPoly({d(g), d(g), d(g)});
  return s;
}

}  // namespace

TEST_SUITE("exact_arith") {
  TEST_CASE("rationals stay canonical") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK(parse_rational("-0.05") == Rational(-1, 20));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
  }

  TEST_CASE("polynomials trim and print") {
    UPoly p({1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(UPoly().degree() == -1);
    CHECK(UPoly(0).is_zero());
    CHECK(p.pretty() == "1+2u");
    CHECK((p * p).pretty() == "1+4u+4u^2");
    CHECK(UPoly({0, 3, 6}).div_u() == UPoly({3, 6}));
    CHECK_THROWS_AS(UPoly({1, 3}).div_u(), std::domain_error);
    CHECK(UPoly({1, 1}).shift(-1) == UPoly::u());
  }

  TEST_CASE("series products and truncation") {
    ZSeries z = ZSeries::monomial(UPoly(1), 1, 5);
    CHECK(z * z == ZSeries::monomial(UPoly(1), 2, 5));
    ZSeries a = from_polys({1, 1, 0, 0}), b = from_polys({1, -1, 0, 0});
    CHECK(a * b == from_polys({1, 0, -1, 0}));
    ZSeries short_one = from_polys({1, 1});
    CHECK((a * short_one).order() == 1);
    CHECK((a + short_one).order() == 1);
    CHECK_THROWS_AS(short_one[2], std::out_of_range);
    CHECK_THROWS_AS(short_one.truncated(3), std::out_of_range);
  }

  TEST_CASE("composition") {
    ZSeries inner = from_polys({0, 1, 1, 0, 0});
    ZSeries sq = compose(std::vector<UPoly>{0, 0, 1}, inner);
    CHECK(sq == from_polys({0, 0, 1, 2, 1}));
    ZSeries id = compose(std::vector<UPoly>{0, 1, 0, 0, 0}, inner);
    CHECK(id == inner);
    CHECK_THROWS_AS(compose(std::vector<UPoly>{0, 1}, from_polys({1, 1})), std::invalid_argument);
  }

  TEST_CASE("four-valent Phi composed with R") {
    TreeSeries ts = build_phi_theta(4, 8);
    ImplicitSystem<UPoly> sys(ts, 3, UPoly::u());
    ZSeries phi_r = compose(std::vector<Rational>(ts.phi_x.begin(), ts.phi_x.begin() + 4), sys.R());
    CHECK(phi_r[2] == UPoly(3));
    CHECK(phi_r[3] == UPoly({30, 18}));
    // Phi truncated at x^4, squared
    QSeries phi(std::vector<Rational>(ts.phi_x.begin(), ts.phi_x.begin() + 5));
    CHECK((phi * phi)[4] == 9);
  }

  TEST_CASE("calculus") {
    QSeries z3 = QSeries::monomial(Rational(1), 3, 5);
    CHECK(derivative(z3) == QSeries::monomial(Rational(3), 2, 4));
    CHECK(integral(QSeries::monomial(Rational(6), 2, 4)) == QSeries::monomial(Rational(2), 3, 5));
    TreeSeries ts = build_phi_theta(4, 8);
    QSeries theta(std::vector<Rational>(ts.theta_x.begin(), ts.theta_x.begin() + 5));
    CHECK(theta[2] == 6);
    CHECK(integral(theta)[3] == 2);
    std::mt19937 g(7);
    ZSeries s = random_series(g, 6);
    CHECK(derivative(integral(s)) == s);
  }

  TEST_CASE("ring axioms on random series") {
    std::mt19937 g(20240611);
    for (int trial = 0; trial < 20; ++trial) {
      ZSeries a = random_series(g, 6), b = random_series(g, 6), c = random_series(g, 6);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).valuation() == 7);
    }
  }

  TEST_CASE("composition is associative on cubic-size instances") {
    std::mt19937 g(99);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> f(4), gc(4);
      for (int i = 0; i < 4; ++i) {
        f[i] = d(g);
        gc[i] = i == 0 ? 0 : d(g);
      }
      ZSeries h(3);
      for (int i = 1; i <= 3; ++i) h[i] = UPoly({d(g), d(g)});
      QSeries gs(gc);
      QSeries fg = compose(f, gs);
      ZSeries lhs = compose(f, compose(gc, h));
      ZSeries rhs = compose(fg.coeffs(), h);
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("specialising u commutes with the solver") {
    for (int p : {3, 4})
      for (Rational u : {Rational(2, 3), Rational(-1, 2), Rational(5)}) {
        auto sym = solve_symbolic(p, 12);
        auto fix = solve_fixed(p, 12, u);
        CHECK(specialize(sym.F, u) == fix.F);
        CHECK(specialize(sym.R, u) == fix.R);
        CHECK(specialize(sym.S, u) == fix.S);
        CHECK(specialize(sym.S_tilde, u) == fix.S_tilde);
        CHECK(specialize(sym.H, u) == fix.H);
        CHECK(specialize(sym.G, u) == fix.G);
      }
  }

  TEST_CASE("u to mu rewrite") {
    ZSeries s = from_polys({0, UPoly({1, 1}), UPoly({0, 2})});
    ZSeries m = to_mu(s);
    CHECK(m[1] == UPoly::u());
    CHECK(m[2] == UPoly({-2, 2}));
    CHECK_THROWS_AS(div_u(from_polys({UPoly({1})})), std::domain_error);
  }
}
