#include "forestmaps/solver.hpp"

#include <doctest.h>

using namespace fm;

namespace {

// Plain fixed-point iteration: every sweep re-evaluates Phi1(R, S), Phi2(R, S)
// from scratch with full series products.
struct Naive {
  ZSeries R, S, Fprime;
};

ZSeries eval_naive(const Bivariate& f, const ZSeries& R, const ZSeries& S, int n) {
  ZSeries out(n);
  for (const auto& t : f.terms(n)) {
    ZSeries term = ZSeries::monomial(UPoly(t.c), 0, n);
    for (int a = 0; a < t.i; ++a) term = term * R;
    for (int b = 0; b < t.j; ++b) term = term * S;
    out += term;
  }
  return out;
}

Naive naive_solve(int p, int n) {
  TreeSeries ts = build_phi_theta(p, 2 * n);
  ZSeries z = ZSeries::monomial(UPoly(1), 1, n);
  ZSeries R(n), S(n);
  for (int sweep = 0; sweep <= 2 * n + 1; ++sweep) {
    ZSeries r2 = z + UPoly::u() * eval_naive(ts.phi1, R, S, n);
    ZSeries s2 = UPoly::u() * eval_naive(ts.phi2, R, S, n);
    R = r2;
    S = s2;
  }
  return {R, S, eval_naive(ts.theta, R, S, n)};
}

}  // namespace

TEST_SUITE("implicit_solver") {
  TEST_CASE("agrees with a naive sweep solver") {
    for (int p : {3, 4, 5}) {
      auto fast = solve_symbolic(p, 8);
      auto slow = naive_solve(p, 8);
      CHECK_MESSAGE(fast.R == slow.R, "p=" << p);
      CHECK_MESSAGE(fast.S == slow.S, "p=" << p);
      CHECK_MESSAGE(fast.Fprime == slow.Fprime, "p=" << p);
      CHECK(fast.F == integral(slow.Fprime).truncated(8));
    }
  }

  TEST_CASE("cubic coefficients") {
    auto s = solve_symbolic(3, 4);
    CHECK(s.F[1].is_zero());
    CHECK(s.F[2].is_zero());
    CHECK(s.F[3] == UPoly({6, 4}));
    CHECK(s.F[4] == UPoly({140, 234, 144, 32}));
    CHECK(s.S_tilde[1] == UPoly({0, 2}));
  }

  TEST_CASE("quartic coefficients match enumerated maps") {
    auto s = solve_symbolic(4, 4);
    CHECK(s.F[3] == UPoly(2));
    CHECK(s.F[4] == UPoly({20, 9}));
    CHECK(s.H[3] == UPoly(2));
    CHECK(s.H[4] == UPoly({15, 9}));
    auto c = solve_symbolic(3, 4);
    CHECK(c.H[3] == UPoly({4, 4}));
    CHECK(c.H[4] == UPoly({70, 156, 120, 32}));
  }

  TEST_CASE("explicit four-valent F") {
    auto s = solve_symbolic(4, 12);
    CHECK(series_F_explicit_4valent(12) == s.F);
    CHECK(series_F_explicit_4valent(15, Rational(-1, 3)) == solve_fixed(4, 15, Rational(-1, 3)).F);
  }

  TEST_CASE("fixed u agrees with specialising the symbolic run") {
    auto sym = solve_symbolic(3, 10);
    for (Rational u : {Rational(1, 3), Rational(-2), Rational(5, 7)}) {
      auto fx = solve_fixed(3, 10, u);
      for (int n = 0; n <= 10; ++n) {
        CHECK(fx.F[n] == sym.F[n].eval(u));
        CHECK(fx.H[n] == sym.H[n].eval(u));
      }
    }
  }

  TEST_CASE("four-valent H is the integral of 2(R - z)/u") {
    auto s = solve_symbolic(4, 14);
    ZSeries z = ZSeries::monomial(UPoly(1), 1, 14);
    CHECK(s.H == integral(div_u(s.R - z).scaled(2)).truncated(14));
  }

  TEST_CASE("u = 0 gives tree-rooted maps") {
    for (int p : {3, 4, 5, 6}) {
      auto f = solve_fixed(p, 20, Rational(0)).F;
      auto closed = spanning_tree_counts(p, 20);
      for (int n = 0; n <= 20; ++n) CHECK_MESSAGE(f[n] == Rational(closed[n]), "p=" << p << " n=" << n);
    }
    CHECK(spanning_tree_counts(3, 4)[3] == 6);
    CHECK(spanning_tree_counts(3, 4)[4] == 140);
    CHECK(spanning_tree_counts(4, 4)[4] == 20);
  }

  TEST_CASE("mu expansions") {
    auto s = solve_symbolic(3, 12);
    ZSeries z = ZSeries::monomial(UPoly(1), 1, 12);
    ZSeries r = mu_expansion(s.R - z, true);
    ZSeries st = mu_expansion(s.S_tilde, true);
    CHECK(r[2] == UPoly({2, 4}));
    CHECK(r[3] == UPoly({16, 36, 48, 40}));
    CHECK(st[2] == UPoly({10, 16, 4}));
    for (int p : {3, 4}) {
      auto f = mu_expansion(solve_symbolic(p, 12).F, false);
      for (int n = 0; n <= 12; ++n) CHECK(f[n].nonnegative());
    }
    ZSeries d = mu_expansion(phi2_y_at_s_tilde(3, 10), false);
    for (int n = 0; n <= 10; ++n) CHECK(d[n].nonnegative());
  }

  TEST_CASE("order limits") {
    CHECK_THROWS_AS(check_mode(UMode::indeterminate(), 61), std::invalid_argument);
    CHECK_NOTHROW(check_mode(UMode::fixed(Rational(1)), 500));
    CHECK_THROWS_AS(solve_fixed(3, 0, Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(coefficient_tables(3, 61, UMode::indeterminate()), std::invalid_argument);
  }

  TEST_CASE("coefficient tables") {
    auto t = coefficient_tables(3, 4, UMode::indeterminate());
    bool has_g = false;
    for (const auto& c : t) has_g = has_g || c.name == "G";
    CHECK(has_g);
    auto q = coefficient_tables(4, 4, UMode::fixed(Rational(1)));
    CHECK(q.front().name == "F");
    CHECK(q.front().coeffs[4] == UPoly(29));
  }
}
