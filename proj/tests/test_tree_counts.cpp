#include "forestmaps/tree_counts.hpp"

#include <doctest.h>

using namespace fm;

namespace {

Rational fact_ratio(long top, std::initializer_list<long> bottom) {
  for (long b : bottom)
    if (b < 0) return 0;
  Integer den = 1;
  for (long b : bottom) den *= factorial(static_cast<unsigned>(b));
  Rational r(factorial(static_cast<unsigned>(top)), den);
  r.canonicalize();
  return r;
}

// Planted p-ary trees by leaves: T = x + T^(p-1). [x^(k-1)] T counts leaf-rooted
// trees with k leaves.
std::vector<Integer> planted(int p, int n) {
  std::vector<Integer> t(n + 1, Integer(0));
  for (int m = 1; m <= n; ++m) {
    // [x^m] T^(p-1) from the already known lower coefficients
    std::vector<Integer> pw(m + 1, Integer(0));
    pw[0] = 1;
    for (int f = 0; f < p - 1; ++f) {
      std::vector<Integer> next(m + 1, Integer(0));
      for (int a = 0; a <= m; ++a)
        for (int b = 1; a + b <= m && b < m; ++b) next[a + b] += pw[a] * t[b];
      pw = next;
    }
    t[m] = pw[m] + (m == 1 ? 1 : 0);
  }
  return t;
}

}  // namespace

TEST_SUITE("tree_counts") {
  TEST_CASE("small leaf-rooted counts") {
    CHECK(tree_count(3, 3, Rooting::leaf) == 1);
    CHECK(tree_count(3, 4, Rooting::leaf) == 2);
    CHECK(tree_count(4, 3, Rooting::leaf) == 0);
  }

  TEST_CASE("leaf-rooted counts against the planted-tree recursion") {
    for (int p : {3, 4, 5, 6}) {
      auto t = planted(p, 25);
      for (int k = 3; k <= 26; ++k) CHECK_MESSAGE(tree_count(p, k, Rooting::leaf) == t[k - 1], "p=" << p << " k=" << k);
    }
  }

  TEST_CASE("four-valent theta and Phi closed forms") {
    TreeSeries ts = build_phi_theta(4, 30);
    for (int i = 0; i <= 15; ++i) {
      Rational th = i >= 2 ? 4 * fact_ratio(3 * i - 3, {i - 2, i, i}) : Rational(0);
      Rational ph = i >= 2 ? fact_ratio(3 * i - 3, {i - 1, i - 1, i}) : Rational(0);
      CHECK(ts.theta_x[i] == th);
      CHECK(ts.phi_x[i] == ph);
    }
    for (const auto& t : ts.phi2.terms(30)) CHECK(t.j > 0);
  }

  TEST_CASE("cubic bivariate series closed forms") {
    const int order = 14;
    TreeSeries ts = build_phi_theta(3, order);
    for (int i = 0; 2 * i <= order; ++i)
      for (int j = 0; 2 * i + j <= order; ++j) {
        int g = 2 * i + j;
        Rational th = g >= 3 ? 3 * fact_ratio(4 * i + 2 * j - 4, {g - 3, i, i, j}) : Rational(0);
        Rational p1 = (i >= 1 && g >= 3) ? fact_ratio(4 * i + 2 * j - 4, {g - 2, i - 1, i, j}) : Rational(0);
        Rational p2 = g >= 2 ? fact_ratio(4 * i + 2 * j - 2, {g - 1, i, i, j}) : Rational(0);
        CHECK_MESSAGE(ts.theta.at(i, j) == th, "theta " << i << "," << j);
        CHECK_MESSAGE(ts.phi1.at(i, j) == p1, "phi1 " << i << "," << j);
        CHECK_MESSAGE(ts.phi2.at(i, j) == p2, "phi2 " << i << "," << j);
      }
  }

  TEST_CASE("Psi and Lambda closed forms") {
    PsiSeries ps = build_psi(12);
    auto lam = lambda_4valent(12);
    for (int i = 1; i <= 12; ++i) {
      CHECK(ps.psi1[i] == fact_ratio(4 * i - 4, {2 * i - 2, i, i - 1}));
      CHECK(ps.psi2[i] == fact_ratio(4 * i - 2, {2 * i - 1, i, i}));
      CHECK(lam[i] == (i >= 3 ? fact_ratio(3 * i - 6, {i - 3, i - 2, i}) : Rational(0)));
    }
    CHECK(ps.psi1[0] == 0);
    CHECK(ps.psi2[0] == 0);
  }

  TEST_CASE("truncation keeps 2i + j within the order") {
    TreeSeries ts = build_phi_theta(3, 5);
    CHECK(ts.theta.in_range(1, 3));
    CHECK_FALSE(ts.theta.in_range(2, 2));
    CHECK(ts.theta.at(2, 2) == 0);
    CHECK_THROWS(build_phi_theta(2, 4));
  }
}
