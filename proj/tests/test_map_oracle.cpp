#include "forestmaps/errors.hpp"
#include "forestmaps/map_oracle.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace fm;

namespace {

CombMap edge_map() { return {{0, 1}, {1, 0}, 0}; }
CombMap loop_map() { return {{1, 0}, {1, 0}, 0}; }
CombMap theta_map() { return {{1, 2, 0, 4, 5, 3}, {3, 5, 4, 0, 2, 1}, 0}; }

BiPoly bi(std::initializer_list<std::pair<std::pair<int, int>, long>> t) {
  BiPoly p;
  for (const auto& [k, v] : t) p[k] = v;
  return p;
}

Integer at_one(const BiPoly& p) {
  Integer s = 0;
  for (const auto& [k, v] : p) s += v;
  return s;
}

}  // namespace

TEST_SUITE("map_oracle") {
  TEST_CASE("hand-built maps") {
    auto e = edge_map(), l = loop_map(), t = theta_map();
    for (const auto* m : {&e, &l, &t}) {
      CHECK_NOTHROW(m->validate());
      CHECK(m->genus() == 0);
    }
    CHECK(e.n_vertices() == 2);
    CHECK(e.n_faces() == 1);
    CHECK(l.n_vertices() == 1);
    CHECK(l.n_faces() == 2);
    CHECK(t.n_vertices() == 2);
    CHECK(t.n_faces() == 3);

    CHECK(forest_poly(e) == UPoly({1, 1}));
    CHECK(forest_poly(l) == UPoly(1));
    CHECK(forest_poly(t) == UPoly({3, 1}));
    CHECK(forest_poly_root_outside(t) == UPoly({2, 1}));

    CHECK(tutte_poly(e) == bi({{{1, 0}, 1}}));
    CHECK(tutte_poly(l) == bi({{{0, 1}, 1}}));
    CHECK(tutte_poly(t) == bi({{{1, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}}));
    CHECK(activity_poly(e) == tutte_poly(e));
    CHECK(activity_poly(l) == tutte_poly(l));
    CHECK(activity_poly(t) == tutte_poly(t));
  }

  TEST_CASE("invalid maps are rejected") {
    CombMap odd{{0, 1, 2}, {1, 0, 2}, 0};
    CHECK_THROWS_AS(odd.validate(), std::invalid_argument);
    CombMap split{{0, 1, 2, 3}, {1, 0, 3, 2}, 0};
    CHECK_THROWS_AS(split.validate(), std::invalid_argument);
    auto t = theta_map();
    std::vector<bool> not_tree(3, false);
    CHECK_THROWS_AS(bernardi_activities(t, not_tree), std::invalid_argument);
  }

  TEST_CASE("canonical form is a relabelling invariant") {
    std::mt19937 rng(7);
    for (const auto& m : enumerate_maps(3, 4)) {
      std::vector<int> perm(m.n_darts());
      for (int i = 0; i < m.n_darts(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      CombMap r = relabel(m, perm);
      CHECK(canonical(r) == canonical(m));
      CHECK(forest_poly(r) == forest_poly(m));
    }
  }

  TEST_CASE("enumeration counts") {
    CHECK(enumerate_maps(3, 3).size() == 4);
    CHECK(enumerate_maps(3, 4).size() == 32);
    CHECK(enumerate_maps(4, 3).size() == 2);
    CHECK(enumerate_maps(4, 4).size() == 9);
    std::set<CombMap> seen;
    for (const auto& m : enumerate_maps(3, 4)) {
      CHECK(m.genus() == 0);
      CHECK(m.n_faces() == 4);
      CHECK(seen.insert(m).second);
    }
  }

  TEST_CASE("Tutte polynomial against activities and tree counts") {
    for (auto [p, n] : {std::pair{3, 4}, std::pair{4, 4}}) {
      for (const auto& m : enumerate_maps(p, n)) {
        auto tp = tutte_poly(m);
        CHECK(tp == activity_poly(m));
        CHECK(at_one(tp) == Integer(spanning_trees(m).size()));
      }
    }
  }

  TEST_CASE("oracle coefficients") {
    CHECK(oracle_F(3, 3, OracleVariant::all_forests) == UPoly({6, 4}));
    CHECK(oracle_F(3, 4, OracleVariant::all_forests) == UPoly({140, 234, 144, 32}));
    CHECK(oracle_F(3, 4, OracleVariant::tree_rooted_activity) == UPoly({140, 234, 144, 32}));
    CHECK(oracle_F(3, 4, OracleVariant::root_edge_outside) == UPoly({70, 156, 120, 32}));
    CHECK(oracle_F(4, 4, OracleVariant::all_forests) == UPoly({20, 9}));
    CHECK(oracle_F(4, 4, OracleVariant::root_edge_outside) == UPoly({15, 9}));
    CHECK(parse_oracle_variant(describe(OracleVariant::root_edge_outside)) == OracleVariant::root_edge_outside);
    CHECK_THROWS_AS(parse_oracle_variant("nope"), std::invalid_argument);
  }

  TEST_CASE("scale guard") {
    CHECK(enumeration_cost(4, 9) > kOracleCostLimit);
    CHECK_THROWS_AS(enumerate_maps(4, 9), ScaleGuard);
  }
}
