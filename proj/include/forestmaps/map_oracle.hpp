#pragma once

#include "forestmaps/rational.hpp"
#include "forestmaps/upoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fm {

/// Rooted map on darts 0..n-1. sigma turns counterclockwise around a vertex,
/// alpha pairs the two darts of an edge, faces are the cycles of sigma o alpha.
struct CombMap {
  std::vector<int> sigma, alpha;
  int root = 0;

  int n_darts() const { return static_cast<int>(sigma.size()); }
  int n_edges() const { return n_darts() / 2; }
  /// Throws std::invalid_argument if alpha is not a fixed-point-free
  /// involution, sigma is not a permutation, or the map is disconnected.
  void validate() const;
  std::vector<int> vertex_of() const;  // dart -> vertex index
  int n_vertices() const;
  int n_faces() const;
  int genus() const;
  /// Edge index of each dart; edges are numbered by their smaller dart's rank.
  std::vector<int> edge_of() const;
  /// Endpoint vertices of each edge.
  std::vector<std::pair<int, int>> edge_ends() const;

  bool operator==(const CombMap& o) const { return sigma == o.sigma && alpha == o.alpha && root == o.root; }
  bool operator<(const CombMap& o) const;
};

/// Relabel darts in first-visit order of a traversal from the root that tries
/// sigma before alpha. Two rooted maps are isomorphic iff their canonical forms agree.
CombMap canonical(const CombMap& m);
/// Conjugate by a dart permutation: dart d becomes perm[d].
CombMap relabel(const CombMap& m, const std::vector<int>& perm);

/// Raw candidate count (sigmas times edge subsets) for enumerate_maps(p, n).
double enumeration_cost(int p, int n_faces);
constexpr double kOracleCostLimit = 2e8;

/// One canonical representative per rooted p-valent planar map with n faces.
/// Throws ScaleGuard above kOracleCostLimit.
std::vector<CombMap> enumerate_maps(int p, int n_faces);

/// Sum over acyclic edge subsets of u^(components - 1).
UPoly forest_poly(const CombMap& m);
/// Same restricted to subsets that avoid the root edge.
UPoly forest_poly_root_outside(const CombMap& m);

/// Bivariate integer polynomial, key (i, j) for mu^i nu^j.
using BiPoly = std::map<std::pair<int, int>, Integer>;
std::string to_string(const BiPoly& p);
BiPoly tutte_poly(const CombMap& m);

/// All spanning trees as edge-membership masks.
std::vector<std::vector<bool>> spanning_trees(const CombMap& m);
/// Edge order of the tour around the tree from the root corner.
std::vector<int> tour_order(const CombMap& m, const std::vector<bool>& tree);
struct Activities {
  int internal = 0, external = 0;
};
/// Throws std::invalid_argument if tree is not a spanning tree.
Activities bernardi_activities(const CombMap& m, const std::vector<bool>& tree);
/// Sum over spanning trees of mu^int nu^ext.
BiPoly activity_poly(const CombMap& m);

enum class OracleVariant { all_forests, tree_rooted_activity, root_edge_outside };
std::string describe(OracleVariant v);
OracleVariant parse_oracle_variant(const std::string& s);
/// [z^n] of F (or of H for root_edge_outside) from the enumerated maps.
UPoly oracle_F(int p, int n_faces, OracleVariant v);

}  // namespace fm
