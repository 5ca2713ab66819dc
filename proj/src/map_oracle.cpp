#include "forestmaps/map_oracle.hpp"

#include "forestmaps/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fm {

namespace {

int count_cycles(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  int c = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = static_cast<int>(i); !seen[j]; j = perm[j]) seen[j] = true;
  }
  return c;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool connected(const std::vector<int>& sigma, const std::vector<int>& alpha) {
  const int n = static_cast<int>(sigma.size());
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int e : {sigma[d], alpha[d]}) {
      if (!seen[e]) {
        seen[e] = true;
        ++count;
        stack.push_back(e);
      }
    }
  }
  return count == n;
}

}  // namespace

void CombMap::validate() const {
  const int n = n_darts();
  if (static_cast<int>(alpha.size()) != n || n % 2 != 0) throw std::invalid_argument("dart arrays disagree in size");
  if (root < 0 || root >= n) throw std::invalid_argument("root dart out of range");
  std::vector<bool> hit(n, false);
  for (int d = 0; d < n; ++d) {
    if (sigma[d] < 0 || sigma[d] >= n || hit[sigma[d]]) throw std::invalid_argument("sigma is not a permutation");
    hit[sigma[d]] = true;
    if (alpha[d] < 0 || alpha[d] >= n || alpha[d] == d || alpha[alpha[d]] != d)
      throw std::invalid_argument("alpha is not a fixed-point-free involution");
  }
  if (!connected(sigma, alpha)) throw std::invalid_argument("map is not connected");
}

std::vector<int> CombMap::vertex_of() const {
  std::vector<int> v(n_darts(), -1);
  int k = 0;
  for (int d = 0; d < n_darts(); ++d) {
    if (v[d] >= 0) continue;
    for (int e = d; v[e] < 0; e = sigma[e]) v[e] = k;
    ++k;
  }
  return v;
}

int CombMap::n_vertices() const { return count_cycles(sigma); }

int CombMap::n_faces() const {
  std::vector<int> phi(n_darts());
  for (int d = 0; d < n_darts(); ++d) phi[d] = sigma[alpha[d]];
  return count_cycles(phi);
}

int CombMap::genus() const { return (2 - n_vertices() + n_edges() - n_faces()) / 2; }

std::vector<int> CombMap::edge_of() const {
  std::vector<int> e(n_darts(), -1);
  int k = 0;
  for (int d = 0; d < n_darts(); ++d) {
    if (e[d] >= 0) continue;
    e[d] = e[alpha[d]] = k++;
  }
  return e;
}

std::vector<std::pair<int, int>> CombMap::edge_ends() const {
  std::vector<int> v = vertex_of(), e = edge_of();
  std::vector<std::pair<int, int>> ends(n_edges(), {-1, -1});
  for (int d = 0; d < n_darts(); ++d) {
    auto& p = ends[e[d]];
    if (p.first < 0)
      p.first = v[d];
    else
      p.second = v[d];
  }
  return ends;
}

bool CombMap::operator<(const CombMap& o) const {
  if (sigma != o.sigma) return sigma < o.sigma;
  if (alpha != o.alpha) return alpha < o.alpha;
  return root < o.root;
}

CombMap canonical(const CombMap& m) {
  const int n = m.n_darts();
  std::vector<int> label(n, -1);
  std::vector<int> order;
  order.reserve(n);
  label[m.root] = 0;
  order.push_back(m.root);
  for (size_t i = 0; i < order.size(); ++i) {
    int d = order[i];
    for (int e : {m.sigma[d], m.alpha[d]}) {
      if (label[e] < 0) {
        label[e] = static_cast<int>(order.size());
        order.push_back(e);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("map is not connected");
  return relabel(m, label);
}

CombMap relabel(const CombMap& m, const std::vector<int>& perm) {
  const int n = m.n_darts();
  CombMap r;
  r.sigma.assign(n, 0);
  r.alpha.assign(n, 0);
  for (int d = 0; d < n; ++d) {
    r.sigma[perm[d]] = perm[m.sigma[d]];
    r.alpha[perm[d]] = perm[m.alpha[d]];
  }
  r.root = perm[m.root];
  return r;
}

namespace {

bool euler_feasible(int p, int n_faces, int* vertices) {
  if (p < 3 || n_faces < 1) return false;
  int num = 2 * (n_faces - 2);
  if (num <= 0 || num % (p - 2) != 0) return false;
  int v = num / (p - 2);
  if ((p * v) % 2 != 0) return false;
  *vertices = v;
  return true;
}

}  // namespace

double enumeration_cost(int p, int n_faces) {
  int v = 0;
  if (!euler_feasible(p, n_faces, &v)) return 0;
  int darts = p * v;
  // darts! / (v! p^v) sigmas, each with 2^(darts/2) edge subsets
  double lg = std::lgamma(darts + 1.0) - std::lgamma(v + 1.0) - v * std::log(static_cast<double>(p));
  return std::exp(lg + (darts / 2) * std::log(2.0));
}

std::vector<CombMap> enumerate_maps(int p, int n_faces) {
  int v = 0;
  if (!euler_feasible(p, n_faces, &v)) return {};
  double cost = enumeration_cost(p, n_faces);
  if (cost > kOracleCostLimit) {
    std::ostringstream os;
    os << "map enumeration for p=" << p << ", " << n_faces << " faces needs about " << cost
       << " candidate subsets, over the limit " << kOracleCostLimit;
    throw ScaleGuard(os.str(), cost);
  }
  const int n = p * v;
  std::vector<int> alpha(n);
  for (int d = 0; d < n; ++d) alpha[d] = d ^ 1;
  std::vector<int> sigma(n, -1);
  std::vector<bool> used(n, false);
  std::set<CombMap> found;

  std::function<void()> place;
  std::function<void(std::vector<int>&)> extend = [&](std::vector<int>& cycle) {
    if (static_cast<int>(cycle.size()) == p) {
      for (int i = 0; i < p; ++i) sigma[cycle[i]] = cycle[(i + 1) % p];
      place();
      for (int i = 0; i < p; ++i) sigma[cycle[i]] = -1;
      return;
    }
    for (int d = 0; d < n; ++d) {
      if (used[d]) continue;
      used[d] = true;
      cycle.push_back(d);
      extend(cycle);
      cycle.pop_back();
      used[d] = false;
    }
  };
  place = [&]() {
    int first = -1;
    for (int d = 0; d < n; ++d)
      if (!used[d]) {
        first = d;
        break;
      }
    if (first < 0) {
      CombMap m{sigma, alpha, 0};
      if (!connected(sigma, alpha)) return;
      if (m.n_faces() != n_faces || m.genus() != 0) return;
      found.insert(canonical(m));
      return;
    }
    used[first] = true;
    std::vector<int> cycle{first};
    extend(cycle);
    used[first] = false;
  };
  place();
  return {found.begin(), found.end()};
}

namespace {

UPoly forest_sum(const CombMap& m, bool avoid_root) {
  auto ends = m.edge_ends();
  const int e = m.n_edges(), v = m.n_vertices();
  const int root_edge = m.edge_of()[m.root];
  std::vector<Rational> c(v, Rational(0));
  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    if (avoid_root && (mask >> root_edge & 1u)) continue;
    UnionFind uf(v);
    bool acyclic = true;
    int size = 0;
    for (int i = 0; i < e && acyclic; ++i) {
      if (!(mask >> i & 1u)) continue;
      ++size;
      acyclic = uf.unite(ends[i].first, ends[i].second);
    }
    if (acyclic) c[v - size - 1] += 1;
  }
  return UPoly(c);
}

}  // namespace

UPoly forest_poly(const CombMap& m) { return forest_sum(m, false); }

UPoly forest_poly_root_outside(const CombMap& m) { return forest_sum(m, true); }

std::string to_string(const BiPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (it->second == 0) continue;
    if (!first) os << (it->second > 0 ? "+" : "");
    first = false;
    auto [i, j] = it->first;
    bool unit = i + j > 0 && (it->second == 1 || it->second == -1);
    if (!unit)
      os << it->second.get_str();
    else if (it->second == -1)
      os << "-";
    if (i) os << "mu" << (i > 1 ? "^" + std::to_string(i) : "");
    if (i && j) os << "*";
    if (j) os << "nu" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  return first ? "0" : os.str();
}

BiPoly tutte_poly(const CombMap& m) {
  auto ends = m.edge_ends();
  const int e = m.n_edges(), v = m.n_vertices();
  BiPoly out;
  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    UnionFind uf(v);
    int comps = v, size = 0;
    for (int i = 0; i < e; ++i) {
      if (!(mask >> i & 1u)) continue;
      ++size;
      if (uf.unite(ends[i].first, ends[i].second)) --comps;
    }
    // (mu-1)^(comps-1) (nu-1)^(size+comps-v), expanded
    int a = comps - 1, b = size + comps - v;
    for (int i = 0; i <= a; ++i)
      for (int j = 0; j <= b; ++j) {
        Integer c = binomial(a, i) * binomial(b, j);
        if ((a - i + b - j) % 2) c = -c;
        out[{i, j}] += c;
      }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::vector<std::vector<bool>> spanning_trees(const CombMap& m) {
  auto ends = m.edge_ends();
  const int e = m.n_edges(), v = m.n_vertices();
  std::vector<std::vector<bool>> out;
  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    if (__builtin_popcount(mask) != v - 1) continue;
    UnionFind uf(v);
    bool ok = true;
    for (int i = 0; i < e && ok; ++i)
      if (mask >> i & 1u) ok = uf.unite(ends[i].first, ends[i].second);
    if (!ok) continue;
    std::vector<bool> t(e);
    for (int i = 0; i < e; ++i) t[i] = mask >> i & 1u;
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

void check_spanning_tree(const CombMap& m, const std::vector<bool>& tree) {
  auto ends = m.edge_ends();
  if (static_cast<int>(tree.size()) != m.n_edges()) throw std::invalid_argument("tree mask has the wrong length");
  UnionFind uf(m.n_vertices());
  int size = 0;
  for (int i = 0; i < m.n_edges(); ++i) {
    if (!tree[i]) continue;
    ++size;
    if (!uf.unite(ends[i].first, ends[i].second)) throw std::invalid_argument("edge set contains a cycle");
  }
  if (size != m.n_vertices() - 1) throw std::invalid_argument("edge set does not span");
}

}  // namespace

std::vector<int> tour_order(const CombMap& m, const std::vector<bool>& tree) {
  check_spanning_tree(m, tree);
  auto edge = m.edge_of();
  std::vector<int> order;
  std::vector<bool> seen(m.n_edges(), false);
  int h = m.root;
  for (int step = 0; step < 2 * m.n_darts(); ++step) {
    int e = edge[h];
    if (!seen[e]) {
      seen[e] = true;
      order.push_back(e);
    }
    // tree edges are crossed, other edges are stepped over
    h = tree[e] ? m.sigma[m.alpha[h]] : m.sigma[h];
    if (h == m.root) break;
  }
  return order;
}

Activities bernardi_activities(const CombMap& m, const std::vector<bool>& tree) {
  std::vector<int> order = tour_order(m, tree);
  const int e = m.n_edges();
  std::vector<int> rank(e);
  for (int i = 0; i < e; ++i) rank[order[i]] = i;
  auto ends = m.edge_ends();
  const int v = m.n_vertices();
  Activities act;
  for (int f = 0; f < e; ++f) {
    if (tree[f]) {
      // cut: non-removed tree components after deleting f
      UnionFind uf(v);
      for (int i = 0; i < e; ++i)
        if (tree[i] && i != f) uf.unite(ends[i].first, ends[i].second);
      bool minimal = true;
      for (int g = 0; g < e && minimal; ++g) {
        if (g == f) continue;
        if (uf.find(ends[g].first) != uf.find(ends[g].second) && rank[g] < rank[f]) minimal = false;
      }
      if (minimal) ++act.internal;
    } else {
      // cycle: f together with the tree path between its ends
      bool minimal = true;
      for (int g = 0; g < e && minimal; ++g) {
        if (!tree[g]) continue;
        UnionFind uf(v);
        for (int i = 0; i < e; ++i)
          if (tree[i] && i != g) uf.unite(ends[i].first, ends[i].second);
        bool on_cycle = uf.find(ends[f].first) != uf.find(ends[f].second);
        if (on_cycle && rank[g] < rank[f]) minimal = false;
      }
      if (minimal) ++act.external;
    }
  }
  return act;
}

BiPoly activity_poly(const CombMap& m) {
  BiPoly out;
  for (const auto& t : spanning_trees(m)) {
    Activities a = bernardi_activities(m, t);
    out[{a.internal, a.external}] += 1;
  }
  return out;
}

std::string describe(OracleVariant v) {
  switch (v) {
    case OracleVariant::all_forests: return "all_forests";
    case OracleVariant::tree_rooted_activity: return "tree_rooted_activity";
    case OracleVariant::root_edge_outside: return "root_edge_outside";
  }
  return "?";
}

OracleVariant parse_oracle_variant(const std::string& s) {
  if (s == "all_forests") return OracleVariant::all_forests;
  if (s == "tree_rooted_activity") return OracleVariant::tree_rooted_activity;
  if (s == "root_edge_outside") return OracleVariant::root_edge_outside;
  throw std::invalid_argument("unknown oracle variant: " + s);
}

UPoly oracle_F(int p, int n_faces, OracleVariant variant) {
  UPoly total;
  const UPoly mu = UPoly::u() + UPoly(1);
  for (const CombMap& m : enumerate_maps(p, n_faces)) {
    switch (variant) {
      case OracleVariant::all_forests: total = total + forest_poly(m); break;
      case OracleVariant::root_edge_outside: total = total + forest_poly_root_outside(m); break;
      case OracleVariant::tree_rooted_activity:
        for (const auto& t : spanning_trees(m)) {
          UPoly w(1);
          for (int k = bernardi_activities(m, t).internal; k > 0; --k) w = w * mu;
          total = total + w;
        }
        break;
    }
  }
  return total;
}

}  // namespace fm
