#pragma once

#include "forestmaps/series.hpp"
#include "forestmaps/tree_counts.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace fm {

/// Either u kept as an indeterminate, or u fixed to a rational.
struct UMode {
  bool symbolic = true;
  Rational value = 0;

  static UMode indeterminate() { return {}; }
  static UMode fixed(const Rational& v) { return {false, v}; }
  std::string describe() const { return symbolic ? "symbolic" : to_string(value); }
};

inline constexpr int kSymbolicOrderLimit = 60;

/// Throws std::invalid_argument for orders the symbolic mode refuses.
void check_mode(const UMode& mode, int order);

/// Solves R = z + u Phi1(R, S), S = u Phi2(R, S) one z-order at a time and keeps
/// the power tables of R and S so any bivariate series can be evaluated at (R, S).
template <class C>
class ImplicitSystem {
 public:
  ImplicitSystem(const TreeSeries& ts, int order, const C& u) : n_(order), u_(u) {
    if (order < 1) throw std::invalid_argument("solver order must be at least 1");
    if (ts.order < 2 * order) throw std::invalid_argument("tree series truncated below twice the solver order");
    run(ts.phi1.terms(order), ts.phi2.terms(order), false);
  }

  /// S~ = u Phi2(z, S~): the same recursion with R replaced by z.
  static ImplicitSystem with_r_equal_z(const TreeSeries& ts, int order, const C& u) {
    if (ts.order < 2 * order) throw std::invalid_argument("tree series truncated below twice the solver order");
    ImplicitSystem sys(order, u);
    sys.run({}, ts.phi2.terms(order), true);
    return sys;
  }

  int order() const { return n_; }
  Series<C> R() const { return Series<C>(rp_[1]); }
  Series<C> S() const { return Series<C>(sp_[1]); }

  /// f(R, S) through the solver order.
  Series<C> eval(const Bivariate& f) const {
    std::vector<std::vector<C>> q(n_ + 1);
    for (const auto& t : f.terms(n_)) {
      auto& col = q[t.j];
      if (col.empty()) col.assign(n_ + 1, C(0));
      C c = ring_ops<C>::from(t.c);
      const auto& pw = rp_[t.i];
      for (int k = 0; k <= n_; ++k)
        if (!ring_ops<C>::zero(pw[k])) col[k] += c * pw[k];
    }
    Series<C> out(n_);
    for (int j = 0; j <= n_; ++j) {
      if (q[j].empty()) continue;
      const auto& sj = sp_[j];
      for (int a = 0; a <= n_; ++a) {
        if (ring_ops<C>::zero(sj[a])) continue;
        for (int b = 0; a + b <= n_; ++b)
          if (!ring_ops<C>::zero(q[j][b])) out[a + b] += sj[a] * q[j][b];
      }
    }
    return out;
  }

 private:
  ImplicitSystem(int order, const C& u) : n_(order), u_(u) {}

  struct Column {
    std::vector<std::pair<int, C>> terms;  // (i, c_ij)
    std::vector<C> q;                       // sum_i c_ij R^i, coefficientwise
  };

  static std::vector<Column> columns(const std::vector<Bivariate::Term>& terms, int n) {
    std::vector<Column> cols(n + 1);
    for (const auto& t : terms) cols[t.j].terms.emplace_back(t.i, ring_ops<C>::from(t.c));
    for (auto& c : cols) c.q.assign(n + 1, C(0));
    return cols;
  }

  void ensure_power(std::vector<std::vector<C>>& pw, int i) {
    while (static_cast<int>(pw.size()) <= i) pw.emplace_back(n_ + 1, C(0));
  }

  // [z^n] X^i from [z^<n] of X, for i >= 2.
  static void extend_power(std::vector<std::vector<C>>& pw, int i, int n) {
    const auto& x = pw[1];
    const auto& prev = pw[i - 1];
    C acc(0);
    for (int k = 1; k <= n - (i - 1); ++k)
      if (!ring_ops<C>::zero(x[k]) && !ring_ops<C>::zero(prev[n - k])) acc += x[k] * prev[n - k];
    pw[i][n] = acc;
  }

  C column_sum(const std::vector<Column>& cols, int n) const {
    C acc(0);
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].terms.empty()) continue;
      const auto& sj = sp_[j];
      for (int m = 0; m <= n; ++m)
        if (!ring_ops<C>::zero(sj[m]) && !ring_ops<C>::zero(cols[j].q[n - m])) acc += sj[m] * cols[j].q[n - m];
    }
    return acc;
  }

  void run(const std::vector<Bivariate::Term>& t1, const std::vector<Bivariate::Term>& t2, bool r_is_z) {
    int n = n_;
    auto c1 = columns(t1, n), c2 = columns(t2, n);
    // Full tables so eval() can reach any x^i y^j with i + j <= order.
    int imax = n, jmax = n;
    ensure_power(rp_, imax);
    ensure_power(sp_, jmax);
    rp_[0][0] = C(1);
    sp_[0][0] = C(1);
    if (r_is_z)
      for (int i = 1; i <= std::min(imax, n); ++i) rp_[i][i] = C(1);

    auto add_column_terms = [&](std::vector<Column>& cols, int k, bool only_linear) {
      for (auto& col : cols)
        for (const auto& [i, c] : col.terms) {
          if (only_linear != (i == 1)) continue;
          if (i == 0 && k != 0) continue;
          if (!ring_ops<C>::zero(rp_[i][k])) col.q[k] += c * rp_[i][k];
        }
    };
    add_column_terms(c1, 0, false);
    add_column_terms(c2, 0, false);

    for (int k = 1; k <= n; ++k) {
      if (!r_is_z)
        for (int i = 2; i <= std::min(imax, k); ++i) extend_power(rp_, i, k);
      for (int j = 2; j <= std::min(jmax, k); ++j) extend_power(sp_, j, k);
      add_column_terms(c1, k, false);
      add_column_terms(c2, k, false);
      if (!r_is_z) {
        C r = u_ * column_sum(c1, k);
        if (k == 1) r += C(1);
        rp_[1][k] = r;
      }
      add_column_terms(c1, k, true);
      add_column_terms(c2, k, true);
      sp_[1][k] = u_ * column_sum(c2, k);
    }
  }

  int n_;
  C u_;
  std::vector<std::vector<C>> rp_, sp_;  // rp_[i][k] = [z^k] R^i
};

/// Everything the forested-map pipeline derives from (R, S). G is only filled
/// for p = 3.
template <class C>
struct SolverOutput {
  int p = 0;
  int order = 0;
  Series<C> R, S, S_tilde, F, Fprime, G, H;
};

SolverOutput<UPoly> solve_symbolic(int p, int order);
SolverOutput<Rational> solve_fixed(int p, int order, const Rational& u);

ZSeries solve_s_tilde(int p, int order);
/// The y-derivative of Phi2 evaluated at (z, S~).
ZSeries phi2_y_at_s_tilde(int p, int order);

/// F through the closed expression in R alone (p = 4), for cross-checking.
ZSeries series_F_explicit_4valent(int order);
QSeries series_F_explicit_4valent(int order, const Rational& u);

/// Coefficients of F(z, 0) from the spanning-tree closed form.
std::vector<Integer> spanning_tree_counts(int p, int order);

/// Divide by u and re-expand in mu = u + 1.
ZSeries mu_expansion(const ZSeries& s, bool divide_by_u);

/// Mixed-mode helper: coefficient at z^n as a polynomial for either mode.
struct CoeffTable {
  std::string name;
  std::vector<UPoly> coeffs;
};

/// Runs the pipeline in the requested mode and returns polynomial tables
/// (constant polynomials for a fixed u).
std::vector<CoeffTable> coefficient_tables(int p, int order, const UMode& mode);

}  // namespace fm
