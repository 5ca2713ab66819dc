#include "forestmaps/tree_counts.hpp"

#include <stdexcept>

namespace fm {

Integer tree_count(int p, int k, Rooting r) {
  if (p < 3) throw std::invalid_argument("tree_count: p must be at least 3");
  if (k < 1) throw std::invalid_argument("tree_count: k must be positive");
  if ((k - 2) % (p - 2) != 0 || k < p) return 0;
  unsigned l = static_cast<unsigned>((k - 2) / (p - 2));
  Integer top = factorial((p - 1) * l);
  if (r == Rooting::leaf) return top / (factorial(l) * factorial((p - 2) * l + 1));
  return p * top / (factorial(l - 1) * factorial((p - 2) * l + 2));
}

namespace {
Integer t_leaf(int p, int k) { return k < 1 ? Integer(0) : tree_count(p, k, Rooting::leaf); }
Integer t_corner(int p, int k) { return k < 1 ? Integer(0) : tree_count(p, k, Rooting::corner); }
}  // namespace

Bivariate::Bivariate(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("negative bivariate order");
  rows_.resize(order / 2 + 1);
  for (int i = 0; i <= order / 2; ++i) rows_[i].assign(order - 2 * i + 1, Rational(0));
}

Rational Bivariate::at(int i, int j) const {
  if (!in_range(i, j)) return 0;
  return rows_[i][j];
}

void Bivariate::set(int i, int j, const Rational& v) {
  if (!in_range(i, j)) throw std::out_of_range("bivariate term outside truncation");
  rows_[i][j] = v;
}

Bivariate& Bivariate::operator+=(const Bivariate& o) {
  if (o.order_ != order_) throw std::invalid_argument("bivariate order mismatch");
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i].size(); ++j) rows_[i][j] += o.rows_[i][j];
  return *this;
}

Bivariate& Bivariate::operator-=(const Bivariate& o) {
  if (o.order_ != order_) throw std::invalid_argument("bivariate order mismatch");
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i].size(); ++j) rows_[i][j] -= o.rows_[i][j];
  return *this;
}

Bivariate& Bivariate::operator*=(const Rational& q) {
  for (auto& row : rows_)
    for (auto& x : row) x *= q;
  return *this;
}

Bivariate operator*(const Bivariate& a, const Bivariate& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("bivariate order mismatch");
  Bivariate r(a.order_);
  for (size_t i1 = 0; i1 < a.rows_.size(); ++i1)
    for (size_t j1 = 0; j1 < a.rows_[i1].size(); ++j1) {
      if (sgn(a.rows_[i1][j1]) == 0) continue;
      for (size_t i2 = 0; i2 < b.rows_.size(); ++i2)
        for (size_t j2 = 0; j2 < b.rows_[i2].size(); ++j2) {
          int i = static_cast<int>(i1 + i2), j = static_cast<int>(j1 + j2);
          if (!r.in_range(i, j)) break;
          r.rows_[i][j] += a.rows_[i1][j1] * b.rows_[i2][j2];
        }
    }
  return r;
}

bool operator==(const Bivariate& a, const Bivariate& b) { return a.order_ == b.order_ && a.rows_ == b.rows_; }

Bivariate Bivariate::shifted(int a, int b) const {
  Bivariate r(order_);
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i].size(); ++j)
      if (r.in_range(static_cast<int>(i) + a, static_cast<int>(j) + b))
        r.rows_[i + a][j + b] = rows_[i][j];
  return r;
}

std::vector<Bivariate::Term> Bivariate::terms(int max_total) const {
  std::vector<Term> out;
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t j = 0; j < rows_[i].size(); ++j)
      if (sgn(rows_[i][j]) != 0 && static_cast<int>(i + j) <= max_total)
        out.push_back({static_cast<int>(i), static_cast<int>(j), rows_[i][j]});
  return out;
}

TreeSeries build_phi_theta(int p, int order) {
  if (p < 3) throw std::invalid_argument("p must be at least 3");
  TreeSeries ts;
  ts.p = p;
  ts.order = order;
  ts.theta = Bivariate(order);
  ts.phi1 = Bivariate(order);
  ts.phi2 = Bivariate(order);
  for (int i = 0; 2 * i <= order; ++i)
    for (int j = 0; 2 * i + j <= order; ++j) {
      ts.theta.set(i, j, Rational(t_corner(p, 2 * i + j) * trinomial(i, i, j)));
      if (i >= 1) ts.phi1.set(i, j, Rational(t_leaf(p, 2 * i + j) * trinomial(i - 1, i, j)));
      ts.phi2.set(i, j, Rational(t_leaf(p, 2 * i + j + 1) * trinomial(i, i, j)));
    }
  if (p % 2 == 0) {
    ts.theta_x.resize(order + 1);
    ts.phi_x.resize(order + 1);
    for (int i = 0; i <= order; ++i) {
      ts.theta_x[i] = Rational(t_corner(p, 2 * i) * binomial(2 * i, i));
      ts.phi_x[i] = i >= 1 ? Rational(t_leaf(p, 2 * i) * binomial(2 * i - 1, i)) : Rational(0);
    }
  }
  return ts;
}

Bivariate quasi_sum(int p, int order) {
  Bivariate b(order);
  for (int i = 2; 2 * i <= order; ++i)
    for (int j = 0; 2 * i + j <= order; ++j)
      b.set(i, j, Rational(t_leaf(p, 2 * i + j - 1) * trinomial(i - 2, i, j)));
  return b;
}

Bivariate outside_sum(int p, int order) {
  Bivariate b(order);
  for (int i = 3; 2 * i <= order; ++i)
    for (int j = 0; 2 * i + j <= order; ++j)
      b.set(i, j, Rational(t_leaf(p, 2 * i + j - 2) * trinomial(i - 3, i, j)));
  return b;
}

PsiSeries build_psi(int order) {
  PsiSeries ps;
  ps.psi1.assign(order + 1, Rational(0));
  ps.psi2.assign(order + 1, Rational(0));
  for (int i = 1; i <= order; ++i) {
    unsigned k = static_cast<unsigned>(i);
    ps.psi1[i] = Rational(factorial(4 * k - 4), factorial(2 * k - 2) * factorial(k) * factorial(k - 1));
    ps.psi2[i] = Rational(factorial(4 * k - 2), factorial(2 * k - 1) * factorial(k) * factorial(k));
    ps.psi1[i].canonicalize();
    ps.psi2[i].canonicalize();
  }
  return ps;
}

std::vector<Rational> lambda_4valent(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (int i = 3; i <= order; ++i) {
    unsigned k = static_cast<unsigned>(i);
    c[i] = Rational(factorial(3 * k - 6), factorial(k - 3) * factorial(k - 2) * factorial(k));
    c[i].canonicalize();
  }
  return c;
}

}  // namespace fm
