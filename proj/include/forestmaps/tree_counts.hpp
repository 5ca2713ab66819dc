#pragma once

#include "forestmaps/rational.hpp"

#include <vector>

namespace fm {

enum class Rooting { leaf, corner };

/// Number of p-valent plane trees with k leaves, rooted at a leaf or at a corner.
Integer tree_count(int p, int k, Rooting r);

/// Truncated series in x, y. Keeps x^i y^j with 2i + j <= order.
class Bivariate {
 public:
  Bivariate() = default;
  explicit Bivariate(int order);

  int order() const { return order_; }
  Rational at(int i, int j) const;
  void set(int i, int j, const Rational& v);
  bool in_range(int i, int j) const { return i >= 0 && j >= 0 && 2 * i + j <= order_; }

  Bivariate& operator+=(const Bivariate& o);
  Bivariate& operator-=(const Bivariate& o);
  Bivariate& operator*=(const Rational& q);
  friend Bivariate operator+(Bivariate a, const Bivariate& b) { return a += b; }
  friend Bivariate operator-(Bivariate a, const Bivariate& b) { return a -= b; }
  friend Bivariate operator*(const Bivariate& a, const Bivariate& b);
  friend bool operator==(const Bivariate& a, const Bivariate& b);

  /// Multiply by x^a y^b (terms pushed past the order are dropped).
  Bivariate shifted(int a, int b) const;

  struct Term {
    int i, j;
    Rational c;
  };
  /// Nonzero terms with i + j <= max_total, in (i, j) lexicographic order.
  std::vector<Term> terms(int max_total) const;

 private:
  int order_ = 0;
  std::vector<std::vector<Rational>> rows_;  // rows_[i][j]
};

struct TreeSeries {
  int p = 0;
  int order = 0;
  Bivariate theta, phi1, phi2;
  // Even p only: theta(x) = theta(x, 0), phi(x) = phi1(x, 0), through x^order.
  std::vector<Rational> theta_x, phi_x;
};

TreeSeries build_phi_theta(int p, int order);

/// Double sum attached to leaf-rooted (quasi-p-valent) maps: terms with i >= 2.
Bivariate quasi_sum(int p, int order);
/// Double sum attached to maps whose root edge is outside the forest: i >= 3.
Bivariate outside_sum(int p, int order);

struct PsiSeries {
  std::vector<Rational> psi1, psi2;  // indexed by power of z, through z^order
};
PsiSeries build_psi(int order);

/// The p = 4 series sum_{i>=3} (3i-6)!/((i-3)!(i-2)! i!) x^i through x^order.
std::vector<Rational> lambda_4valent(int order);

}  // namespace fm
