#pragma once

#include "forestmaps/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fm {

/// Dense polynomial in u with rational coefficients. The zero polynomial has
/// no stored coefficients and degree -1.
class UPoly {
 public:
  UPoly() = default;
  UPoly(long c);
  UPoly(const Rational& c);
  explicit UPoly(std::vector<Rational> c);
  UPoly(std::initializer_list<long> c);

  static UPoly u() { return UPoly(std::vector<Rational>{0, 1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](int k) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& q);
  UPoly operator-() const;

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& q) { return a *= q; }
  friend UPoly operator*(const Rational& q, UPoly a) { return a *= q; }
  friend UPoly operator/(UPoly a, const Rational& q) { return a *= Rational(1) / q; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  Rational eval(const Rational& x) const;
  /// p(u + a)
  UPoly shift(const Rational& a) const;
  /// p(u)/u; throws std::domain_error if p(0) != 0.
  UPoly div_u() const;
  UPoly derivative() const;
  bool nonnegative() const;

  /// Human form such as "140+234u+144u^2+32u^3"; var names the variable.
  std::string pretty(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline bool is_zero(const UPoly& p) { return p.is_zero(); }

}  // namespace fm
