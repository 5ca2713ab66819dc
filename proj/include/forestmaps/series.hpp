#pragma once

#include "forestmaps/rational.hpp"
#include "forestmaps/upoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace fm {

/// Coefficient-ring hooks. Specialised for floating types in real.hpp.
template <class C>
struct ring_ops {
  static bool zero(const C& c) { return c == C(0); }
  static C from(const Rational& q) { return C(q); }
  static C scale(const C& c, const Rational& q) { return c * from(q); }
  static C mul_int(const C& c, long k) { return scale(c, Rational(k)); }
  static C div_int(const C& c, long k) { return scale(c, Rational(1, k)); }
};

template <>
struct ring_ops<UPoly> {
  static bool zero(const UPoly& c) { return c.is_zero(); }
  static UPoly from(const Rational& q) { return UPoly(q); }
  static UPoly scale(const UPoly& c, const Rational& q) { return c * q; }
  static UPoly mul_int(const UPoly& c, long k) { return c * Rational(k); }
  static UPoly div_int(const UPoly& c, long k) { return c * Rational(1, k); }
};

/// Power series in z known through z^order. Binary operations keep the
/// smaller order; reading past the order throws rather than returning junk.
template <class C>
class Series {
 public:
  Series() : c_(1) {}
  explicit Series(int order) : c_(check(order) + 1) {}
  explicit Series(std::vector<C> c) : c_(std::move(c)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  static Series monomial(const C& a, int k, int order) {
    Series s(order);
    if (k <= order) s.c_[k] = a;
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }

  const C& operator[](int n) const {
    if (n < 0 || n > order())
      throw std::out_of_range("coefficient z^" + std::to_string(n) + " beyond order " + std::to_string(order()));
    return c_[n];
  }
  C& operator[](int n) {
    if (n < 0 || n > order())
      throw std::out_of_range("coefficient z^" + std::to_string(n) + " beyond order " + std::to_string(order()));
    return c_[n];
  }

  Series truncated(int n) const {
    if (n > order()) throw std::out_of_range("cannot raise truncation order");
    return Series(std::vector<C>(c_.begin(), c_.begin() + n + 1));
  }

  int valuation() const {
    for (int i = 0; i <= order(); ++i)
      if (!ring_ops<C>::zero(c_[i])) return i;
    return order() + 1;
  }

  Series& operator+=(const Series& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Series operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = C(0) - x;
    return r;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  friend Series operator*(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) {
      if (ring_ops<C>::zero(a.c_[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (ring_ops<C>::zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  friend Series operator*(const C& k, Series a) {
    for (auto& x : a.c_) x = k * x;
    return a;
  }

  Series scaled(const Rational& q) const {
    Series r = *this;
    for (auto& x : r.c_) x = ring_ops<C>::scale(x, q);
    return r;
  }

  /// z^k * this, order raised by k.
  Series shifted_up(int k) const {
    std::vector<C> c(k, C(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Series(std::move(c));
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  static int check(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    return order;
  }
  std::vector<C> c_;
};

template <class C>
Series<C> derivative(const Series<C>& s) {
  if (s.order() < 1) throw std::invalid_argument("derivative of an order-0 series carries no information");
  Series<C> r(s.order() - 1);
  for (int n = 1; n <= s.order(); ++n) r[n - 1] = ring_ops<C>::scale(s[n], Rational(n));
  return r;
}

/// Antiderivative with zero constant term; order grows by one.
template <class C>
Series<C> integral(const Series<C>& s) {
  Series<C> r(s.order() + 1);
  for (int n = 0; n <= s.order(); ++n) r[n + 1] = ring_ops<C>::scale(s[n], Rational(1, n + 1));
  return r;
}

/// sum_k outer[k] * inner^k, Horner style. inner must vanish at z = 0.
template <class C>
Series<C> compose(const std::vector<C>& outer, const Series<C>& inner) {
  if (!ring_ops<C>::zero(inner[0])) throw std::invalid_argument("compose: inner series has a nonzero constant term");
  int n = inner.order();
  int top = std::min<int>(n, static_cast<int>(outer.size()) - 1);
  Series<C> r(n);
  for (int k = top; k >= 0; --k) {
    r = r * inner;
    r[0] += outer[k];
  }
  return r;
}

template <class C>
  requires(!std::is_same_v<C, Rational>)
Series<C> compose(const std::vector<Rational>& outer, const Series<C>& inner) {
  std::vector<C> lifted;
  lifted.reserve(outer.size());
  for (const auto& q : outer) lifted.push_back(ring_ops<C>::from(q));
  return compose(lifted, inner);
}

template <class C>
bool is_zero_through(const Series<C>& s, int n) {
  for (int i = 0; i <= std::min(n, s.order()); ++i)
    if (!ring_ops<C>::zero(s[i])) return false;
  return true;
}

using ZSeries = Series<UPoly>;
using QSeries = Series<Rational>;

/// Evaluate every coefficient at u = x.
QSeries specialize(const ZSeries& s, const Rational& x);

/// Divide each coefficient by u; throws std::domain_error on a nonzero remainder.
ZSeries div_u(const ZSeries& s);

/// Rewrite each coefficient in mu = u + 1.
ZSeries to_mu(const ZSeries& s);

}  // namespace fm
