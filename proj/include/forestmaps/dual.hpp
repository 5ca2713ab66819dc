#pragma once

#include "forestmaps/series.hpp"

namespace fm {

/// a + b*eps with eps^2 = 0. Running a computation with u = u0 + eps gives the
/// u-derivative in the eps part.
template <class T>
struct Dual {
  T a{0}, b{0};

  Dual() = default;
  Dual(long v) : a(v) {}
  Dual(const T& v) : a(v) {}
  Dual(const T& v, const T& d) : a(v), b(d) {}

  Dual& operator+=(const Dual& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  friend Dual operator+(Dual x, const Dual& y) { return x += y; }
  friend Dual operator-(Dual x, const Dual& y) { return x -= y; }
  friend Dual operator*(const Dual& x, const Dual& y) { return Dual(T(x.a * y.a), T(x.a * y.b + x.b * y.a)); }
  friend Dual operator/(const Dual& x, const Dual& y) {
    return Dual(T(x.a / y.a), T((x.b * y.a - x.a * y.b) / (y.a * y.a)));
  }
  friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.b == y.b; }
};

template <class T>
struct ring_ops<Dual<T>> {
  static bool zero(const Dual<T>& c) { return ring_ops<T>::zero(c.a) && ring_ops<T>::zero(c.b); }
  static Dual<T> from(const Rational& q) { return Dual<T>(ring_ops<T>::from(q)); }
  static Dual<T> scale(const Dual<T>& c, const Rational& q) {
    return Dual<T>(ring_ops<T>::scale(c.a, q), ring_ops<T>::scale(c.b, q));
  }
  static Dual<T> mul_int(const Dual<T>& c, long k) { return Dual<T>(ring_ops<T>::mul_int(c.a, k), ring_ops<T>::mul_int(c.b, k)); }
  static Dual<T> div_int(const Dual<T>& c, long k) { return Dual<T>(ring_ops<T>::div_int(c.a, k), ring_ops<T>::div_int(c.b, k)); }
};

}  // namespace fm
