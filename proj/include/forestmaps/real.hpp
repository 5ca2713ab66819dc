#pragma once

#include "forestmaps/rational.hpp"
#include "forestmaps/series.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace fm {

using Real = boost::multiprecision::mpfr_float;

/// Working precision for one numeric request. The tolerance must leave at
/// least a factor-two margin in digits.
struct Precision {
  int working_digits = 50;
  double target_abs_tol = 1e-20;

  void validate() const;
  /// Default working digits, honouring FORESTMAPS_DIGITS when set.
  static Precision standard();
};

/// Sets the thread's default mpfr precision for the lifetime of the object.
class PrecisionScope {
 public:
  explicit PrecisionScope(const Precision& p);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const Rational& q);
Real pi();
Real digamma(const Real& x);
Real gamma(const Real& x);
std::string fixed(const Real& x, int digits = 20);
std::string sci(const Real& x, int digits = 12);

template <>
struct ring_ops<Real> {
  static bool zero(const Real& c) { return c == 0; }
  static Real from(const Rational& q) { return to_real(q); }
  static Real scale(const Real& c, const Rational& q) { return c * to_real(q); }
  static Real mul_int(const Real& c, long k) { return c * k; }
  static Real div_int(const Real& c, long k) { return c / k; }
};

template <>
struct ring_ops<long double> {
  static bool zero(long double c) { return c == 0; }
  static long double from(const Rational& q) { return static_cast<long double>(q.get_d()); }
  static long double scale(long double c, const Rational& q) { return c * from(q); }
  static long double mul_int(long double c, long k) { return c * k; }
  static long double div_int(long double c, long k) { return c / k; }
};

}  // namespace fm
