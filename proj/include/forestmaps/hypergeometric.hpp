#pragma once

#include "forestmaps/real.hpp"

namespace fm {

struct HypResult {
  Real value;
  Real error_bound;  // truncation bound on the summed tail
  int terms = 0;
};

enum class HypMethod { automatic, maclaurin, near_one };

/// 2F1(a, b; c; x) for 0 <= x <= 1. The caller passes y = 1 - x as well, so the
/// value near x = 1 keeps full relative accuracy in y. Near x = 1 the expansion
/// in powers of y (with its log terms) requires c - a - b to be an integer.
HypResult hyp2f1(const Rational& a, const Rational& b, const Rational& c, const Real& x, const Real& y,
                 HypMethod method = HypMethod::automatic);

}  // namespace fm
