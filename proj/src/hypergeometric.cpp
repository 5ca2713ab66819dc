#include "forestmaps/hypergeometric.hpp"

#include "forestmaps/errors.hpp"

namespace fm {

namespace {

constexpr int kMaxTerms = 2000000;

Real tiny() {
  Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(Real::default_precision()) - 5);
  return eps;
}

HypResult maclaurin(const Rational& a, const Rational& b, const Rational& c, const Real& x) {
  Real ra = to_real(a), rb = to_real(b), rc = to_real(c);
  Real term = 1, sum = 1;
  Real eps = tiny();
  for (int k = 0; k < kMaxTerms; ++k) {
    Real factor = (ra + k) * (rb + k) / ((rc + k) * (k + 1));
    term *= factor * x;
    sum += term;
    if (k > 8 && abs(term) <= eps * abs(sum)) {
      // The parameter factor is monotone in k this far out, tending to 1.
      Real q = x * (factor > 1 ? factor : Real(1));
      if (q < 1) return {sum, abs(term) * q / (1 - q), k + 1};
    }
  }
  throw NumericFailure("2F1 Maclaurin series did not converge; x too close to 1");
}

HypResult near_one(const Rational& a, const Rational& b, const Rational& c, const Real& y) {
  Rational mq = c - a - b;
  if (mq.get_den() != 1) throw std::invalid_argument("near-one expansion needs c - a - b integer");
  long m = mq.get_num().get_si();
  if (m < 0) {
    HypResult r = near_one(c - a, c - b, c, y);
    Real f = boost::multiprecision::pow(y, m);
    return {r.value * f, r.error_bound * f, r.terms};
  }
  Real ra = to_real(a), rb = to_real(b);
  Real gab = gamma(to_real(a + b + m));
  Real ga = gamma(ra), gb = gamma(rb);
  Real logy = log(y);
  Real eps = tiny();
  Real part1 = 0;
  if (m >= 1) {
    Real pre = gamma(Real(m)) * gab / (gamma(to_real(a + m)) * gamma(to_real(b + m)));
    Real t = 1;
    for (long n = 0; n < m; ++n) {
      part1 += t;
      t *= (ra + n) * (rb + n) / ((n + 1) * Real(1 - m + n)) * y;
    }
    part1 *= pre;
  }
  // sum_n (a+m)_n (b+m)_n / (n! (n+m)!) y^n [ln y - psi(n+1) - psi(n+m+1) + psi(a+n+m) + psi(b+n+m)]
  Real am = to_real(a + m), bm = to_real(b + m);
  Real psi1 = digamma(Real(1)), psim = digamma(Real(m + 1)), psia = digamma(am), psib = digamma(bm);
  Real coef = 1 / gamma(Real(m + 1));
  Real yn = 1;
  Real sum = 0;
  Real bound = 0;
  int n = 0;
  for (; n < kMaxTerms; ++n) {
    Real bracket = logy - psi1 - psim + psia + psib;
    Real term = coef * yn * bracket;
    sum += term;
    if (n > 4 && abs(term) <= eps * abs(sum)) {
      bound = 2 * abs(term) * y / (1 - y);
      break;
    }
    coef *= (am + n) * (bm + n) / (Real(n + 1) * Real(n + m + 1));
    yn *= y;
    psi1 += Real(1) / (n + 1);
    psim += Real(1) / (n + m + 1);
    psia += 1 / (am + n);
    psib += 1 / (bm + n);
  }
  if (n == kMaxTerms) throw NumericFailure("2F1 expansion at 1 did not converge");
  Real sign = (m % 2 == 0) ? 1 : -1;  // (x - 1)^m = (-y)^m
  Real pre2 = gab / (ga * gb) * sign * boost::multiprecision::pow(y, m);
  Real value = part1 - pre2 * sum;
  return {value, abs(pre2) * bound, n + 1};
}

}  // namespace

HypResult hyp2f1(const Rational& a, const Rational& b, const Rational& c, const Real& x, const Real& y,
                 HypMethod method) {
  if (x < 0 || y < 0) throw std::domain_error("2F1 evaluated outside [0, 1]");
  if (method == HypMethod::automatic) {
    Rational m = c - a - b;
    method = (x <= Real(1) / 2 || m.get_den() != 1) ? HypMethod::maclaurin : HypMethod::near_one;
  }
  if (method == HypMethod::maclaurin) {
    if (y == 0) throw std::domain_error("Maclaurin series of 2F1 cannot be summed at x = 1");
    return maclaurin(a, b, c, x);
  }
  if (y == 0) {
    // Finite only when c - a - b > 0: Gauss' value.
    if (c - a - b <= 0) throw std::domain_error("2F1 diverges at x = 1");
    Real v = gamma(to_real(c)) * gamma(to_real(c - a - b)) / (gamma(to_real(c - a)) * gamma(to_real(c - b)));
    return {v, Real(0), 0};
  }
  return near_one(a, b, c, y);
}

}  // namespace fm
