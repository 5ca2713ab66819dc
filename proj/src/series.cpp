#include "forestmaps/series.hpp"

namespace fm {

QSeries specialize(const ZSeries& s, const Rational& x) {
  QSeries r(s.order());
  for (int n = 0; n <= s.order(); ++n) r[n] = s[n].eval(x);
  return r;
}

ZSeries div_u(const ZSeries& s) {
  ZSeries r(s.order());
  for (int n = 0; n <= s.order(); ++n) {
    try {
      r[n] = s[n].div_u();
    } catch (const std::domain_error&) {
      throw std::domain_error("series not divisible by u at z^" + std::to_string(n) + ": " + s[n].pretty());
    }
  }
  return r;
}

ZSeries to_mu(const ZSeries& s) {
  ZSeries r(s.order());
  for (int n = 0; n <= s.order(); ++n) r[n] = s[n].shift(-1);
  return r;
}

}  // namespace fm
