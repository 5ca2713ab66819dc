#include "forestmaps/real.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace fm {

void Precision::validate() const {
  if (working_digits < 10 || working_digits > 5000) throw std::invalid_argument("working digits must lie in [10, 5000]");
  if (!(target_abs_tol > 0)) throw std::invalid_argument("tolerance must be positive");
  double implied = -std::log10(target_abs_tol);
  if (implied > 0 && working_digits < 2 * implied)
    throw std::invalid_argument("working digits must be at least twice the digits of the tolerance");
}

Precision Precision::standard() {
  Precision p;
  if (const char* env = std::getenv("FORESTMAPS_DIGITS")) {
    try {
      int d = std::stoi(env);
      if (d >= 10 && d <= 5000) p.working_digits = d;
    } catch (const std::exception&) {
    }
  }
  return p;
}

PrecisionScope::PrecisionScope(const Precision& p) : saved_(Real::default_precision()) {
  p.validate();
  Real::default_precision(static_cast<unsigned>(p.working_digits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real pi() { return boost::math::constants::pi<Real>(); }

Real digamma(const Real& x) {
  Real r;
  mpfr_digamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

Real gamma(const Real& x) {
  Real r;
  mpfr_gamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

std::string fixed(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << x;
  return os.str();
}

std::string sci(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << std::scientific << x;
  return os.str();
}

}  // namespace fm
