#pragma once

#include "forestmaps/real.hpp"

#include <iosfwd>
#include <vector>

namespace fm {

/// Limits for the p = 4 forested-map measures at a given u.
struct ModelStats {
  Real u;
  Real slope_components;  // E_c(C_n)/n
  Real kappa;             // E_i(I_n)/n
  std::vector<Real> s_law;
};

/// uPhi(tau)/(tau - uPhi(tau)); u > 0 only.
Real component_slope(const Real& u, const Precision& prec);
/// (1+u)Phi(tau)/(tau - uPhi(tau)), u >= -1.
Real kappa(const Real& u, const Precision& prec);
/// Same expression at tau = 1/27, the u <= 0 value continued to u > 0.
Real kappa_at_boundary(const Real& u, const Precision& prec);

struct LimitLaw {
  std::vector<Real> probs;  // k = 1..k_max
  Real partial_sum;
  Real tail_bound;  // ratio-test majorant of the remaining mass
};
/// Limit law of the root-component size; u > 0.
LimitLaw s_limit_law(const Real& u, int k_max, const Precision& prec);
/// Finite-n probabilities [z^(n-1)] theta_(k+1) R^(k+1) / [z^(n-1)] theta(R), k = 1..k_max.
std::vector<Real> s_finite_law(const Rational& u, int n, int k_max, const Precision& prec);

struct ActivityEstimate {
  int n = 0;
  Real by_dual;         // (u+1) f_n'/f_n / n with u carried as u + eps
  Real by_composition;  // same through Phi(R) F''
};
ActivityEstimate internal_activity_per_n(const Rational& u, int n, const Precision& prec);

/// Exact check, for 2 <= n <= nmax, of E_i(I_n) = (1 + 1/u) E_c(C_n - 1) from
/// the rational series. Returns the first failing n, or 0.
int activity_component_identity(const Rational& u, int nmax);

void write_model_csv(std::ostream& os, const std::vector<ModelStats>& rows);
void write_law_csv(std::ostream& os, const LimitLaw& limit, const std::vector<Real>& finite);

}  // namespace fm
