#include "forestmaps/random_model.hpp"

#include "forestmaps/dual.hpp"
#include "forestmaps/quartic.hpp"
#include "forestmaps/singular.hpp"
#include "forestmaps/tree_counts.hpp"

#include <ostream>
#include <stdexcept>

namespace fm {

namespace {

struct TauPhi {
  Real tau, phi, dtheta;
};

TauPhi critical(const Real& u, const Precision& prec) {
  SingularProfile pr = radius(4, u, prec);
  Real eps = u > 0 ? Real(Real(1) / 27 - pr.tau) : Real(0);
  QuarticValues v = quartic_values(pr.tau, eps);
  return {pr.tau, v.phi, v.dtheta};
}

}  // namespace

Real component_slope(const Real& u, const Precision& prec) {
  if (!(u > 0)) throw std::domain_error("the component slope is established for u > 0 only");
  PrecisionScope scope(prec);
  TauPhi c = critical(u, prec);
  return u * c.phi / (c.tau - u * c.phi);
}

Real kappa(const Real& u, const Precision& prec) {
  if (u < -1) throw std::domain_error("u must be at least -1");
  PrecisionScope scope(prec);
  TauPhi c = critical(u, prec);
  return (1 + u) * c.phi / (c.tau - u * c.phi);
}

Real kappa_at_boundary(const Real& u, const Precision& prec) {
  PrecisionScope scope(prec);
  Real tau = Real(1) / 27;
  Real phi = quartic_values(tau, Real(0)).phi;
  return (1 + u) * phi / (tau - u * phi);
}

LimitLaw s_limit_law(const Real& u, int k_max, const Precision& prec) {
  if (!(u > 0)) throw std::domain_error("the root-component law is stated for u > 0");
  if (k_max < 1) throw std::invalid_argument("k_max must be positive");
  PrecisionScope scope(prec);
  TauPhi c = critical(u, prec);
  LimitLaw out;
  out.partial_sum = 0;
  // 4 (3k)! / ((k-1)! k! (k+1)!) tau^k / theta'(tau), built by ratios
  Real term = 12 * c.tau / c.dtheta;
  for (int k = 1; k <= k_max; ++k) {
    out.probs.push_back(term);
    out.partial_sum += term;
    Real ratio = Real(3 * k + 1) * (3 * k + 2) * (3 * k + 3) / (Real(k) * (k + 1) * (k + 2)) * c.tau;
    term *= ratio;
  }
  // later ratios increase to 27 tau < 1
  Real q = 27 * c.tau;
  out.tail_bound = q < 1 ? Real(term / (1 - q)) : std::numeric_limits<Real>::infinity();
  return out;
}

std::vector<Real> s_finite_law(const Rational& u, int n, int k_max, const Precision& prec) {
  if (n < 2 || k_max < 1) throw std::invalid_argument("need n >= 2 and k_max >= 1");
  PrecisionScope scope(prec);
  Real ur = to_real(u);
  Real lead = u > 0 ? radius(4, ur, prec).rho : quartic_affine_radius(ur);
  QuarticSeries<Real> q = solve_quartic<Real>(n - 1, ur, lead);
  TreeSeries ts = build_phi_theta(4, k_max + 2);
  std::vector<Real> out;
  std::vector<Real> power = q.R;
  const int m = n - 1;
  for (int j = 2; j <= k_max + 1; ++j) {
    std::vector<Real> next(m + 1, Real(0));
    for (int a = 1; a <= m; ++a)
      for (int b = 1; a + b <= m; ++b) next[a + b] += power[a] * q.R[b];
    power = std::move(next);
    out.push_back(to_real(ts.theta_x[j]) * power[m] / q.Fprime[m]);
  }
  return out;
}

ActivityEstimate internal_activity_per_n(const Rational& u, int n, const Precision& prec) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  PrecisionScope scope(prec);
  Real ur = to_real(u);
  Real lead = u > 0 ? radius(4, ur, prec).rho : quartic_affine_radius(ur);
  ActivityEstimate est;
  est.n = n;
  const int m = n - 1;
  auto d = solve_quartic<Dual<Real>>(m, Dual<Real>(ur, Real(1)), Dual<Real>(lead));
  est.by_dual = (1 + ur) * d.Fprime[m].b / d.Fprime[m].a / n;
  QuarticSeries<Real> q = solve_quartic<Real>(m, ur, lead);
  Real acc = 0;
  for (int j = 1; j <= m; ++j) acc += q.A[j] * Real(n - j) * q.Fprime[n - j];
  est.by_composition = (1 + ur) * acc / (lead * q.Fprime[m]) / n;
  return est;
}

int activity_component_identity(const Rational& u, int nmax) {
  if (u == 0) throw std::domain_error("the identity divides by u");
  // E_i from u carried as u + eps; E_c from the coefficients as polynomials in u
  auto d = solve_quartic<Dual<Rational>>(nmax, Dual<Rational>(u, Rational(1)));
  auto poly = solve_quartic<UPoly>(nmax, UPoly::u());
  for (int n = 2; n <= nmax; ++n) {
    const auto& c = d.Fprime[n - 1];
    const UPoly& f = poly.Fprime[n - 1];
    Rational fu = f.eval(u);
    if (c.a == 0 && fu == 0) continue;
    if (c.a == 0 || fu == 0) return n;
    Rational e_i = (u + 1) * c.b / c.a;
    Rational e_c_minus_1 = u * f.derivative().eval(u) / fu;
    if (e_i != (1 + 1 / u) * e_c_minus_1) return n;
  }
  return 0;
}

void write_model_csv(std::ostream& os, const std::vector<ModelStats>& rows) {
  os << "u,slope,kappa\n";
  for (const auto& r : rows) os << sci(r.u, 6) << ',' << sci(r.slope_components, 16) << ',' << sci(r.kappa, 16) << '\n';
}

void write_law_csv(std::ostream& os, const LimitLaw& limit, const std::vector<Real>& finite) {
  os << "k,limit_prob,finite_n_prob\n";
  for (size_t i = 0; i < limit.probs.size(); ++i) {
    os << i + 1 << ',' << sci(limit.probs[i], 16) << ',';
    if (i < finite.size()) os << sci(finite[i], 16);
    os << '\n';
  }
}

}  // namespace fm
