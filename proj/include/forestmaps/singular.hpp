#pragma once

#include "forestmaps/real.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fm {

enum class Regime { positive_u, zero_u, negative_u };
enum class SubexpClass { n_pow_5_2, n_pow_3, n_pow_3_log_2 };
std::string describe(Regime r);
std::string describe(SubexpClass s);
Regime regime_of(const Real& u);

struct SingularProfile {
  int p = 0;
  Real u, rho, tau, sigma;
  Regime regime = Regime::zero_u;
  Real c_u;
  bool has_constant = false;  // false for p = 3: no constant is available there
  SubexpClass subexp = SubexpClass::n_pow_3;
  Real residual;  // worst residual of the equations that fixed (rho, tau, sigma)
  std::string route;
};

// ---- evaluators ---------------------------------------------------------

enum class BoundaryMethod { automatic, direct, boundary };

/// Phi, theta and derivatives for p = 4 at x = 1/27 - eps. At eps = 0 the
/// derivative fields are +inf.
struct QuarticValues {
  Real phi, dphi, ddphi, theta, dtheta;
  Real error_bound;
};
QuarticValues quartic_values(const Real& x, const Real& eps, BoundaryMethod m = BoundaryMethod::automatic);

/// Psi1, Psi2 and derivatives at t = 1/64 - eps.
struct CubicValues {
  Real psi1, dpsi1, ddpsi1, psi2, dpsi2;
  Real error_bound;
};
CubicValues cubic_values(const Real& t, const Real& eps, BoundaryMethod m = BoundaryMethod::automatic);

enum class QuarticFn { phi, dphi, ddphi, theta, dtheta };
enum class CubicFn { psi1, psi2 };

struct NumericValue {
  Real value;
  Real error_bound;
  std::string method;  // "direct" or "boundary"
};
NumericValue phi_numeric(QuarticFn which, const Rational& x, const Precision& prec);
NumericValue psi_numeric(CubicFn which, const Rational& t, const Precision& prec);
/// |direct - boundary| for the given function, both methods forced.
Real quartic_method_gap(QuarticFn which, const Real& x, const Real& eps);
Real cubic_method_gap(CubicFn which, const Real& t, const Real& eps);

/// The p = 3 bivariate pair through the Psi reductions, with first partials.
struct CubicPartials {
  Real phi1, phi2, phi1_x, phi1_y, phi2_x, phi2_y;
};
CubicPartials cubic_partials(const Real& x, const Real& y);
/// Same, with 1/64 - x/(1-4y)^2 supplied by the caller.
CubicPartials cubic_partials(const Real& x, const Real& y, const Real& t_gap);

// ---- root finding -------------------------------------------------------

struct Root {
  Real x;
  Real residual;
  int iterations = 0;
};
/// f(lo) and f(hi) must have opposite signs. Bisects (geometrically when
/// log_scale) down to a small relative width, then polishes with safeguarded
/// Newton when df is given and Illinois steps otherwise.
Root solve_bracketed(const std::function<Real(const Real&)>& f, Real lo, Real hi, bool log_scale,
                     const std::function<Real(const Real&)>& df = {});

// ---- radii and constants -----------------------------------------------

Real quartic_affine_radius(const Real& u);
SingularProfile radius(int p, const Real& u, const Precision& prec);

struct CubicStep {
  Real rho_tilde, t, delta, sigma_tilde, residual;
};
CubicStep s_tilde_radius_cubic(const Real& u, const Precision& prec);

/// The S-tilde series at z for p = 3, u > 0: smallest root of s = u Phi2(z, s).
Real s_tilde_value(const Real& z, const Real& u, const CubicStep& step);

struct CubicClosed {
  Real delta, rho, rho_delta, tau, sigma, a1, extrapolation_error;
};
/// u in [-1, 0]; at u = -1 the closed radius is a Richardson limit.
CubicClosed cubic_closed(const Real& u);
Real cubic_beta(const Real& u);
Real cubic_alpha(const Real& u);

/// n-asymptotic constant (p = 4 only; p = 3 is refused with std::domain_error).
Real asymptotic_constant(int p, const Real& u, const Precision& prec);

struct RatioRow {
  int n = 0;
  Real scaled_coeff;  // f_n rho^n
  Real ratio;         // f_n rho^n / (c n^-a ln^-b n)
  Real deviation;     // |ratio - 1|
};
std::vector<RatioRow> coefficient_asymptotic_check(int p, const Rational& u, const std::vector<int>& ns,
                                                   const Precision& prec);

// ---- probes -------------------------------------------------------------

struct ProbeRow {
  Real frac, lhs, rhs, deviation, tail_bound;
};
struct ProbeReport {
  Real rho;
  int order = 0;
  std::vector<ProbeRow> rows;
};
struct ProbeOptions {
  Real tolerance = Real(1) / 1000000;
  Real constant = 72;  // the 72 in the log law; perturb for negative controls
  int log_power = 1;   // 1 is the law; 2 is a deliberately wrong law
  int max_order = 40000;
};
/// F''(z) + 4/u against 72 sqrt3 pi rho / (u^2 ln(1 - z/rho)) for p = 4, u < 0,
/// F'' summed from the series with a geometric tail bound. Throws ScaleGuard
/// with the required order when the bound cannot be met under max_order.
ProbeReport log_singularity_probe(const Rational& u, const std::vector<Real>& fracs, const Precision& prec,
                                  const ProbeOptions& opt = {});

struct CubicProbeRow {
  Real x;       // rho - z
  Real g;       // (F'(z) - F'(rho)) / (rho - z)
  Real target;  // (g - alpha) ln x, tends to beta
};
struct CubicFit {
  Real x_hi, x_lo, beta_fit, deviation;
};
struct CubicProbe {
  Real rho, alpha, beta, fprime_rho;
  std::vector<CubicProbeRow> rows;
  std::vector<CubicFit> fits;
};
/// p = 3, u in (-1, 0): F' near rho from the numerical solution of the system
/// for (R, S), and windowed one-parameter fits of beta.
CubicProbe cubic_expansion_probe(const Real& u, int min_exp, int max_exp, const Precision& prec);

// ---- CSV ----------------------------------------------------------------

void write_profiles_csv(std::ostream& os, const std::vector<SingularProfile>& rows);
void write_ratios_csv(std::ostream& os, const std::vector<RatioRow>& rows);
void write_probe_csv(std::ostream& os, const ProbeReport& rep);
void write_cubic_probe_csv(std::ostream& os, const CubicProbe& rep);

}  // namespace fm
