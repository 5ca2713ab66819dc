#include "forestmaps/singular.hpp"

#include "forestmaps/errors.hpp"
#include "forestmaps/hypergeometric.hpp"
#include "forestmaps/quartic.hpp"
#include "forestmaps/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace fm {

namespace mp = boost::multiprecision;

std::string describe(Regime r) {
  switch (r) {
    case Regime::positive_u: return "positive_u";
    case Regime::zero_u: return "zero_u";
    case Regime::negative_u: return "negative_u";
  }
  return "?";
}

std::string describe(SubexpClass s) {
  switch (s) {
    case SubexpClass::n_pow_5_2: return "n^-5/2";
    case SubexpClass::n_pow_3: return "n^-3";
    case SubexpClass::n_pow_3_log_2: return "n^-3 ln^-2 n";
  }
  return "?";
}

Regime regime_of(const Real& u) {
  if (u > 0) return Regime::positive_u;
  if (u < 0) return Regime::negative_u;
  return Regime::zero_u;
}

namespace {

Real infinity() { return std::numeric_limits<Real>::infinity(); }

Real switchover() { return Real(1) / 1000; }

bool use_boundary(const Real& eps, BoundaryMethod m) {
  if (m == BoundaryMethod::automatic) return eps < switchover();
  return m == BoundaryMethod::boundary;
}

HypResult hyp(const Rational& a, const Rational& b, const Rational& c, const Real& w, const Real& y, bool boundary) {
  return hyp2f1(a, b, c, w, y, boundary ? HypMethod::near_one : HypMethod::maclaurin);
}

SubexpClass subexp_for(Regime r) {
  switch (r) {
    case Regime::positive_u: return SubexpClass::n_pow_5_2;
    case Regime::zero_u: return SubexpClass::n_pow_3;
    default: return SubexpClass::n_pow_3_log_2;
  }
}

Real digits_tolerance(int slack) {
  return mp::pow(Real(10), -static_cast<int>(Real::default_precision()) + slack);
}

}  // namespace

QuarticValues quartic_values(const Real& x, const Real& eps, BoundaryMethod m) {
  if (x < 0 || eps < 0) throw std::domain_error("Phi is evaluated on [0, 1/27] only");
  const bool boundary = use_boundary(eps, m);
  const Real w = 27 * x, y = 27 * eps;
  QuarticValues v;
  HypResult f0 = hyp(Rational(1, 3), Rational(2, 3), 2, w, y, boundary);
  v.phi = x * (f0.value - 1);
  if (y == 0) {
    v.theta = (-42 * v.phi + 12 * x) / 3;
    v.dphi = v.ddphi = v.dtheta = infinity();
    v.error_bound = 50 * f0.error_bound;
    return v;
  }
  HypResult f1 = hyp(Rational(4, 3), Rational(5, 3), 3, w, y, boundary);
  HypResult f2 = hyp(Rational(7, 3), Rational(8, 3), 4, w, y, boundary);
  Real fw = f1.value / 9, fww = f2.value * 20 / 243;
  v.dphi = f0.value - 1 + 27 * x * fw;
  v.ddphi = 54 * fw + 729 * x * fww;
  v.theta = (-2 * y * v.dphi - 42 * v.phi + 12 * x) / 3;
  v.dtheta = 4 * v.dphi - 4 * (f0.value - 1);
  v.error_bound = 50 * (f0.error_bound + f1.error_bound + f2.error_bound);
  return v;
}

CubicValues cubic_values(const Real& t, const Real& eps, BoundaryMethod m) {
  if (t < 0 || eps < 0) throw std::domain_error("Psi is evaluated on [0, 1/64] only");
  const bool boundary = use_boundary(eps, m);
  const Real w = 64 * t, y = 64 * eps;
  CubicValues v;
  HypResult g0 = hyp(Rational(1, 4), Rational(3, 4), 2, w, y, boundary);
  v.psi1 = t * g0.value;
  if (y == 0) {
    v.psi2 = (1 - 48 * v.psi1) / 2;
    v.dpsi1 = v.ddpsi1 = v.dpsi2 = infinity();
    v.error_bound = 50 * g0.error_bound;
    return v;
  }
  HypResult g1 = hyp(Rational(5, 4), Rational(7, 4), 3, w, y, boundary);
  HypResult g2 = hyp(Rational(9, 4), Rational(11, 4), 4, w, y, boundary);
  Real fw = g1.value * 3 / 32, fww = g2.value * 35 / 512;
  v.dpsi1 = g0.value + 64 * t * fw;
  v.ddpsi1 = 128 * fw + 4096 * t * fww;
  v.psi2 = (1 - 48 * v.psi1 - y * v.dpsi1) / 2;
  v.dpsi2 = (16 * v.dpsi1 - y * v.ddpsi1) / 2;
  v.error_bound = 300 * (g0.error_bound + g1.error_bound + g2.error_bound);
  return v;
}

namespace {

const Real& pick(const QuarticValues& v, QuarticFn f) {
  switch (f) {
    case QuarticFn::phi: return v.phi;
    case QuarticFn::dphi: return v.dphi;
    case QuarticFn::ddphi: return v.ddphi;
    case QuarticFn::theta: return v.theta;
    default: return v.dtheta;
  }
}

const Real& pick(const CubicValues& v, CubicFn f) { return f == CubicFn::psi1 ? v.psi1 : v.psi2; }

}  // namespace

NumericValue phi_numeric(QuarticFn which, const Rational& x, const Precision& prec) {
  PrecisionScope scope(prec);
  if (x < 0 || x > Rational(1, 27)) throw std::domain_error("x must lie in [0, 1/27]");
  Real eps = to_real(Rational(1, 27) - x);
  QuarticValues v = quartic_values(to_real(x), eps);
  return {pick(v, which), v.error_bound, use_boundary(eps, BoundaryMethod::automatic) ? "boundary" : "direct"};
}

NumericValue psi_numeric(CubicFn which, const Rational& t, const Precision& prec) {
  PrecisionScope scope(prec);
  if (t < 0 || t > Rational(1, 64)) throw std::domain_error("t must lie in [0, 1/64]");
  Real eps = to_real(Rational(1, 64) - t);
  CubicValues v = cubic_values(to_real(t), eps);
  return {pick(v, which), v.error_bound, use_boundary(eps, BoundaryMethod::automatic) ? "boundary" : "direct"};
}

Real quartic_method_gap(QuarticFn which, const Real& x, const Real& eps) {
  return abs(pick(quartic_values(x, eps, BoundaryMethod::direct), which) -
             pick(quartic_values(x, eps, BoundaryMethod::boundary), which));
}

Real cubic_method_gap(CubicFn which, const Real& t, const Real& eps) {
  return abs(pick(cubic_values(t, eps, BoundaryMethod::direct), which) -
             pick(cubic_values(t, eps, BoundaryMethod::boundary), which));
}

CubicPartials cubic_partials(const Real& x, const Real& y) {
  Real d2 = 1 - 4 * y;
  Real t = x / (d2 * d2);
  return cubic_partials(x, y, Real(1) / 64 - t);
}

CubicPartials cubic_partials(const Real& x, const Real& y, const Real& t_gap) {
  if (!(y < Real(1) / 4)) throw std::domain_error("second argument must stay below 1/4");
  Real d = sqrt(1 - 4 * y);
  Real d3 = d * d * d;
  Real t = x / (d3 * d);
  CubicValues v = cubic_values(t, t_gap);
  CubicPartials p;
  p.phi1 = d3 * v.psi1 - x;
  p.phi2 = d * v.psi2 + (1 - d) * (1 - d) / 4;
  p.phi1_x = v.dpsi1 / d - 1;
  p.phi1_y = -6 * d * v.psi1 + 8 * t * d * v.dpsi1;
  p.phi2_x = v.dpsi2 / d3;
  p.phi2_y = (-2 * v.psi2 + 8 * t * v.dpsi2 + 1 - d) / d;
  return p;
}

Root solve_bracketed(const std::function<Real(const Real&)>& f, Real lo, Real hi, bool log_scale,
                     const std::function<Real(const Real&)>& df) {
  if (log_scale && !(lo > 0)) throw std::invalid_argument("log-scale bracket needs positive ends");
  Real flo = f(lo), fhi = f(hi);
  if (flo == 0) return {lo, Real(0), 0};
  if (fhi == 0) return {hi, Real(0), 0};
  if ((flo > 0) == (fhi > 0)) throw NumericFailure("root is not bracketed");
  const bool lo_positive = flo > 0;
  int it = 0;
  auto mid = [&] { return log_scale ? Real(sqrt(lo * hi)) : Real((lo + hi) / 2); };
  auto narrow = [&](const Real& x, const Real& fx) {
    if ((fx > 0) == lo_positive) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  };
  const Real coarse = Real(1) / 100000000;
  while (abs(hi - lo) > coarse * std::max(Real(abs(lo)), Real(abs(hi))) && it < 2000) {
    Real m = mid();
    narrow(m, f(m));
    ++it;
  }
  const Real tol = digits_tolerance(8);
  Real x = mid();
  if (df) {
    for (int k = 0; k < 200; ++k, ++it) {
      Real fx = f(x);
      if (fx == 0) return {x, Real(0), it};
      narrow(x, fx);
      Real d = df(x);
      Real next = d != 0 ? Real(x - fx / d) : mid();
      if (!(next > std::min(lo, hi) && next < std::max(lo, hi))) next = mid();
      bool done = abs(next - x) <= tol * abs(x);
      x = next;
      if (done) break;
    }
  } else {
    // Illinois variant of regula falsi.
    int side = 0;
    for (int k = 0; k < 400; ++k, ++it) {
      Real next = (lo * fhi - hi * flo) / (fhi - flo);
      Real fx = f(next);
      x = next;
      if (fx == 0) break;
      if ((fx > 0) == lo_positive) {
        lo = next;
        flo = fx;
        if (side == -1) fhi /= 2;
        side = -1;
      } else {
        hi = next;
        fhi = fx;
        if (side == 1) flo /= 2;
        side = 1;
      }
      if (abs(hi - lo) <= tol * abs(x)) break;
    }
  }
  return {x, abs(f(x)), it};
}

Real quartic_affine_radius(const Real& u) { return (1 + u) / 27 - u * sqrt(Real(3)) / (12 * pi()); }

namespace {

SingularProfile quartic_profile(const Real& u) {
  SingularProfile pr;
  pr.p = 4;
  pr.u = u;
  pr.sigma = 0;
  pr.regime = regime_of(u);
  pr.subexp = subexp_for(pr.regime);
  pr.has_constant = true;
  if (u <= 0) {
    pr.tau = Real(1) / 27;
    pr.rho = quartic_affine_radius(u);
    QuarticValues v = quartic_values(pr.tau, Real(0));
    pr.residual = abs(pr.rho - (pr.tau - u * v.phi));
    if (u == 0)
      pr.c_u = 2 / (9 * sqrt(Real(3)) * pi());
    else
      pr.c_u = 72 * sqrt(Real(3)) * pi() * pr.rho * pr.rho * pr.rho / (u * u);
    pr.route = "affine radius, tau = 1/27";
    return pr;
  }
  auto f = [&](const Real& e) -> Real { return 1 - u * quartic_values(Real(1) / 27 - e, e).dphi; };
  auto df = [&](const Real& e) -> Real { return u * quartic_values(Real(1) / 27 - e, e).ddphi; };
  const Real floor_eps = mp::pow(Real(10), -static_cast<int>(Real::default_precision()) + 10);
  Real lo = Real(1) / 10000000000LL;
  while (f(lo) > 0) {
    lo /= Real(10000000000LL);
    if (lo < floor_eps) throw NumericFailure("tau is within working precision of 1/27; raise the digits");
  }
  Root r = solve_bracketed(f, lo, Real(1) / 27 * (1 - Real(1) / 1000000), true, df);
  pr.tau = Real(1) / 27 - r.x;
  QuarticValues v = quartic_values(pr.tau, r.x);
  pr.rho = pr.tau - u * v.phi;
  pr.residual = r.residual;
  pr.c_u = v.dtheta * sqrt(pr.rho * pr.rho * pr.rho / (2 * pi() * u * v.ddphi));
  pr.route = "1 - u Phi'(tau) = 0 in 1/27 - tau";
  return pr;
}

Real rho3_formula(const Real& u) {
  Real P = pi();
  Real P2 = P * P;
  Real K2 = P2 * (1 - u * u) + 8 * u * u;
  Real K3 = K2 * sqrt(K2);
  Real num = 3 * (1 - u * u) * (1 - u * u) + 96 * u * u * (1 - u * u) / P2 + 512 * u * u * u * u / (P2 * P2) +
             16 * u * sqrt(Real(2)) * K3 / (P2 * P2);
  Real one = 1 + u;
  return num / (192 * one * one * one);
}

}  // namespace

CubicClosed cubic_closed(const Real& u) {
  if (u < -1 || u > 0) throw std::domain_error("closed cubic radius needs u in [-1, 0]");
  CubicClosed c;
  Real P = pi(), r2 = sqrt(Real(2));
  Real K = sqrt(P * P * (1 - u * u) + 8 * u * u);
  c.delta = P * (1 - u) / (K - 2 * r2 * u);
  Real d = c.delta, d2 = d * d;
  c.tau = d2 * d2 / 64;
  c.sigma = (1 - d2) / 4;
  c.rho_delta = (1 + u) * d2 * d2 / 64 - u * d2 * d * r2 / (24 * P);
  c.a1 = (1 + u) * d2 / 4 - u * r2 / P * d + (u - 1) / 4;
  c.extrapolation_error = 0;
  if (1 + u != 0) {
    c.rho = rho3_formula(u);
    return c;
  }
  // 0/0 at u = -1: Neville extrapolation of eta -> rho(-1 + eta) to eta = 0.
  const int levels = 10;
  std::vector<Real> eta(levels), tab(levels);
  for (int k = 0; k < levels; ++k) {
    eta[k] = Real(1) / (16 * (1 << k));
    tab[k] = rho3_formula(-1 + eta[k]);
  }
  Real prev = tab[0];
  for (int m = 1; m < levels; ++m) {
    for (int k = levels - 1; k >= m; --k) tab[k] = (eta[k - m] * tab[k] - eta[k] * tab[k - 1]) / (eta[k - m] - eta[k]);
    c.extrapolation_error = abs(tab[levels - 1] - prev);
    prev = tab[levels - 1];
  }
  c.rho = tab[levels - 1];
  return c;
}

Real cubic_beta(const Real& u) {
  Real P = pi();
  Real K = sqrt(P * P * (1 - u * u) + 8 * u * u);
  return (4 * u - 3 * sqrt(Real(2)) * K) / (2 * u * u);
}

Real cubic_alpha(const Real& u) {
  if (!(u < 0) || u < -1) throw std::domain_error("alpha is defined for u in [-1, 0)");
  Real P = pi();
  Real K = sqrt(P * P * (1 - u * u) + 8 * u * u);
  CubicClosed c = cubic_closed(u);
  Real ub = 1 / u;
  Real aS = 4 * P / (c.delta * K);
  Real aR = -P * c.delta / (2 * K);
  return -2 * ub + ub * aS - (1 + ub) * (2 * aR + 2 * c.sigma * aS);
}

CubicStep s_tilde_radius_cubic(const Real& u, const Precision& prec) {
  PrecisionScope scope(prec);
  if (!(u > 0)) throw std::domain_error("the S-tilde radius is defined for u > 0");
  auto eval = [&](const Real& e, Real* delta_out) -> Real {
    Real t = Real(1) / 64 - e;
    CubicValues v = cubic_values(t, e);
    Real d = u / (1 + u) * (1 - 2 * v.psi2 + 8 * t * v.dpsi2);
    if (delta_out) *delta_out = d;
    return 1 - d * d - 4 * u * d * v.psi2 - u * (1 - d) * (1 - d);
  };
  auto f = [&](const Real& e) -> Real { return eval(e, nullptr); };
  const Real floor_eps = mp::pow(Real(10), -static_cast<int>(Real::default_precision()) + 10);
  Real lo = Real(1) / 10000000000LL;
  while (f(lo) > 0) {
    lo /= Real(10000000000LL);
    if (lo < floor_eps) throw NumericFailure("S-tilde contact is within working precision of 1/64");
  }
  Root r = solve_bracketed(f, lo, Real(1) / 64 * (1 - Real(1) / 1000000), true);
  CubicStep s;
  s.t = Real(1) / 64 - r.x;
  eval(r.x, &s.delta);
  Real d2 = s.delta * s.delta;
  s.rho_tilde = s.t * d2 * d2;
  s.sigma_tilde = (1 - d2) / 4;
  s.residual = r.residual;
  return s;
}

Real s_tilde_value(const Real& z, const Real& u, const CubicStep& step) {
  if (z > step.rho_tilde) throw std::domain_error("S-tilde is evaluated up to its radius only");
  auto g = [&](const Real& s) -> Real { return s - u * cubic_partials(z, s).phi2; };
  auto dg = [&](const Real& s) -> Real { return 1 - u * cubic_partials(z, s).phi2_y; };
  if (z == 0) return Real(0);
  Real hi = step.sigma_tilde;
  if (g(hi) <= 0) return hi;
  return solve_bracketed(g, Real(0), hi, false, dg).x;
}

namespace {

SingularProfile cubic_profile(const Real& u, const Precision& prec) {
  SingularProfile pr;
  pr.p = 3;
  pr.u = u;
  pr.regime = regime_of(u);
  pr.subexp = subexp_for(pr.regime);
  pr.has_constant = false;
  pr.c_u = std::numeric_limits<Real>::quiet_NaN();
  if (u <= 0) {
    CubicClosed c = cubic_closed(u);
    pr.rho = c.rho;
    pr.tau = c.tau;
    pr.sigma = c.sigma;
    pr.residual = std::max(Real(abs(c.a1)), Real(abs(c.rho - c.rho_delta)));
    pr.route = u == -1 ? "closed radius, Richardson limit at u = -1" : "closed radius, 64 tau = (1 - 4 sigma)^2";
    return pr;
  }
  CubicStep step = s_tilde_radius_cubic(u, prec);
  auto h = [&](const Real& z) -> Real {
    Real s = s_tilde_value(z, u, step);
    CubicPartials q = cubic_partials(z, s);
    Real sp = u * q.phi2_x / (1 - u * q.phi2_y);
    return 1 - u * (q.phi1_x + sp * q.phi1_y);
  };
  Root r = solve_bracketed(h, step.rho_tilde / 1000000, step.rho_tilde * (1 - Real(1) / 1000000000000LL), false);
  pr.tau = r.x;
  pr.sigma = s_tilde_value(pr.tau, u, step);
  CubicPartials q = cubic_partials(pr.tau, pr.sigma);
  pr.rho = pr.tau - u * q.phi1;
  Real fixed_point = abs(pr.sigma - u * q.phi2);
  Real jacobian = abs((1 - u * q.phi1_x) * (1 - u * q.phi2_y) - u * u * q.phi1_y * q.phi2_x);
  pr.residual = std::max({step.residual, r.residual, fixed_point, jacobian});
  pr.route = "S-tilde contact, then 1 = u (Phi1_x + S-tilde' Phi1_y)";
  return pr;
}

}  // namespace

SingularProfile radius(int p, const Real& u, const Precision& prec) {
  PrecisionScope scope(prec);
  if (u < -1) throw std::domain_error("u must be at least -1");
  if (p == 4) return quartic_profile(u);
  if (p == 3) return cubic_profile(u, prec);
  throw std::domain_error("radius is implemented for p = 3 and p = 4");
}

Real asymptotic_constant(int p, const Real& u, const Precision& prec) {
  if (p == 3) {
    if (u < 0) throw std::domain_error("p = 3, u < 0: no coefficient asymptotics; use the beta of the singular expansion");
    throw std::domain_error("p = 3: the constant c_u is not given in closed form");
  }
  if (p != 4) throw std::domain_error("asymptotic constants are implemented for p = 4");
  return radius(p, u, prec).c_u;
}

std::vector<RatioRow> coefficient_asymptotic_check(int p, const Rational& u, const std::vector<int>& ns,
                                                   const Precision& prec) {
  if (p != 4) throw std::domain_error("coefficient asymptotics are checked for p = 4");
  if (ns.empty()) return {};
  int nmax = *std::max_element(ns.begin(), ns.end());
  if (*std::min_element(ns.begin(), ns.end()) < 2) throw std::invalid_argument("n must be at least 2");
  if (nmax > 20000) throw ScaleGuard("coefficient order above 20000", nmax);
  PrecisionScope scope(prec);
  Real ur = to_real(u);
  SingularProfile pr = radius(4, ur, prec);
  std::vector<Real> scaled(nmax + 1);
  if (u == 0) {
    std::vector<Integer> f = spanning_tree_counts(4, nmax);
    for (int n = 2; n <= nmax; ++n) {
      Real v;
      mpfr_set_z(v.backend().data(), f[n].get_mpz_t(), MPFR_RNDN);
      scaled[n] = v * mp::pow(pr.rho, n);
    }
  } else {
    QuarticSeries<Real> q = solve_quartic<Real>(nmax, ur, pr.rho);
    for (int n = 2; n <= nmax; ++n) scaled[n] = q.Fprime[n - 1] * pr.rho / n;
  }
  Real a = pr.regime == Regime::positive_u ? Real(5) / 2 : Real(3);
  int b = pr.regime == Regime::negative_u ? 2 : 0;
  std::vector<RatioRow> rows;
  for (int n : ns) {
    Real law = pr.c_u * mp::pow(Real(n), -a);
    if (b) law /= mp::pow(log(Real(n)), b);
    Real ratio = scaled[n] / law;
    rows.push_back({n, scaled[n], ratio, abs(ratio - 1)});
  }
  return rows;
}

namespace {

template <class T>
Real to_r(const T& x) {
  if constexpr (std::is_same_v<T, Real>)
    return x;
  else
    return Real(static_cast<long double>(x));
}

template <class T>
ProbeReport probe_impl(const Real& u, const std::vector<Real>& fracs, const ProbeOptions& opt) {
  ProbeReport rep;
  rep.rho = quartic_affine_radius(u);
  const T rho_t = static_cast<T>(rep.rho);
  const T u_t = static_cast<T>(u);
  Real xmax = *std::max_element(fracs.begin(), fracs.end());
  auto bound_at = [&](const std::vector<T>& c, int N, const Real& x) -> Real {
    int from = std::max(1, N - std::max(10, N / 20));
    Real cmax = 0;
    for (int m = from; m < N; ++m) cmax = std::max(cmax, Real(abs(to_r(c[m]))));
    return cmax * mp::pow(x, N) / (1 - x) / rep.rho;
  };
  int N = std::min(2000, opt.max_order);
  for (;;) {
    QuarticSeries<T> q = solve_quartic<T>(N, u_t, rho_t);
    // F'' in w = z/rho: rho^-1 sum (m+1) [w^(m+1)]F' w^m
    std::vector<T> c(N);
    for (int m = 0; m < N; ++m) c[m] = q.Fprime[m + 1] * static_cast<T>(m + 1);
    Real worst = bound_at(c, N, xmax);
    if (worst <= opt.tolerance) {
      rep.order = N;
      Real ub = 1 / u;
      Real K = opt.constant * sqrt(Real(3)) * pi() * ub * ub * rep.rho;
      for (const Real& x : fracs) {
        Real sum = 0, xp = 1;
        for (int m = 0; m < N; ++m) {
          sum += to_r(c[m]) * xp;
          xp *= x;
        }
        ProbeRow row;
        row.frac = x;
        row.lhs = sum / rep.rho + 4 * ub;
        row.rhs = K / mp::pow(log(1 - x), opt.log_power);
        row.deviation = abs(row.lhs / row.rhs - 1);
        row.tail_bound = bound_at(c, N, x);
        rep.rows.push_back(row);
      }
      return rep;
    }
    // scaled coefficients decay roughly like 1/m; solve for the order that meets the tolerance
    Real need = log(opt.tolerance / worst) / log(xmax);
    int next = N + static_cast<int>(need.convert_to<double>() * 1.1) + 100;
    if (next > opt.max_order) {
      throw ScaleGuard("log probe needs about " + std::to_string(next) + " terms for the requested tail bound",
                       static_cast<double>(next));
    }
    N = next;
  }
}

}  // namespace

ProbeReport log_singularity_probe(const Rational& u, const std::vector<Real>& fracs, const Precision& prec,
                                  const ProbeOptions& opt) {
  if (!(u < 0) || u < -1) throw std::domain_error("the log probe needs u in [-1, 0)");
  if (fracs.empty()) throw std::invalid_argument("no sample points");
  PrecisionScope scope(prec);
  for (const Real& x : fracs)
    if (!(x > 0 && x < 1)) throw std::domain_error("z/rho must lie in (0, 1)");
  Real ur = to_real(u);
  if (prec.working_digits <= 18) return probe_impl<long double>(ur, fracs, opt);
  return probe_impl<Real>(ur, fracs, opt);
}

CubicProbe cubic_expansion_probe(const Real& u, int min_exp, int max_exp, const Precision& prec) {
  PrecisionScope scope(prec);
  if (!(u < 0) || !(u > -1)) throw std::domain_error("the cubic expansion probe needs u in (-1, 0)");
  if (min_exp < 1 || max_exp < min_exp) throw std::invalid_argument("bad exponent range");
  CubicClosed cc = cubic_closed(u);
  CubicProbe out;
  out.rho = cc.rho_delta;
  out.alpha = cubic_alpha(u);
  out.beta = cubic_beta(u);
  const Real ub = 1 / u;
  const Real d02 = cc.delta * cc.delta;
  const Real R0 = d02 * d02 / 64, S0 = cc.sigma;
  out.fprime_rho = 2 * out.rho * ub + ub * S0 - (1 + ub) * (2 * R0 + S0 * S0);

  // unknowns r = R0 - R, s = S0 - S
  Real r = R0, s = S0;
  auto solve_at = [&](const Real& x) {
    Real z = out.rho - x;
    Real last = -1;
    for (int it = 0; it < 100; ++it) {
      Real R = R0 - r, S = S0 - s;
      Real d2 = d02 + 4 * s;
      Real gap = (4 * s * (d2 + d02) + 64 * r) / (64 * d2 * d2);
      CubicPartials q = cubic_partials(R, S, gap);
      Real e1 = R - z - u * q.phi1, e2 = S - u * q.phi2;
      Real a = 1 - u * q.phi1_x, b = -u * q.phi1_y, c = -u * q.phi2_x, d = 1 - u * q.phi2_y;
      Real det = a * d - b * c;
      Real dR = -(d * e1 - b * e2) / det, dS = -(a * e2 - c * e1) / det;
      Real size = abs(dR) + abs(dS);
      if (size <= x * digits_tolerance(12)) return;
      if (it > 8 && last >= 0 && size >= last && size <= x * digits_tolerance(30)) return;
      last = size;
      Real step = 1;
      bool moved = false;
      for (int k = 0; k < 60 && !moved; ++k, step /= 2) {
        Real rn = r - step * dR, sn = s - step * dS;
        Real dn = d02 + 4 * sn;
        if (dn > 0 && 4 * sn * (dn + d02) + 64 * rn > 0 && R0 - rn >= 0) {
          r = rn;
          s = sn;
          moved = true;
        }
      }
      if (!moved) break;
    }
    throw NumericFailure("Newton for (R, S) did not converge near the radius");
  };
  for (int k = 1; k <= 36; ++k) solve_at(out.rho * (40 - k) / 40);
  for (int j = 2; j <= 2 * max_exp; ++j) {
    Real x = out.rho * mp::pow(Real(10), -Real(j) / 2);
    if (j > 2) {
      r /= sqrt(Real(10));
      s /= sqrt(Real(10));
    }
    solve_at(x);
    if (j < 2 * min_exp) continue;
    Real diff = -2 * ub * x - ub * s + (1 + ub) * (2 * r + s * (2 * S0 - s));
    CubicProbeRow row;
    row.x = x;
    row.g = diff / x;
    row.target = (row.g - out.alpha) * log(x);
    out.rows.push_back(row);
  }
  const size_t w = 5;
  for (size_t i = 0; i + w <= out.rows.size(); i += 2) {
    Real num = 0, den = 0;
    for (size_t k = i; k < i + w; ++k) {
      Real v = 1 / log(out.rows[k].x);
      num += (out.rows[k].g - out.alpha) * v;
      den += v * v;
    }
    CubicFit fit;
    fit.x_hi = out.rows[i].x / out.rho;
    fit.x_lo = out.rows[i + w - 1].x / out.rho;
    fit.beta_fit = num / den;
    fit.deviation = abs(fit.beta_fit / out.beta - 1);
    out.fits.push_back(fit);
  }
  return out;
}

void write_profiles_csv(std::ostream& os, const std::vector<SingularProfile>& rows) {
  os << "p,u,rho,tau,sigma,c_u,regime,subexp,residual\n";
  for (const auto& r : rows) {
    os << r.p << ',' << sci(r.u, 6) << ',' << sci(r.rho, 16) << ',' << sci(r.tau, 16) << ',' << sci(r.sigma, 16) << ','
       << (r.has_constant ? sci(r.c_u, 16) : std::string("")) << ',' << describe(r.regime) << ',' << describe(r.subexp)
       << ',' << sci(r.residual, 3) << '\n';
  }
}

void write_ratios_csv(std::ostream& os, const std::vector<RatioRow>& rows) {
  os << "n,f_n_rho_n,ratio,deviation\n";
  for (const auto& r : rows)
    os << r.n << ',' << sci(r.scaled_coeff, 16) << ',' << sci(r.ratio, 16) << ',' << sci(r.deviation, 6) << '\n';
}

void write_probe_csv(std::ostream& os, const ProbeReport& rep) {
  os << "z_over_rho,lhs,rhs,deviation,tail_bound\n";
  for (const auto& r : rep.rows)
    os << sci(r.frac, 6) << ',' << sci(r.lhs, 16) << ',' << sci(r.rhs, 16) << ',' << sci(r.deviation, 6) << ','
       << sci(r.tail_bound, 3) << '\n';
}

void write_cubic_probe_csv(std::ostream& os, const CubicProbe& rep) {
  os << "x_over_rho,g,g_minus_alpha_times_log\n";
  for (const auto& r : rep.rows) os << sci(r.x / rep.rho, 6) << ',' << sci(r.g, 16) << ',' << sci(r.target, 16) << '\n';
}

}  // namespace fm
