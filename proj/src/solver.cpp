#include "forestmaps/solver.hpp"

namespace fm {

void check_mode(const UMode& mode, int order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  if (mode.symbolic && order > kSymbolicOrderLimit)
    throw std::invalid_argument("symbolic u is limited to order " + std::to_string(kSymbolicOrderLimit) +
                                "; pass a rational value for u to go higher");
}

namespace {

ZSeries over_u(const ZSeries& s, const UPoly&) { return div_u(s); }

QSeries over_u(const QSeries& s, const Rational& u) {
  if (sgn(u) == 0) throw std::domain_error("division by u at u = 0");
  return s.scaled(Rational(1) / u);
}

template <class C>
SolverOutput<C> pipeline(int p, int order, const C& u) {
  TreeSeries ts = build_phi_theta(p, 2 * order);
  ImplicitSystem<C> sys(ts, order, u);
  SolverOutput<C> out;
  out.p = p;
  out.order = order;
  out.R = sys.R();
  out.S = sys.S();
  out.S_tilde = ImplicitSystem<C>::with_r_equal_z(ts, order, u).S();
  out.Fprime = sys.eval(ts.theta);
  out.F = integral(out.Fprime).truncated(order);

  Series<C> z = Series<C>::monomial(C(1), 1, order);
  Series<C> q = sys.eval(quasi_sum(p, 2 * order));
  Series<C> o = sys.eval(outside_sum(p, 2 * order));
  Series<C> zS = z * out.S;
  Series<C> H = over_u(z * out.R + zS * out.S - z * z, u);
  H -= (out.S * q).scaled(2);
  H -= o;
  out.H = H;
  if (p == 3) {
    Series<C> inner = over_u(zS, u) - q;
    out.G = (u + C(1)) * inner;
  } else {
    out.G = Series<C>(order);
  }
  return out;
}

}  // namespace

SolverOutput<UPoly> solve_symbolic(int p, int order) {
  check_mode(UMode::indeterminate(), order);
  return pipeline<UPoly>(p, order, UPoly::u());
}

SolverOutput<Rational> solve_fixed(int p, int order, const Rational& u) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  if (sgn(u) != 0) return pipeline<Rational>(p, order, u);
  // G and H carry a 1/u prefactor, so u = 0 goes through the polynomial route.
  auto sym = solve_symbolic(p, order);
  SolverOutput<Rational> out;
  out.p = p;
  out.order = order;
  out.R = specialize(sym.R, u);
  out.S = specialize(sym.S, u);
  out.S_tilde = specialize(sym.S_tilde, u);
  out.F = specialize(sym.F, u);
  out.Fprime = specialize(sym.Fprime, u);
  out.G = specialize(sym.G, u);
  out.H = specialize(sym.H, u);
  return out;
}

ZSeries solve_s_tilde(int p, int order) {
  check_mode(UMode::indeterminate(), order);
  TreeSeries ts = build_phi_theta(p, 2 * order);
  return ImplicitSystem<UPoly>::with_r_equal_z(ts, order, UPoly::u()).S();
}

ZSeries phi2_y_at_s_tilde(int p, int order) {
  check_mode(UMode::indeterminate(), order);
  // the y-derivative reaches one grade further than the solver needs
  TreeSeries ts = build_phi_theta(p, 2 * order + 1);
  Bivariate d(ts.phi2.order());
  for (const auto& t : ts.phi2.terms(ts.order))
    if (t.j >= 1) d.set(t.i, t.j - 1, t.c * t.j);
  return ImplicitSystem<UPoly>::with_r_equal_z(ts, order, UPoly::u()).eval(d);
}

namespace {

template <class C>
Series<C> explicit_F(int order, const C& u) {
  std::vector<Rational> a(order + 1, Rational(0)), b(order + 1, Rational(0));
  for (int i = 2; i <= order; ++i) {
    unsigned k = static_cast<unsigned>(i);
    a[i] = Rational(factorial(3 * k - 3), factorial(k - 2) * factorial(k) * factorial(k));
    a[i].canonicalize();
  }
  for (int j = 1; j <= order; ++j) {
    unsigned k = static_cast<unsigned>(j);
    b[j] = Rational(factorial(3 * k), factorial(k) * factorial(k) * factorial(k));
    b[j].canonicalize();
  }
  std::vector<C> outer(order + 1, C(0));
  for (int m = 3; m <= order; ++m) {
    Rational first = 4 * a[m - 1] / m;
    Rational second = 0;
    for (int i = 2; i <= m - 2; ++i) second += a[i] * b[m - 1 - i];
    second = 4 * second / m;
    outer[m] = ring_ops<C>::from(first) - u * ring_ops<C>::from(second);
  }
  TreeSeries ts = build_phi_theta(4, 2 * order);
  ImplicitSystem<C> sys(ts, order, u);
  return compose(outer, sys.R());
}

}  // namespace

ZSeries series_F_explicit_4valent(int order) {
  check_mode(UMode::indeterminate(), order);
  return explicit_F<UPoly>(order, UPoly::u());
}

QSeries series_F_explicit_4valent(int order, const Rational& u) { return explicit_F<Rational>(order, u); }

std::vector<Integer> spanning_tree_counts(int p, int order) {
  std::vector<Integer> f(order + 1, Integer(0));
  for (int l = 1;; ++l) {
    if (p % 2 == 1 && l % 2 == 1) continue;
    int half = (p - 2) * l / 2;
    int n = 2 + half;
    if (n > order) break;
    unsigned ul = static_cast<unsigned>(l);
    f[n] = p * factorial((p - 1) * ul) /
           (factorial(ul - 1) * factorial(static_cast<unsigned>(1 + half)) * factorial(static_cast<unsigned>(2 + half)));
  }
  return f;
}

ZSeries mu_expansion(const ZSeries& s, bool divide_by_u) { return to_mu(divide_by_u ? div_u(s) : s); }

std::vector<CoeffTable> coefficient_tables(int p, int order, const UMode& mode) {
  check_mode(mode, order);
  auto table = [](const std::string& name, const auto& s) {
    CoeffTable t{name, {}};
    for (const auto& c : s.coeffs()) t.coeffs.push_back(UPoly(c));
    return t;
  };
  std::vector<CoeffTable> out;
  auto fill = [&](const auto& o) {
    out.push_back(table("F", o.F));
    out.push_back(table("Fprime", o.Fprime));
    out.push_back(table("R", o.R));
    out.push_back(table("S", o.S));
    out.push_back(table("S_tilde", o.S_tilde));
    if (p == 3) out.push_back(table("G", o.G));
    out.push_back(table("H", o.H));
  };
  if (mode.symbolic)
    fill(solve_symbolic(p, order));
  else
    fill(solve_fixed(p, order, mode.value));
  return out;
}

}  // namespace fm
