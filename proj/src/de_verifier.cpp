#include "forestmaps/de_verifier.hpp"

#include "forestmaps/tree_counts.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fm {

namespace detail {
const std::map<std::string, std::string>& de_sources();
}

namespace {

const std::vector<std::pair<Identity, std::string>> kIdentityNames = {
    {Identity::phi_second, "phi_second"},   {Identity::thetrat, "thetrat"},
    {Identity::lambda_rel, "lambda_rel"},   {Identity::ed_cubic, "ed_cubic"},
    {Identity::theta_cubic_rel, "theta_cubic_rel"}, {Identity::pp1, "pp1"},
    {Identity::pp2, "pp2"},                 {Identity::rs_prime_cubic, "RS_prime_cubic"},
    {Identity::g_cubic_rel, "G_cubic_rel"},
};

const std::vector<std::pair<DeName, std::string>> kDeNames = {
    {DeName::fprime_4valent, "de_4valent_Fprime"},
    {DeName::h_4valent, "de_4valent_H"},
    {DeName::w_cubic, "de_cubic_W"},
};

const char* data_key(DeName de) {
  switch (de) {
    case DeName::fprime_4valent: return "fprime_4valent";
    case DeName::h_4valent: return "h_4valent";
    case DeName::w_cubic: return "w_cubic";
  }
  return "";
}

ZSeries mono(const UPoly& c, int k, int order) { return ZSeries::monomial(c, k, order); }

ZSeries lift(const QSeries& s) {
  ZSeries out(s.order());
  for (int i = 0; i <= s.order(); ++i) out[i] = UPoly(s[i]);
  return out;
}

ZSeries lift(const std::vector<Rational>& c, int order) {
  ZSeries out(order);
  for (int i = 0; i <= order && i < static_cast<int>(c.size()); ++i) out[i] = UPoly(c[i]);
  return out;
}

// x -> z^2, y -> u z
ZSeries flatten(const Bivariate& b) {
  ZSeries out(b.order());
  for (const auto& t : b.terms(b.order())) {
    std::vector<Rational> c(t.j + 1, Rational(0));
    c[t.j] = t.c;
    out[2 * t.i + t.j] += UPoly(std::move(c));
  }
  return out;
}

// (1 + w)^a through w^order
std::vector<Rational> binomial_series(const Rational& a, int order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (int k = 1; k <= order; ++k) c[k] = c[k - 1] * (a - (k - 1)) / k;
  return c;
}

void apply(std::vector<Rational>& v, const std::optional<Perturbation>& p) {
  if (!p) return;
  if (p->index < 0 || p->index >= static_cast<int>(v.size())) throw std::out_of_range("perturbation index outside the input");
  v[p->index] += p->delta;
}

template <class C>
void apply(Series<C>& s, const std::optional<Perturbation>& p) {
  if (!p) return;
  if (p->index < 0 || p->index > s.order()) throw std::out_of_range("perturbation index outside the input");
  s[p->index] += ring_ops<C>::from(p->delta);
}

void finish(ResidualReport& r) {
  r.tested_order = r.residuals.empty() ? 0 : r.residuals.front().order();
  int first = -1;
  for (const auto& s : r.residuals) {
    r.tested_order = std::min(r.tested_order, s.order());
    int v = s.valuation();
    if (v <= s.order() && (first < 0 || v < first)) first = v;
  }
  r.first_nonzero = first;
  r.is_zero = first < 0;
}

std::vector<ZSeries> quartic_identity(Identity id, int n, const std::optional<Perturbation>& p) {
  TreeSeries ts = build_phi_theta(4, 2 * n);
  std::vector<Rational> phi(ts.phi_x.begin(), ts.phi_x.begin() + n + 1);
  apply(phi, p);
  ZSeries Phi = lift(phi, n);
  ZSeries x = mono(1, 1, n);
  ZSeries x2 = mono(1, 2, n);
  ZSeries lin = mono(27, 2, n) - x;  // x(27x - 1)
  switch (id) {
    case Identity::phi_second: {
      ZSeries d2 = derivative(derivative(Phi));
      return {lin * d2 + Phi.scaled(6) + x.scaled(6)};
    }
    case Identity::thetrat: {
      ZSeries theta = lift(std::vector<Rational>(ts.theta_x.begin(), ts.theta_x.begin() + n + 1), n);
      ZSeries slope = mono(27, 1, n) - mono(1, 0, n);
      return {theta.scaled(3) - (slope * derivative(Phi)).scaled(2) + Phi.scaled(42) - x.scaled(12)};
    }
    case Identity::lambda_rel: {
      ZSeries lam = lift(lambda_4valent(n), n);
      ZSeries w = mono(1, 0, n) - mono(24, 1, n);
      return {lam.scaled(30) - lin * derivative(Phi) - w * Phi - x2.scaled(3)};
    }
    default: break;
  }
  throw std::logic_error("not a quartic identity");
}

std::vector<ZSeries> psi_identity(int n, const std::optional<Perturbation>& p) {
  PsiSeries ps = build_psi(n);
  apply(ps.psi1, p);
  ZSeries P1 = lift(ps.psi1, n), P2 = lift(ps.psi2, n);
  ZSeries one = mono(1, 0, n), z = mono(1, 1, n);
  ZSeries a = one - mono(64, 1, n);
  ZSeries first = a * derivative(P1) + P1.scaled(48) + P2.scaled(2) - one;
  ZSeries second = z * a * derivative(P2) + P1.scaled(6) + (z * P2).scaled(16) - z.scaled(8);
  return {first, second};
}

std::vector<ZSeries> cubic_tree_identity(Identity id, int n, const std::optional<Perturbation>& p) {
  TreeSeries ts = build_phi_theta(3, n);
  if (id == Identity::theta_cubic_rel) {
    Bivariate theta = ts.theta;
    if (p) theta.set(p->index, 0, theta.at(p->index, 0) + p->delta);
    ZSeries y = mono(UPoly::u(), 1, n);
    ZSeries x = mono(1, 2, n);
    ZSeries one = mono(1, 0, n);
    return {flatten(theta) + flatten(ts.phi1).scaled(2) - (one - y) * flatten(ts.phi2) + x.scaled(2) + y * y};
  }
  PsiSeries ps = build_psi(n);
  ZSeries w = mono(UPoly::u() * Rational(-4), 1, n);  // -4y
  ZSeries root = compose(binomial_series(Rational(1, 2), n), w);
  ZSeries t = mono(1, 2, n) * compose(binomial_series(-2, n), w);
  if (id == Identity::pp1) {
    apply(ps.psi1, p);
    ZSeries outer = compose(binomial_series(Rational(3, 2), n), w);
    return {flatten(ts.phi1) - outer * compose(ps.psi1, t) + mono(1, 2, n)};
  }
  apply(ps.psi2, p);
  ZSeries gap = mono(1, 0, n) - root;
  return {flatten(ts.phi2) - root * compose(ps.psi2, t) - (gap * gap).scaled(Rational(1, 4))};
}

std::vector<ZSeries> rs_identity(Identity id, int n, const std::optional<Perturbation>& p) {
  auto sol = solve_symbolic(3, n);
  UPoly u = UPoly::u(), u1 = UPoly::u() + UPoly(1);
  ZSeries z = mono(1, 1, n), one = mono(1, 0, n);
  ZSeries R = sol.R, S = sol.S;
  if (id == Identity::g_cubic_rel) {
    ZSeries G = sol.G;
    apply(G, p);
    ZSeries RS = R * S;
    ZSeries inner = z - R + (z * S).scaled(6) + (u1 * RS).scaled(2);
    return {(u * G).scaled(10) - u1 * inner};
  }
  apply(R, p);
  ZSeries RS = R * S;
  ZSeries D = (z * z).scaled(36) + (mono(24, 1, n) - one + mono(u * Rational(24), 1, n)) * R +
              (u1 * RS).scaled(4) - (u1 * u1 * RS * S).scaled(4) + (u1 * u1 * R * R).scaled(4);
  ZSeries num_r = R * (z.scaled(48) - one + (u1 * R).scaled(16) + ((u + UPoly(3)) * S).scaled(2) -
                       (u1 * S * S).scaled(8));
  ZSeries num_s = (z.scaled(3) + (u - UPoly(3)) * R - (z * S).scaled(12) + (u1 * RS).scaled(4)).scaled(-2);
  return {D * derivative(R) - num_r, D * derivative(S) - num_s};
}

template <class C>
C upow(const C& u, int b) {
  C r(1);
  for (int i = 0; i < b; ++i) r = r * u;
  return r;
}

template <class C>
Series<C> residual_impl(const std::vector<DeTerm>& terms, const Series<C>& y, const C& u) {
  int k = differential_order(terms);
  int top = y.order() - k;
  if (top < 0) throw std::invalid_argument("input order " + std::to_string(y.order()) + " is below the differential order");
  std::vector<Series<C>> ders{y};
  for (int d = 1; d <= k; ++d) ders.push_back(derivative(ders.back()));
  for (auto& s : ders) s = s.truncated(top);
  Series<C> out(top);
  for (const auto& t : terms) {
    if (t.z_pow > top) continue;
    C c = ring_ops<C>::from(t.coeff) * upow(u, t.u_pow);
    Series<C> prod = Series<C>::monomial(c, t.z_pow, top);
    for (int d : t.derivs) prod = prod * ders[d];
    out += prod;
  }
  return out;
}

}  // namespace

std::string name_of(Identity id) {
  for (const auto& [k, v] : kIdentityNames)
    if (k == id) return v;
  return "?";
}

std::string name_of(DeName de) {
  for (const auto& [k, v] : kDeNames)
    if (k == de) return v;
  return "?";
}

Identity parse_identity(const std::string& s) {
  for (const auto& [k, v] : kIdentityNames)
    if (v == s) return k;
  throw std::invalid_argument("unknown identity: " + s);
}

DeName parse_de(const std::string& s) {
  for (const auto& [k, v] : kDeNames)
    if (v == s || data_key(k) == s) return k;
  throw std::invalid_argument("unknown differential equation: " + s);
}

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> v = [] {
    std::vector<Identity> out;
    for (const auto& kv : kIdentityNames) out.push_back(kv.first);
    return out;
  }();
  return v;
}

const std::vector<DeName>& all_des() {
  static const std::vector<DeName> v = {DeName::fprime_4valent, DeName::h_4valent, DeName::w_cubic};
  return v;
}

ResidualReport check_identity(Identity id, int order, const std::optional<Perturbation>& perturb) {
  if (order < 2) throw std::invalid_argument("identity checks need order >= 2");
  ResidualReport r;
  r.name = name_of(id);
  r.input_order = order;
  switch (id) {
    case Identity::phi_second:
    case Identity::thetrat:
    case Identity::lambda_rel: r.residuals = quartic_identity(id, order, perturb); break;
    case Identity::ed_cubic: r.residuals = psi_identity(order, perturb); break;
    case Identity::theta_cubic_rel:
    case Identity::pp1:
    case Identity::pp2: r.residuals = cubic_tree_identity(id, order, perturb); break;
    case Identity::rs_prime_cubic:
    case Identity::g_cubic_rel: r.residuals = rs_identity(id, order, perturb); break;
  }
  finish(r);
  return r;
}

std::vector<DeTerm> parse_de_terms(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  if (!j.is_array()) throw std::invalid_argument("DE table must be a JSON array");
  std::vector<DeTerm> out;
  for (const auto& e : j) {
    DeTerm t;
    t.coeff = parse_rational(e.at("coeff").get<std::string>());
    t.z_pow = e.at("z_pow").get<int>();
    t.u_pow = e.at("u_pow").get<int>();
    t.derivs = e.at("derivs").get<std::vector<int>>();
    if (t.z_pow < 0 || t.u_pow < 0) throw std::invalid_argument("negative power in DE table");
    for (int d : t.derivs)
      if (d < 0) throw std::invalid_argument("negative derivative order in DE table");
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<DeTerm> de_terms(DeName de) { return parse_de_terms(detail::de_sources().at(data_key(de))); }

int differential_order(const std::vector<DeTerm>& terms) {
  int k = 0;
  for (const auto& t : terms)
    for (int d : t.derivs) k = std::max(k, d);
  return k;
}

int degree(const std::vector<DeTerm>& terms) {
  size_t d = 0;
  for (const auto& t : terms) d = std::max(d, t.derivs.size());
  return static_cast<int>(d);
}

ZSeries de_input(DeName de, int order) {
  switch (de) {
    case DeName::fprime_4valent: return solve_symbolic(4, order).Fprime;
    case DeName::h_4valent: return solve_symbolic(4, order).H;
    case DeName::w_cubic: {
      auto s = solve_symbolic(3, order);
      return (UPoly::u() * s.G).scaled(2) - mono(1, 1, order);
    }
  }
  throw std::logic_error("unreachable");
}

QSeries de_input(DeName de, int order, const Rational& u) {
  switch (de) {
    case DeName::fprime_4valent: return solve_fixed(4, order, u).Fprime;
    case DeName::h_4valent: return solve_fixed(4, order, u).H;
    case DeName::w_cubic: {
      auto s = solve_fixed(3, order, u);
      return s.G.scaled(2 * u) - QSeries::monomial(Rational(1), 1, order);
    }
  }
  throw std::logic_error("unreachable");
}

ZSeries de_residual(const std::vector<DeTerm>& terms, const ZSeries& y) { return residual_impl(terms, y, UPoly::u()); }

QSeries de_residual(const std::vector<DeTerm>& terms, const QSeries& y, const Rational& u) {
  return residual_impl(terms, y, u);
}

ResidualReport check_de(DeName de, int order, const UMode& mode, const std::optional<Perturbation>& perturb) {
  check_mode(mode, order);
  auto terms = de_terms(de);
  if (order < differential_order(terms))
    throw std::invalid_argument("order " + std::to_string(order) + " is below the differential order of " + name_of(de));
  ResidualReport r;
  r.name = name_of(de);
  r.input_order = order;
  r.u_mode = mode.describe();
  if (mode.symbolic) {
    ZSeries y = de_input(de, order);
    apply(y, perturb);
    r.residuals = {de_residual(terms, y)};
  } else {
    QSeries y = de_input(de, order, mode.value);
    apply(y, perturb);
    r.residuals = {lift(de_residual(terms, y, mode.value))};
  }
  finish(r);
  return r;
}

}  // namespace fm
