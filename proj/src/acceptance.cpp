#include "forestmaps/acceptance.hpp"

#include "forestmaps/de_verifier.hpp"
#include "forestmaps/map_oracle.hpp"
#include "forestmaps/random_model.hpp"
#include "forestmaps/singular.hpp"
#include "forestmaps/solver.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fm {

namespace {

const Precision kNumeric{50, 1e-20};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "FAILED " << what << "; ";
    }
  }
};

UPoly poly(std::initializer_list<long> c) { return UPoly(c); }

void exact_p3(Outcome& o) {
  auto t0 = std::chrono::steady_clock::now();
  auto s = solve_symbolic(3, 4);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.detail << "[z^3]F=" << s.F[3].pretty() << " [z^4]F=" << s.F[4].pretty() << " in " << secs << " s; ";
  o.require(s.F[3] == poly({6, 4}), "[z^3]F");
  o.require(s.F[4] == poly({140, 234, 144, 32}), "[z^4]F");
  o.require(secs < 1.0, "runtime under 1 s");
}

void oracle(Outcome& o) {
  for (int p : {3, 4}) {
    auto s = solve_symbolic(p, 4);
    for (int n : {3, 4}) {
      UPoly forests = oracle_F(p, n, OracleVariant::all_forests);
      UPoly act = oracle_F(p, n, OracleVariant::tree_rooted_activity);
      o.detail << "p=" << p << " n=" << n << ": " << forests.pretty() << "; ";
      o.require(forests == s.F[n], "forest sum p=" + std::to_string(p) + " n=" + std::to_string(n));
      o.require(act == s.F[n], "activity sum p=" + std::to_string(p) + " n=" + std::to_string(n));
    }
  }
}

void spanning_trees_closed_form(Outcome& o) {
  const int order = 30;
  for (int p : {3, 4, 6}) {
    TreeSeries ts = build_phi_theta(p, 2 * order);
    ImplicitSystem<Rational> sys(ts, order, Rational(0));
    QSeries F = integral(sys.eval(ts.theta)).truncated(order);
    auto closed = spanning_tree_counts(p, order);
    int bad = -1;
    for (int n = 0; n <= order && bad < 0; ++n)
      if (F[n] != Rational(closed[n])) bad = n;
    o.detail << "p=" << p << (bad < 0 ? " ok" : " mismatch at n=" + std::to_string(bad)) << "; ";
    o.require(bad < 0, "closed form p=" + std::to_string(p));
  }
}

void residuals(Outcome& o) {
  struct DeCase {
    DeName de;
    int order;
  };
  for (auto c : {DeCase{DeName::fprime_4valent, 14}, DeCase{DeName::h_4valent, 14}, DeCase{DeName::w_cubic, 12}}) {
    auto r = check_de(c.de, c.order);
    o.detail << r.name << " zero through z^" << r.tested_order << "=" << r.is_zero << "; ";
    o.require(r.is_zero && r.tested_order >= 10, r.name);
  }
  for (Identity id : all_identities()) {
    auto r = check_identity(id, 22);
    o.detail << r.name << " through z^" << r.tested_order << "=" << r.is_zero << "; ";
    o.require(r.is_zero && r.tested_order >= 20, r.name);
  }
}

void positivity(Outcome& o) {
  const int order = 12;
  auto s = solve_symbolic(3, order);
  ZSeries z = ZSeries::monomial(UPoly(1), 1, order);
  ZSeries r_mu = mu_expansion(s.R - z, true);
  ZSeries s_mu = mu_expansion(s.S, true);
  ZSeries st_mu = mu_expansion(s.S_tilde, true);
  o.require(r_mu[1].is_zero() && r_mu[2] == poly({2, 4}) && r_mu[3] == poly({16, 36, 48, 40}), "first terms of (R-z)/u");
  o.require(s_mu[1] == poly({2}) && s_mu[2] == poly({6, 12, 12}) && s_mu[3] == poly({72, 176, 240, 224, 128}),
            "first terms of S/u");
  o.require(st_mu[1] == poly({2}) && st_mu[2] == poly({10, 16, 4}) && st_mu[3] == poly({144, 320, 264, 96, 16}),
            "first terms of S~/u");
  struct Named {
    const char* name;
    ZSeries s;
  };
  std::vector<Named> all = {{"(R-z)/u", r_mu},
                            {"S/u", s_mu},
                            {"S~/u", st_mu},
                            {"dPhi2/dy(z,S~)", mu_expansion(phi2_y_at_s_tilde(3, order), false)},
                            {"F", mu_expansion(s.F, false)}};
  for (const auto& a : all) {
    bool ok = true;
    for (int n = 0; n <= order; ++n) ok = ok && a.s[n].nonnegative();
    o.detail << a.name << (ok ? " nonnegative" : " has a negative coefficient") << "; ";
    o.require(ok, std::string("positivity of ") + a.name);
  }
}

void radii(Outcome& o) {
  PrecisionScope scope(kNumeric);
  Real worst = 0;
  auto track = [&](const SingularProfile& p) -> SingularProfile {
    if (p.residual > worst) worst = p.residual;
    return p;
  };
  Real r4 = track(radius(4, Real(-1), kNumeric)).rho;
  Real e4 = abs(r4 - sqrt(Real(3)) / (12 * pi()));
  o.detail << "rho4(-1) err " << sci(e4, 3) << "; ";
  o.require(e4 < Real("1e-12"), "rho4(-1) against sqrt(3)/(12 pi)");

  Real r3m = track(radius(3, Real(-1), kNumeric)).rho;
  Real e3 = abs(r3m - pi() * pi() / 384);
  o.detail << "rho3(-1) err " << sci(e3, 3) << "; ";
  o.require(e3 < Real("1e-6"), "rho3(-1) against pi^2/384");

  Real r30 = track(radius(3, Real(0), kNumeric)).rho;
  Real e30 = abs(r30 - Real(1) / 64);
  o.detail << "rho3(0)-1/64 " << sci(e30, 3) << "; ";
  o.require(e30 < Real("1e-40"), "rho3(0) = 1/64");

  Real r31 = track(radius(3, Real(1), kNumeric)).rho;
  o.detail << "rho3(1)=" << fixed(r31, 10) << "; ";
  o.require(r31 >= Real("0.0093") && r31 <= Real("0.0103"), "rho3(1) in [0.0093, 0.0103]");

  CubicStep st = s_tilde_radius_cubic(Real(1), kNumeric);
  if (st.residual > worst) worst = st.residual;
  o.detail << "rho~(1)=" << fixed(st.rho_tilde, 10) << "; ";
  o.require(st.rho_tilde >= Real("0.0098") && st.rho_tilde <= Real("0.0108"), "rho~(1) in [0.0098, 0.0108]");

  for (int p : {3, 4}) {
    Real prev = 1;
    bool dec = true;
    for (const char* u : {"-1", "-0.5", "0", "0.5", "1", "2"}) {
      Real r = track(radius(p, to_real(parse_rational(u)), kNumeric)).rho;
      dec = dec && r < prev;
      prev = r;
    }
    o.require(dec, "rho decreasing in u for p=" + std::to_string(p));
  }
  o.detail << "worst residual " << sci(worst, 3) << "; ";
  o.require(worst < Real("1e-12"), "root residuals below 1e-12");
}

void transition(Outcome& o) {
  PrecisionScope scope(kNumeric);
  Real u = to_real(Rational(1, 20));
  Real bound = exp(-2 * pi() / (sqrt(Real(3)) * u));
  Real gap = abs(radius(4, u, kNumeric).rho - quartic_affine_radius(u));
  Real kgap = abs(kappa(u, kNumeric) - kappa_at_boundary(u, kNumeric));
  o.detail << "rho gap " << sci(gap, 3) << " vs " << sci(bound, 3) << "; kappa gap " << sci(kgap, 3) << "; ";
  o.require(gap < bound, "rho gap below exp(-2pi/(sqrt3 u))");
  o.require(kgap < Real("1e-10"), "kappa gap below 1e-10");
}

void ratio_u0(Outcome& o) {
  PrecisionScope scope(kNumeric);
  auto rows = coefficient_asymptotic_check(4, Rational(0), {50, 100, 200, 500}, kNumeric);
  for (const auto& r : rows) o.detail << "n=" << r.n << " ratio " << fixed(r.ratio, 6) << "; ";
  o.require(rows.back().deviation < Real("0.05"), "n=500 ratio within 5% of 1");
}

void ratio_u1(Outcome& o) {
  PrecisionScope scope(kNumeric);
  auto rows = coefficient_asymptotic_check(4, Rational(1), {50, 100, 200, 400}, kNumeric);
  bool dec = true;
  for (size_t i = 0; i < rows.size(); ++i) {
    o.detail << "n=" << rows[i].n << " dev " << fixed(rows[i].deviation, 6) << "; ";
    if (i > 0) dec = dec && rows[i].deviation < rows[i - 1].deviation;
  }
  o.require(dec, "deviation strictly decreasing");
}

void log_probe(Outcome& o) {
  Precision prec{18, 1e-6};
  auto rep = log_singularity_probe(Rational(-1, 2), {Real("0.9"), Real("0.99"), Real("0.999")}, prec);
  bool dec = true, tails = true;
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    o.detail << "z/rho=" << fixed(r.frac, 3) << " dev " << fixed(r.deviation, 6) << " tail " << sci(r.tail_bound, 2) << "; ";
    if (i > 0) dec = dec && r.deviation < rep.rows[i - 1].deviation;
    tails = tails && r.tail_bound < Real("1e-6");
  }
  o.detail << "terms " << rep.order << "; ";
  o.require(dec, "deviation strictly decreasing");
  o.require(tails, "tail bounds below 1e-6");
}

void cubic_probe(Outcome& o) {
  Precision prec{60, 1e-25};
  auto rep = cubic_expansion_probe(Real(-1) / 2, 1, 13, prec);
  bool dec = true;
  for (size_t i = 1; i < rep.fits.size(); ++i) dec = dec && rep.fits[i].deviation < rep.fits[i - 1].deviation;
  const auto& last = rep.fits.back();
  o.detail << "beta " << fixed(rep.beta, 8) << " fit " << fixed(last.beta_fit, 8) << " dev first "
           << fixed(rep.fits.front().deviation, 4) << " last " << fixed(last.deviation, 4) << "; ";
  o.require(last.deviation < Real("0.2"), "fit within 20% of beta");
  o.require(dec, "fit deviation shrinking toward rho");
}

void random_model(Outcome& o) {
  PrecisionScope scope(kNumeric);
  Real k1 = kappa(Real(1), kNumeric);
  auto e100 = internal_activity_per_n(Rational(1), 100, kNumeric);
  auto e200 = internal_activity_per_n(Rational(1), 200, kNumeric);
  Real d100 = abs(e100.by_dual / k1 - 1), d200 = abs(e200.by_dual / k1 - 1);
  Real cross = abs(e200.by_dual - e200.by_composition);
  o.detail << "kappa1 " << fixed(k1, 8) << " n=100 " << fixed(e100.by_dual, 8) << " n=200 " << fixed(e200.by_dual, 8)
           << " routes differ by " << sci(cross, 2) << "; ";
  o.require(d200 < Real("0.05"), "n=200 within 5% of kappa1");
  o.require(d200 < d100, "deviation smaller at n=200");
  o.require(cross < Real("1e-30"), "dual and composition routes agree");

  LimitLaw lim = s_limit_law(Real(1), 5, kNumeric);
  std::vector<std::vector<Real>> fin;
  for (int n : {50, 100, 200}) fin.push_back(s_finite_law(Rational(1), n, 5, kNumeric));
  bool mono = true;
  for (int k = 0; k < 5; ++k) {
    Real prev = -1;
    for (const auto& f : fin) {
      Real d = abs(f[k] - lim.probs[k]);
      if (prev >= 0 && !(d < prev)) mono = false;
      prev = d;
    }
  }
  o.detail << "limit k=1 " << fixed(lim.probs[0], 6) << " n=200 " << fixed(fin.back()[0], 6) << "; ";
  o.require(mono, "finite-n laws approach the limit monotonically for k=1..5");
}

struct Entry {
  const char* title;
  std::function<void(Outcome&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {"exact cubic coefficients", exact_p3},
      {"map enumeration matches the series", oracle},
      {"spanning-tree closed form", spanning_trees_closed_form},
      {"identities and DEs vanish", residuals},
      {"mu-positivity", positivity},
      {"radii", radii},
      {"smooth transition at u=0", transition},
      {"coefficient asymptotics u=0", ratio_u0},
      {"coefficient asymptotics u=1", ratio_u1},
      {"log regime probe u=-1/2", log_probe},
      {"cubic singular expansion u=-1/2", cubic_probe},
      {"random model", random_model},
  };
  return e;
}

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriteria) throw std::out_of_range("criterion ids run from 1 to " + std::to_string(kCriteria));
  const Entry& e = entries()[id - 1];
  CriterionResult res;
  res.id = id;
  res.title = e.title;
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    e.run(o);
  } catch (const std::exception& ex) {
    o.pass = false;
    o.detail << "exception: " << ex.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  res.pass = o.pass;
  res.detail = o.detail.str();
  while (!res.detail.empty() && (res.detail.back() == ' ' || res.detail.back() == ';')) res.detail.pop_back();
  return res;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids) {
  std::vector<CriterionResult> out;
  if (ids.empty())
    for (int i = 1; i <= kCriteria; ++i) out.push_back(run_criterion(i));
  else
    for (int i : ids) out.push_back(run_criterion(i));
  return out;
}

void write_acceptance_lines(std::ostream& os, const std::vector<CriterionResult>& rows) {
  for (const auto& r : rows) {
    std::ostringstream t;
    t.precision(3);
    t << r.seconds;
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.title << " (" << t.str() << " s): " << r.detail << '\n';
  }
}

void write_acceptance_csv(std::ostream& os, const std::vector<CriterionResult>& rows) {
  os << "id,title,pass,seconds,detail\n";
  for (const auto& r : rows) {
    std::string d = r.detail;
    std::string q;
    for (char c : d) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    os << r.id << ',' << r.title << ',' << (r.pass ? "true" : "false") << ',' << r.seconds << ",\"" << q << "\"\n";
  }
}

}  // namespace fm
