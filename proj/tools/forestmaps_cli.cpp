#include "forestmaps/acceptance.hpp"
#include "forestmaps/de_verifier.hpp"
#include "forestmaps/errors.hpp"
#include "forestmaps/json_io.hpp"
#include "forestmaps/map_oracle.hpp"
#include "forestmaps/random_model.hpp"
#include "forestmaps/singular.hpp"
#include "forestmaps/solver.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace fm;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kBadFlags = 2, kScale = 3, kNumeric = 4 };

struct Common {
  std::string format = "json";
  std::string output;
  std::optional<int> digits;
  std::optional<double> tol;
};

// --digits wins, then FORESTMAPS_DIGITS, then the command's own default.
Precision precision_for(const Common& c, int fallback_digits) {
  Precision p;
  p.working_digits = fallback_digits;
  if (std::getenv("FORESTMAPS_DIGITS")) p.working_digits = Precision::standard().working_digits;
  if (c.digits) p.working_digits = *c.digits;
  p.target_abs_tol = c.tol ? *c.tol : std::pow(10.0, -std::floor(p.working_digits / 2.0));
  p.validate();
  return p;
}

Json precision_json(const Precision& p) {
  return Json{{"digits", p.working_digits}, {"tolerance", p.target_abs_tol}};
}

UMode parse_u(const std::string& s) {
  if (s == "symbolic") return UMode::indeterminate();
  return UMode::fixed(parse_rational(s));
}

std::string paren(const UPoly& p) { return "(" + p.pretty() + ")"; }

void write_out(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw std::runtime_error("cannot write " + c.output);
  f << text;
}

void emit_json(const Common& c, const std::string& tag, const Json& config, Json result) {
  write_out(c, envelope(tag, config, std::move(result)).dump(2) + "\n");
}

void require_format(const Common& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (c.format == a) return;
  throw std::invalid_argument("format " + c.format + " is not available for this command");
}

// coeffs ---------------------------------------------------------------------

struct CoeffsArgs {
  int p = 3, order = 6;
  std::string u = "symbolic";
  std::vector<std::string> series;
};

int run_coeffs(const Common& c, const CoeffsArgs& a) {
  require_format(c, {"json", "csv"});
  UMode mode = parse_u(a.u);
  auto tables = coefficient_tables(a.p, a.order, mode);
  std::vector<CoeffTable> picked;
  for (auto& t : tables)
    if (a.series.empty() || std::find(a.series.begin(), a.series.end(), t.name) != a.series.end()) picked.push_back(t);
  for (const auto& s : a.series) {
    bool found = false;
    for (const auto& t : tables) found = found || t.name == s;
    if (!found) throw std::invalid_argument("no series named " + s + " for p=" + std::to_string(a.p));
  }
  if (c.format == "csv") {
    std::ostringstream os;
    os << "series,n,u_power,coeff\n";
    for (const auto& t : picked)
      for (size_t n = 0; n < t.coeffs.size(); ++n)
        for (int k = 0; k <= t.coeffs[n].degree(); ++k) os << t.name << ',' << n << ',' << k << ',' << to_string(t.coeffs[n][k]) << '\n';
    write_out(c, os.str());
    return kOk;
  }
  Json out = Json::array();
  for (const auto& t : picked) {
    Json rows = Json::array();
    for (size_t n = 0; n < t.coeffs.size(); ++n)
      rows.push_back(Json{{"n", n}, {"poly", to_json(t.coeffs[n])}, {"pretty", paren(t.coeffs[n])}});
    out.push_back(Json{{"name", t.name}, {"order", a.order}, {"coeffs", rows}});
  }
  Json cfg{{"command", "coeffs"}, {"p", a.p}, {"order", a.order}, {"u", mode.describe()}, {"series", a.series}};
  emit_json(c, "series coefficients from the implicit system", cfg, Json{{"series", out}});
  return kOk;
}

// oracle ---------------------------------------------------------------------

struct OracleArgs {
  int p = 3;
  std::vector<int> n{3, 4};
  std::string variant = "all";
};

int run_oracle(const Common& c, const OracleArgs& a) {
  require_format(c, {"json", "csv"});
  std::vector<OracleVariant> variants;
  if (a.variant == "all")
    variants = {OracleVariant::all_forests, OracleVariant::tree_rooted_activity, OracleVariant::root_edge_outside};
  else
    variants = {parse_oracle_variant(a.variant)};
  int nmax = *std::max_element(a.n.begin(), a.n.end());
  auto sol = solve_symbolic(a.p, nmax);
  struct Row {
    int n;
    OracleVariant v;
    size_t maps;
    UPoly oracle, series;
  };
  std::vector<Row> rows;
  for (int n : a.n) {
    size_t maps = enumerate_maps(a.p, n).size();
    for (auto v : variants) {
      const ZSeries& target = v == OracleVariant::root_edge_outside ? sol.H : sol.F;
      rows.push_back({n, v, maps, oracle_F(a.p, n, v), target[n]});
    }
  }
  bool all = true;
  for (const auto& r : rows) all = all && r.oracle == r.series;
  if (c.format == "csv") {
    std::ostringstream os;
    os << "p,n,variant,maps,oracle,series,match\n";
    for (const auto& r : rows)
      os << a.p << ',' << r.n << ',' << describe(r.v) << ',' << r.maps << ',' << r.oracle.pretty() << ','
         << r.series.pretty() << ',' << (r.oracle == r.series ? "true" : "false") << '\n';
    write_out(c, os.str());
  } else {
    Json out = Json::array();
    for (const auto& r : rows)
      out.push_back(Json{{"n", r.n},
                         {"variant", describe(r.v)},
                         {"maps", r.maps},
                         {"oracle", paren(r.oracle)},
                         {"series", paren(r.series)},
                         {"match", r.oracle == r.series}});
    Json cfg{{"command", "oracle"}, {"p", a.p}, {"n", a.n}, {"variant", a.variant}};
    emit_json(c, "map enumeration against series coefficients", cfg, Json{{"rows", out}, {"all_match", all}});
  }
  return all ? kOk : kCheckFailed;
}

// verify ---------------------------------------------------------------------

struct VerifyArgs {
  bool all = false;
  std::vector<std::string> identities, des;
  int order = 12;
  std::string u = "symbolic";
  std::optional<int> perturb;
};

int run_verify(const Common& c, const VerifyArgs& a) {
  require_format(c, {"json", "csv"});
  std::vector<Identity> ids;
  std::vector<DeName> des;
  for (const auto& s : a.identities) ids.push_back(parse_identity(s));
  for (const auto& s : a.des) des.push_back(parse_de(s));
  if (a.all) {
    ids = all_identities();
    des = all_des();
  }
  if (ids.empty() && des.empty()) throw std::invalid_argument("name a check with --identity or --de, or pass --all");
  UMode mode = parse_u(a.u);
  std::optional<Perturbation> pert;
  if (a.perturb) pert = Perturbation{*a.perturb, 1};
  std::vector<std::pair<std::string, ResidualReport>> reps;
  for (auto id : ids) reps.emplace_back("identity", check_identity(id, a.order, pert));
  for (auto de : des) reps.emplace_back("de", check_de(de, a.order, mode, pert));
  bool all_zero = true, all_nonzero = true;
  for (const auto& [k, r] : reps) {
    all_zero = all_zero && r.is_zero;
    all_nonzero = all_nonzero && !r.is_zero;
  }
  if (c.format == "csv") {
    std::ostringstream os;
    os << "kind,name,input_order,tested_order,u_mode,zero_residual,first_nonzero\n";
    for (const auto& [k, r] : reps)
      os << k << ',' << r.name << ',' << r.input_order << ',' << r.tested_order << ',' << r.u_mode << ','
         << (r.is_zero ? "true" : "false") << ',' << r.first_nonzero << '\n';
    write_out(c, os.str());
  } else {
    Json out = Json::array();
    for (const auto& [k, r] : reps) {
      Json row{{"kind", k},
               {"name", r.name},
               {"input_order", r.input_order},
               {"tested_order", r.tested_order},
               {"u_mode", r.u_mode},
               {"zero_residual", r.is_zero}};
      if (!r.is_zero) {
        row["first_nonzero"] = r.first_nonzero;
        Json lead = Json::array();
        for (const auto& s : r.residuals)
          if (r.first_nonzero <= s.order()) lead.push_back(paren(s[r.first_nonzero]));
        row["leading_residual"] = lead;
      }
      out.push_back(row);
    }
    Json cfg{{"command", "verify"}, {"order", a.order}, {"u", mode.describe()}, {"all", a.all}};
    cfg["perturb_index"] = a.perturb ? Json(*a.perturb) : Json(nullptr);
    emit_json(c, "exact residuals of identities and differential equations", cfg,
              Json{{"checks", out}, {"all_zero", all_zero}});
  }
  if (a.perturb) return all_nonzero ? kOk : kCheckFailed;
  return all_zero ? kOk : kCheckFailed;
}

// radius ---------------------------------------------------------------------

struct RadiusArgs {
  int p = 4;
  std::vector<std::string> u;
  bool s_tilde = false;
};

int run_radius(const Common& c, const RadiusArgs& a) {
  require_format(c, {"json", "csv"});
  Precision prec = precision_for(c, 50);
  PrecisionScope scope(prec);
  std::vector<SingularProfile> rows;
  std::vector<std::optional<CubicStep>> steps;
  for (const auto& s : a.u) {
    Real u = to_real(parse_rational(s));
    rows.push_back(radius(a.p, u, prec));
    if (a.s_tilde && a.p == 3 && u > 0)
      steps.push_back(s_tilde_radius_cubic(u, prec));
    else
      steps.push_back(std::nullopt);
  }
  if (c.format == "csv") {
    std::ostringstream os;
    write_profiles_csv(os, rows);
    write_out(c, os.str());
    return kOk;
  }
  Json out = Json::array();
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    Real bound = r.residual > Real(prec.target_abs_tol) ? r.residual : Real(prec.target_abs_tol);
    Json row{{"u", a.u[i]},
             {"rho", real_json(r.rho)},
             {"tau", real_json(r.tau)},
             {"sigma", real_json(r.sigma)},
             {"regime", describe(r.regime)},
             {"subexp_class", describe(r.subexp)},
             {"c_u", r.has_constant ? real_json(r.c_u) : Json(nullptr)},
             {"residual", real_json(r.residual, 3)},
             {"error_bound", real_json(bound, 3)},
             {"route", r.route}};
    if (steps[i]) {
      row["s_tilde"] = Json{{"rho_tilde", real_json(steps[i]->rho_tilde)},
                            {"sigma_tilde", real_json(steps[i]->sigma_tilde)},
                            {"residual", real_json(steps[i]->residual, 3)}};
    }
    out.push_back(row);
  }
  Json cfg{{"command", "radius"}, {"p", a.p}, {"u", a.u}, {"s_tilde", a.s_tilde}, {"precision", precision_json(prec)}};
  emit_json(c, "radius of convergence and critical point", cfg, Json{{"profiles", out}});
  return kOk;
}

// asymptotics ----------------------------------------------------------------

struct AsymArgs {
  int p = 4;
  std::string u = "1";
  std::string kind = "ratios";
  std::vector<int> n{50, 100, 200, 400};
  std::vector<std::string> frac{"0.9", "0.99", "0.999"};
  std::string constant = "72";
  int log_power = 1;
  int max_order = 40000;
  int min_exp = 1, max_exp = 13;
};

int run_asymptotics(const Common& c, const AsymArgs& a) {
  require_format(c, {"json", "csv"});
  Json cfg{{"command", "asymptotics"}, {"kind", a.kind}, {"p", a.p}, {"u", a.u}};
  if (a.kind == "ratios") {
    Precision prec = precision_for(c, 50);
    PrecisionScope scope(prec);
    auto rows = coefficient_asymptotic_check(a.p, parse_rational(a.u), a.n, prec);
    if (c.format == "csv") {
      std::ostringstream os;
      write_ratios_csv(os, rows);
      write_out(c, os.str());
      return kOk;
    }
    Json out = Json::array();
    for (const auto& r : rows)
      out.push_back(Json{{"n", r.n}, {"f_n_rho_n", real_json(r.scaled_coeff, 20)}, {"ratio", real_json(r.ratio, 16)},
                         {"deviation", real_json(r.deviation, 6)}});
    cfg["n"] = a.n;
    cfg["precision"] = precision_json(prec);
    emit_json(c, "coefficient ratios against the predicted asymptotic form", cfg, Json{{"rows", out}});
    return kOk;
  }
  if (a.kind == "log-probe") {
    Precision prec = precision_for(c, 18);
    PrecisionScope scope(prec);
    ProbeOptions opt;
    opt.tolerance = Real(prec.target_abs_tol);
    opt.constant = to_real(parse_rational(a.constant));
    opt.log_power = a.log_power;
    opt.max_order = a.max_order;
    std::vector<Real> fr;
    for (const auto& f : a.frac) fr.push_back(to_real(parse_rational(f)));
    auto rep = log_singularity_probe(parse_rational(a.u), fr, prec, opt);
    if (c.format == "csv") {
      std::ostringstream os;
      write_probe_csv(os, rep);
      write_out(c, os.str());
      return kOk;
    }
    Json out = Json::array();
    for (const auto& r : rep.rows)
      out.push_back(Json{{"z_over_rho", real_json(r.frac, 6)}, {"lhs", real_json(r.lhs, 12)}, {"rhs", real_json(r.rhs, 12)},
                         {"deviation", real_json(r.deviation, 8)}, {"error_bound", real_json(r.tail_bound, 3)}});
    cfg["frac"] = a.frac;
    cfg["constant"] = a.constant;
    cfg["log_power"] = a.log_power;
    cfg["precision"] = precision_json(prec);
    emit_json(c, "logarithmic singularity probe on the truncated series", cfg,
              Json{{"rho", real_json(rep.rho, 20)}, {"terms", rep.order}, {"rows", out}});
    return kOk;
  }
  if (a.kind == "cubic-probe") {
    Precision prec = precision_for(c, 60);
    PrecisionScope scope(prec);
    auto rep = cubic_expansion_probe(to_real(parse_rational(a.u)), a.min_exp, a.max_exp, prec);
    if (c.format == "csv") {
      std::ostringstream os;
      write_cubic_probe_csv(os, rep);
      write_out(c, os.str());
      return kOk;
    }
    Json rows = Json::array(), fits = Json::array();
    for (const auto& r : rep.rows)
      rows.push_back(Json{{"rho_minus_z", real_json(r.x, 6)}, {"slope_gap", real_json(r.g, 16)}, {"target", real_json(r.target, 12)}});
    for (const auto& f : rep.fits)
      fits.push_back(Json{{"x_hi", real_json(f.x_hi, 3)}, {"x_lo", real_json(f.x_lo, 3)}, {"beta_fit", real_json(f.beta_fit, 10)},
                          {"deviation", real_json(f.deviation, 6)}});
    cfg["min_exp"] = a.min_exp;
    cfg["max_exp"] = a.max_exp;
    cfg["precision"] = precision_json(prec);
    emit_json(c, "cubic singular expansion against series evaluation", cfg,
              Json{{"rho", real_json(rep.rho, 20)}, {"alpha", real_json(rep.alpha, 16)}, {"beta", real_json(rep.beta, 16)},
                   {"rows", rows}, {"fits", fits}});
    return kOk;
  }
  throw std::invalid_argument("unknown asymptotics kind " + a.kind + " (ratios, log-probe, cubic-probe)");
}

// random ---------------------------------------------------------------------

struct RandomArgs {
  std::vector<std::string> u{"1"};
  std::string kind = "stats";
  int k_max = 5;
  std::vector<int> n{100, 200};
};

int run_random(const Common& c, const RandomArgs& a) {
  require_format(c, {"json", "csv"});
  Precision prec = precision_for(c, 50);
  PrecisionScope scope(prec);
  Json cfg{{"command", "random"}, {"kind", a.kind}, {"u", a.u}, {"precision", precision_json(prec)}};
  if (a.kind == "stats") {
    std::vector<ModelStats> rows;
    for (const auto& s : a.u) {
      ModelStats m;
      m.u = to_real(parse_rational(s));
      m.slope_components = m.u > 0 ? component_slope(m.u, prec) : Real(0);
      m.kappa = kappa(m.u, prec);
      rows.push_back(m);
    }
    if (c.format == "csv") {
      std::ostringstream os;
      write_model_csv(os, rows);
      write_out(c, os.str());
      return kOk;
    }
    Json out = Json::array();
    for (size_t i = 0; i < rows.size(); ++i)
      out.push_back(Json{{"u", a.u[i]},
                         {"slope_components", rows[i].u > 0 ? real_json(rows[i].slope_components, 20) : Json(nullptr)},
                         {"kappa", real_json(rows[i].kappa, 20)},
                         {"error_bound", prec.target_abs_tol}});
    emit_json(c, "component slope and internal activity constant", cfg, Json{{"rows", out}});
    return kOk;
  }
  if (a.u.size() != 1) throw std::invalid_argument("this kind takes a single --u");
  Rational uq = parse_rational(a.u.front());
  Real u = to_real(uq);
  if (a.kind == "law") {
    LimitLaw lim = s_limit_law(u, a.k_max, prec);
    int n = a.n.back();
    auto fin = s_finite_law(uq, n, a.k_max, prec);
    if (c.format == "csv") {
      std::ostringstream os;
      write_law_csv(os, lim, fin);
      write_out(c, os.str());
      return kOk;
    }
    Json out = Json::array();
    for (int k = 0; k < a.k_max; ++k)
      out.push_back(Json{{"k", k + 1}, {"limit_prob", real_json(lim.probs[k], 16)}, {"finite_n_prob", real_json(fin[k], 16)}});
    cfg["k_max"] = a.k_max;
    cfg["n"] = n;
    emit_json(c, "root-component size law", cfg,
              Json{{"rows", out}, {"partial_sum", real_json(lim.partial_sum, 16)}, {"tail_bound", real_json(lim.tail_bound, 3)}});
    return kOk;
  }
  if (a.kind == "activity") {
    Real k = kappa(u, prec);
    std::vector<ActivityEstimate> est;
    for (int n : a.n) est.push_back(internal_activity_per_n(uq, n, prec));
    if (c.format == "csv") {
      std::ostringstream os;
      os << "n,by_dual,by_composition,kappa\n";
      for (const auto& e : est) os << e.n << ',' << sci(e.by_dual, 16) << ',' << sci(e.by_composition, 16) << ',' << sci(k, 16) << '\n';
      write_out(c, os.str());
      return kOk;
    }
    Json out = Json::array();
    for (const auto& e : est)
      out.push_back(Json{{"n", e.n}, {"by_dual", real_json(e.by_dual, 16)}, {"by_composition", real_json(e.by_composition, 16)},
                         {"relative_gap_to_kappa", real_json(abs(e.by_dual / k - 1), 6)}});
    cfg["n"] = a.n;
    emit_json(c, "finite-n internal activity per face", cfg, Json{{"kappa", real_json(k, 20)}, {"rows", out}});
    return kOk;
  }
  if (a.kind == "identity") {
    int nmax = a.n.back();
    int bad = activity_component_identity(uq, nmax);
    if (c.format == "csv") {
      write_out(c, "u,nmax,first_failure\n" + to_string(uq) + "," + std::to_string(nmax) + "," + std::to_string(bad) + "\n");
    } else {
      cfg["n"] = nmax;
      emit_json(c, "exact activity and component identity", cfg, Json{{"holds", bad == 0}, {"first_failure", bad}});
    }
    return bad == 0 ? kOk : kCheckFailed;
  }
  throw std::invalid_argument("unknown random kind " + a.kind + " (stats, law, activity, identity)");
}

// mu-expand ------------------------------------------------------------------

struct MuArgs {
  int p = 3, order = 12;
  std::vector<std::string> series{"R", "S", "S_tilde"};
};

int run_mu(const Common& c, const MuArgs& a) {
  require_format(c, {"json", "csv"});
  check_mode(UMode::indeterminate(), a.order);
  auto sol = solve_symbolic(a.p, a.order);
  struct Row {
    std::string name, meaning;
    ZSeries s;
  };
  std::vector<Row> rows;
  for (const auto& name : a.series) {
    if (name == "R")
      rows.push_back({name, "(R-z)/u", mu_expansion(sol.R - ZSeries::monomial(UPoly(1), 1, a.order), true)});
    else if (name == "S")
      rows.push_back({name, "S/u", mu_expansion(sol.S, true)});
    else if (name == "S_tilde")
      rows.push_back({name, "S~/u", mu_expansion(sol.S_tilde, true)});
    else if (name == "F")
      rows.push_back({name, "F", mu_expansion(sol.F, false)});
    else if (name == "phi2_y")
      rows.push_back({name, "dPhi2/dy(z,S~)", mu_expansion(phi2_y_at_s_tilde(a.p, a.order), false)});
    else
      throw std::invalid_argument("unknown series " + name + " (R, S, S_tilde, F, phi2_y)");
  }
  bool all = true;
  for (const auto& r : rows)
    for (const auto& x : r.s.coeffs()) all = all && x.nonnegative();
  if (c.format == "csv") {
    std::ostringstream os;
    os << "series,n,mu_power,coeff\n";
    for (const auto& r : rows)
      for (int n = 0; n <= r.s.order(); ++n)
        for (int k = 0; k <= r.s[n].degree(); ++k) os << r.name << ',' << n << ',' << k << ',' << to_string(r.s[n][k]) << '\n';
    write_out(c, os.str());
  } else {
    Json out = Json::array();
    for (const auto& r : rows) {
      Json coeffs = Json::array();
      bool nonneg = true;
      for (int n = 0; n <= r.s.order(); ++n) {
        coeffs.push_back(Json{{"n", n}, {"poly", to_json(r.s[n])}, {"pretty", "(" + r.s[n].pretty("mu") + ")"}});
        nonneg = nonneg && r.s[n].nonnegative();
      }
      out.push_back(Json{{"name", r.name}, {"expanded", r.meaning}, {"nonnegative", nonneg}, {"coeffs", coeffs}});
    }
    Json cfg{{"command", "mu-expand"}, {"p", a.p}, {"order", a.order}, {"series", a.series}};
    emit_json(c, "expansion in mu = u + 1", cfg, Json{{"series", out}, {"all_nonnegative", all}});
  }
  return all ? kOk : kCheckFailed;
}

// repro ----------------------------------------------------------------------

int run_repro(const Common& c, const std::vector<int>& ids) {
  auto rows = run_acceptance(ids);
  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  std::ostringstream os;
  if (c.format == "csv") {
    write_acceptance_csv(os, rows);
    write_out(c, os.str());
  } else if (c.format == "text") {
    write_acceptance_lines(os, rows);
    int passed = 0;
    for (const auto& r : rows) passed += r.pass;
    os << passed << "/" << rows.size() << " criteria pass\n";
    write_out(c, os.str());
  } else {
    Json out = Json::array();
    for (const auto& r : rows)
      out.push_back(Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
    emit_json(c, "acceptance summary", Json{{"command", "repro"}, {"criteria", ids}}, Json{{"criteria", out}, {"all_pass", all}});
  }
  return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forested maps: series, map enumeration, singularities and limit laws"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "json or csv (repro also text, its default)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", common.output, "write to this file instead of stdout");
    sub->add_option("--digits", common.digits, "working decimal digits (default from FORESTMAPS_DIGITS)")->check(CLI::Range(10, 5000));
    sub->add_option("--tol", common.tol, "target absolute tolerance")->check(CLI::PositiveNumber);
  };

  CoeffsArgs ca;
  auto* coeffs = app.add_subcommand("coeffs", "series coefficients F, F', R, S, S~, G, H");
  coeffs->add_option("--p", ca.p, "vertex degree")->check(CLI::Range(3, 12));
  coeffs->add_option("--order", ca.order, "truncation order in z")->check(CLI::Range(1, 2000));
  coeffs->add_option("--u", ca.u, "'symbolic' or a rational value");
  coeffs->add_option("--series", ca.series, "subset of F Fprime R S S_tilde G H");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "enumerate small maps and compare with the series");
  oracle->add_option("--p", oa.p)->check(CLI::Range(3, 12));
  oracle->add_option("--n", oa.n, "numbers of faces")->check(CLI::Range(1, 20));
  oracle->add_option("--variant", oa.variant, "all_forests, tree_rooted_activity, root_edge_outside or all");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "exact identity and DE residuals");
  verify->add_flag("--all", va.all, "every identity and every DE");
  verify->add_option("--identity", va.identities, "identity name (repeatable)");
  verify->add_option("--de", va.des, "DE name (repeatable)");
  verify->add_option("--order", va.order)->check(CLI::Range(2, 60));
  verify->add_option("--u", va.u, "for DEs: 'symbolic' or a rational value");
  verify->add_option("--perturb", va.perturb, "add 1 to this coefficient of the input (negative control)");

  RadiusArgs ra;
  auto* rad = app.add_subcommand("radius", "radius, critical point and constant");
  rad->add_option("--p", ra.p)->check(CLI::IsMember({3, 4}));
  rad->add_option("--u", ra.u, "one or more values of u")->required();
  rad->add_flag("--s-tilde", ra.s_tilde, "also the S~ radius (p = 3, u > 0)");

  AsymArgs aa;
  auto* asym = app.add_subcommand("asymptotics", "coefficient ratios and singular probes");
  asym->add_option("--kind", aa.kind, "ratios, log-probe or cubic-probe")->check(CLI::IsMember({"ratios", "log-probe", "cubic-probe"}));
  asym->add_option("--p", aa.p);
  asym->add_option("--u", aa.u);
  asym->add_option("--n", aa.n, "coefficient indices for ratios");
  asym->add_option("--frac", aa.frac, "z/rho points for the log probe");
  asym->add_option("--constant", aa.constant, "constant in the log law (negative controls)");
  asym->add_option("--log-power", aa.log_power, "power of the logarithm (negative controls)")->check(CLI::Range(1, 4));
  asym->add_option("--max-order", aa.max_order, "refuse log probes needing more terms")->check(CLI::Range(100, 1000000));
  asym->add_option("--min-exp", aa.min_exp)->check(CLI::Range(1, 40));
  asym->add_option("--max-exp", aa.max_exp)->check(CLI::Range(1, 40));

  RandomArgs rda;
  auto* rnd = app.add_subcommand("random", "limits of the random forested-map model");
  rnd->add_option("--kind", rda.kind, "stats, law, activity or identity")->check(CLI::IsMember({"stats", "law", "activity", "identity"}));
  rnd->add_option("--u", rda.u);
  rnd->add_option("--k-max", rda.k_max)->check(CLI::Range(1, 1000));
  rnd->add_option("--n", rda.n, "map sizes")->check(CLI::Range(2, 20000));

  MuArgs ma;
  auto* mu = app.add_subcommand("mu-expand", "re-expand series in mu = u + 1");
  mu->add_option("--p", ma.p)->check(CLI::Range(3, 12));
  mu->add_option("--order", ma.order)->check(CLI::Range(1, 60));
  mu->add_option("--series", ma.series, "R, S, S_tilde, F, phi2_y");

  std::vector<int> crit;
  auto* repro = app.add_subcommand("repro", "run the acceptance checks");
  repro->add_option("--criteria", crit, "subset of criterion ids")->check(CLI::Range(1, kCriteria));

  for (auto* sub : {coeffs, oracle, verify, rad, asym, rnd, mu, repro}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadFlags;
  }

  try {
    if (repro->parsed() && repro->count("--format") == 0) common.format = "text";
    if (!repro->parsed() && common.format == "text") throw std::invalid_argument("text output is only offered by repro");
    if (coeffs->parsed()) return run_coeffs(common, ca);
    if (oracle->parsed()) return run_oracle(common, oa);
    if (verify->parsed()) return run_verify(common, va);
    if (rad->parsed()) return run_radius(common, ra);
    if (asym->parsed()) return run_asymptotics(common, aa);
    if (rnd->parsed()) return run_random(common, rda);
    if (mu->parsed()) return run_mu(common, ma);
    if (repro->parsed()) return run_repro(common, crit);
  } catch (const ScaleGuard& e) {
    std::cerr << "refused: " << e.what() << " (estimate " << e.estimate() << ")\n";
    return kScale;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadFlags;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadFlags;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kBadFlags;
}
