#include "forestmaps/acceptance.hpp"
#include "forestmaps/de_verifier.hpp"
#include "forestmaps/json_io.hpp"
#include "forestmaps/map_oracle.hpp"
#include "forestmaps/random_model.hpp"
#include "forestmaps/singular.hpp"
#include "forestmaps/solver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace fm;

namespace {

using Table = std::vector<std::vector<std::string>>;

Table table(const ZSeries& s) {
  Table out;
  for (const auto& c : s.coeffs()) {
    std::vector<std::string> row;
    for (const auto& q : c.coeffs()) row.push_back(to_string(q));
    out.push_back(row);
  }
  return out;
}

std::map<std::string, Table> series(int p, int order, const std::string& u) {
  UMode mode = u == "symbolic" ? UMode::indeterminate() : UMode::fixed(parse_rational(u));
  std::map<std::string, Table> out;
  for (const auto& t : coefficient_tables(p, order, mode)) {
    ZSeries s(std::vector<UPoly>(t.coeffs.begin(), t.coeffs.end()));
    out[t.name] = table(s);
  }
  return out;
}

Precision prec_for(int digits) {
  Precision p{digits, std::pow(10.0, -(digits / 2))};
  p.validate();
  return p;
}

py::dict radius_py(int p, const std::string& u, int digits) {
  Precision pr = prec_for(digits);
  PrecisionScope scope(pr);
  auto r = radius(p, to_real(parse_rational(u)), pr);
  py::dict d;
  d["rho"] = r.rho.str(digits);
  d["tau"] = r.tau.str(digits);
  d["sigma"] = r.sigma.str(digits);
  d["regime"] = describe(r.regime);
  d["subexp"] = describe(r.subexp);
  d["residual"] = sci(r.residual, 3);
  return d;
}

py::dict report(const ResidualReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["tested_order"] = r.tested_order;
  d["is_zero"] = r.is_zero;
  d["first_nonzero"] = r.first_nonzero;
  d["u_mode"] = r.u_mode;
  return d;
}

}  // namespace

PYBIND11_MODULE(_forestmaps, m) {
  m.attr("__version__") = version();

  m.def("series", &series, py::arg("p"), py::arg("order"), py::arg("u") = "symbolic",
        "Coefficient tables keyed by series name; each entry lists the u-coefficients of z^n as rational strings.");
  m.def("spanning_tree_counts", [](int p, int order) {
    std::vector<std::string> out;
    for (const auto& c : spanning_tree_counts(p, order)) out.push_back(c.get_str());
    return out;
  });
  m.def("oracle", [](int p, int n, const std::string& variant) {
    std::vector<std::string> out;
    UPoly f = oracle_F(p, n, parse_oracle_variant(variant));
    for (const auto& q : f.coeffs()) out.push_back(to_string(q));
    return out;
  }, py::arg("p"), py::arg("n_faces"), py::arg("variant") = "all_forests");
  m.def("check_identity", [](const std::string& name, int order) {
    return report(check_identity(parse_identity(name), order));
  });
  m.def("check_de", [](const std::string& name, int order) { return report(check_de(parse_de(name), order)); });
  m.def("identities", [] {
    std::vector<std::string> out;
    for (auto id : all_identities()) out.push_back(name_of(id));
    return out;
  });
  m.def("radius", &radius_py, py::arg("p"), py::arg("u"), py::arg("digits") = 50);
  m.def("kappa", [](const std::string& u, int digits) {
    Precision pr = prec_for(digits);
    PrecisionScope scope(pr);
    return kappa(to_real(parse_rational(u)), pr).str(digits);
  }, py::arg("u"), py::arg("digits") = 50);
  m.def("criterion", [](int id) {
    auto r = run_criterion(id);
    py::dict d;
    d["id"] = r.id;
    d["title"] = r.title;
    d["pass"] = r.pass;
    d["detail"] = r.detail;
    return d;
  });
}
