#include "forestmaps/json_io.hpp"

#include <stdexcept>

namespace fm {

std::string version() { return FORESTMAPS_VERSION; }

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const UPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Json to_json(const ZSeries& s) {
  Json c = Json::array();
  for (const auto& x : s.coeffs()) c.push_back(to_json(x));
  return Json{{"order", s.order()}, {"coeffs", c}};
}

Json to_json(const QSeries& s) {
  Json c = Json::array();
  for (const auto& x : s.coeffs()) c.push_back(to_string(x));
  return Json{{"order", s.order()}, {"coeffs", c}};
}

Json real_json(const Real& x, int digits) { return sci(x, digits); }

UPoly upoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of rational strings");
  std::vector<Rational> c;
  for (const auto& e : j) c.push_back(parse_rational(e.get<std::string>()));
  return UPoly(std::move(c));
}

ZSeries zseries_from_json(const Json& j) {
  int order = j.at("order").get<int>();
  const auto& c = j.at("coeffs");
  if (!c.is_array() || static_cast<int>(c.size()) != order + 1)
    throw std::invalid_argument("series needs order + 1 coefficients");
  ZSeries s(order);
  for (int i = 0; i <= order; ++i) s[i] = upoly_from_json(c[i]);
  return s;
}

Json envelope(const std::string& tag, const Json& config, Json result) {
  return Json{{"tool", "forestmaps"}, {"version", version()}, {"tag", tag}, {"config", config}, {"result", std::move(result)}};
}

}  // namespace fm
