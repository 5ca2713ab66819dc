#pragma once

#include "forestmaps/real.hpp"
#include "forestmaps/series.hpp"

#include <json.hpp>

#include <string>

namespace fm {

using Json = nlohmann::ordered_json;

std::string version();

Json to_json(const Rational& q);
/// Array of rational strings, index = power of u.
Json to_json(const UPoly& p);
/// {"order": N, "coeffs": [[...], ...]}
Json to_json(const ZSeries& s);
Json to_json(const QSeries& s);
Json real_json(const Real& x, int digits = 30);

UPoly upoly_from_json(const Json& j);
ZSeries zseries_from_json(const Json& j);

/// Top-level record: {"tool", "version", "tag", "config", "result"}.
Json envelope(const std::string& tag, const Json& config, Json result);

}  // namespace fm
