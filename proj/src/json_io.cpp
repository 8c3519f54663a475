#include "ichannel/json_io.hpp"

#include "ichannel/errors.hpp"

namespace ichannel {

namespace {

double require_number(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number()) {
    throw ConfigError(std::string("missing or non-numeric field \"") + key + "\"");
  }
  return doc[key].get<double>();
}

}  // namespace

ChannelConfig channel_config_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ConfigError("channel config must be a JSON object");
  ChannelConfig out;
  out.params.eta11 = require_number(doc, "eta11");
  out.params.eta12 = require_number(doc, "eta12");
  out.params.eta21 = require_number(doc, "eta21");
  out.params.eta22 = require_number(doc, "eta22");
  out.params.ns1 = require_number(doc, "NS1");
  out.params.ns2 = require_number(doc, "NS2");
  out.params.nb1 = require_number(doc, "NB1");
  out.params.nb2 = require_number(doc, "NB2");
  if (doc.contains("geometry")) {
    const auto& g = doc["geometry"];
    if (!g.is_object()) throw ConfigError("\"geometry\" must be a JSON object");
    FresnelGeometry geom;
    geom.at = require_number(g, "At");
    geom.ar = require_number(g, "Ar");
    geom.wavelength = require_number(g, "wavelength");
    geom.range = require_number(g, "L");
    out.geometry = geom;
  }
  if (doc.contains("split")) {
    const auto& s = doc["split"];
    if (!s.is_object()) throw ConfigError("\"split\" must be a JSON object");
    out.split = PowerSplit{require_number(s, "lambda1"), require_number(s, "lambda2")};
  }
  if (doc.contains("grid")) {
    if (!doc["grid"].is_number_integer()) throw ConfigError("\"grid\" must be an integer");
    out.grid = doc["grid"].get<int>();
  }
  return out;
}

nlohmann::json to_json(const ChannelParams& p) {
  return nlohmann::json{{"eta11", p.eta11}, {"eta12", p.eta12}, {"eta21", p.eta21},
                        {"eta22", p.eta22}, {"NS1", p.ns1},     {"NS2", p.ns2},
                        {"NB1", p.nb1},     {"NB2", p.nb2}};
}

nlohmann::json to_json(const RegimeReport& report) {
  nlohmann::json margins = nlohmann::json::array();
  for (const auto& m : report.margins) {
    margins.push_back({{"lhs", m.lhs}, {"rhs", m.rhs}, {"satisfied", m.satisfied}});
  }
  return nlohmann::json{{"strategy", to_string(report.strategy)},
                        {"regime", to_string(report.regime)},
                        {"margins", margins}};
}

}  // namespace ichannel
