#include "bernpoly/io.hpp"

#include "bernpoly/errors.hpp"

namespace bernpoly {
namespace {

Rational parse_field(const nlohmann::json& j, const char* where) {
  if (!j.is_string()) {
    throw ParseError{std::string(where) + " must be a canonical rational string"};
  }
  auto q = try_parse_rational(j.get<std::string>());
  if (!q) {
    throw ParseError{std::string(where) + ": not a canonical rational: \"" +
                     j.get<std::string>() + "\""};
  }
  return *q;
}

}  // namespace

nlohmann::json pmf_to_json(const BernoulliPmf& f) {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : f.values()) values.push_back(to_string(v));
  auto p = common_margin(f);
  nlohmann::json out;
  out["d"] = f.dimension();
  out["p"] = p ? nlohmann::json(to_string(*p)) : nlohmann::json(nullptr);
  out["order"] = "revlex";
  out["values"] = std::move(values);
  return out;
}

BernoulliPmf pmf_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError{"pmf document must be an object"};
  if (!j.contains("d") || !j["d"].is_number_integer()) {
    throw ParseError{"pmf document needs an integer \"d\""};
  }
  if (!j.contains("order") || j["order"] != "revlex") {
    throw ParseError{"pmf document must declare \"order\": \"revlex\""};
  }
  if (!j.contains("values") || !j["values"].is_array()) {
    throw ParseError{"pmf document needs a \"values\" array"};
  }
  const int d = j["d"].get<int>();
  std::vector<Rational> values;
  values.reserve(j["values"].size());
  for (const auto& entry : j["values"]) {
    values.push_back(parse_field(entry, "pmf value"));
  }
  BernoulliPmf f = make_pmf(d, std::move(values));
  if (j.contains("p") && !j["p"].is_null()) {
    const Rational declared = parse_field(j["p"], "margin p");
    auto actual = common_margin(f);
    if (!actual || *actual != declared) {
      throw ParseError{"declared p = " + to_string(declared) +
                       " does not match the margins of the values"};
    }
  }
  return f;
}

std::string pmf_to_json_string(const BernoulliPmf& f) { return pmf_to_json(f).dump(2); }

BernoulliPmf pmf_from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError{"invalid JSON"};
  return pmf_from_json(j);
}

nlohmann::json extremal_set_to_json(const ExtremalSet& es) {
  nlohmann::json vertices = nlohmann::json::array();
  nlohmann::json tags = nlohmann::json::array();
  nlohmann::json names = nlohmann::json::array();
  for (size_t i = 0; i < es.vertices.size(); ++i) {
    vertices.push_back(pmf_to_json(es.vertices[i]));
    tags.push_back(std::string(tag_name(es.tags[i])));
    names.push_back(es.names[i]);
  }
  nlohmann::json out;
  out["p"] = to_string(es.p.p());
  out["d"] = es.d;
  out["vertices"] = std::move(vertices);
  out["tags"] = std::move(tags);
  out["names"] = std::move(names);
  return out;
}

ExtremalSet extremal_set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("d") ||
      !j.contains("vertices") || !j.contains("tags")) {
    throw ParseError{"extremal set document needs p, d, vertices and tags"};
  }
  MarginParam p{parse_field(j["p"], "margin p")};
  ExtremalSet out{j["d"].get<int>(), p, {}, {}, {}};
  for (const auto& v : j["vertices"]) out.vertices.push_back(pmf_from_json(v));
  for (const auto& t : j["tags"]) {
    auto tag = tag_from_name(t.get<std::string>());
    if (!tag) throw ParseError{"unknown vertex tag \"" + t.get<std::string>() + "\""};
    out.tags.push_back(*tag);
  }
  if (out.tags.size() != out.vertices.size()) {
    throw ParseError{"vertices and tags have different lengths"};
  }
  if (j.contains("names")) {
    for (const auto& n : j["names"]) out.names.push_back(n.get<std::string>());
  }
  if (out.names.size() != out.vertices.size()) {
    out.names.clear();
    for (size_t i = 0; i < out.vertices.size(); ++i) {
      out.names.push_back("v" + std::to_string(i + 1));
    }
  }
  return out;
}

std::string extremal_set_to_csv(const ExtremalSet& es) {
  std::string out = "vertex,tag";
  const int n = 1 << es.d;
  for (int a = 0; a < n; ++a) out += ",f_" + atom_label(a, es.d);
  out += "\n";
  for (size_t i = 0; i < es.vertices.size(); ++i) {
    out += es.names[i];
    out += ",";
    out += tag_name(es.tags[i]);
    for (int a = 0; a < n; ++a) {
      out += "," + to_string(es.vertices[i].value(a));
    }
    out += "\n";
  }
  return out;
}

nlohmann::json correlation_profile_to_json(const CorrelationProfile& profile) {
  nlohmann::json rho = nlohmann::json::array();
  for (const auto& row : profile.rho) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& entry : row) r.push_back(to_string(entry));
    rho.push_back(std::move(r));
  }
  nlohmann::json out;
  out["rho"] = std::move(rho);
  out["classification"] = std::string(pairwise_class_name(profile.classification));
  return out;
}

nlohmann::json allocation_to_json(const ShapleyAllocation& allocation,
                                  const Rational& grand_value, Modularity modularity) {
  nlohmann::json phis = nlohmann::json::array();
  for (const auto& phi : allocation.phis) phis.push_back(to_string(phi));
  nlohmann::json out;
  out["phi"] = std::move(phis);
  out["grand_value"] = to_string(grand_value);
  out["modularity"] = std::string(modularity_name(modularity));
  return out;
}

std::string allocation_to_csv(const ShapleyAllocation& allocation,
                              const Rational& grand_value, Modularity modularity) {
  std::string out = "player,phi\n";
  for (size_t i = 0; i < allocation.phis.size(); ++i) {
    out += std::to_string(i + 1) + "," + to_string(allocation.phis[i]) + "\n";
  }
  out += "grand_value," + to_string(grand_value) + "\n";
  out += "modularity," + std::string(modularity_name(modularity)) + "\n";
  return out;
}

}  // namespace bernpoly
