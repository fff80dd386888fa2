#include "zdx/bounds/serialize.hpp"

#include <stdexcept>

#include <json.hpp>

namespace zdx {

using nlohmann::json;

namespace {

json coeff_json(const KCoeff& c) {
  if (!c.uses_k()) return c.value().str();
  return json{{"num", {c.a.str(), c.b.str()}}, {"den", {c.c.str(), c.e.str()}}};
}

KCoeff coeff_from(const json& j) {
  if (j.is_string()) return KCoeff(Rat::parse(j.get<std::string>()));
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("coefficient must be a \"p/q\" string or {num, den}");
  const auto& n = j.at("num");
  const auto& d = j.at("den");
  if (n.size() != 2 || d.size() != 2) throw std::invalid_argument("k-coefficient needs two-element num and den");
  return KCoeff(Rat::parse(n[0].get<std::string>()), Rat::parse(n[1].get<std::string>()),
                Rat::parse(d[0].get<std::string>()), Rat::parse(d[1].get<std::string>()));
}

json expr_json(const KAffExpr& e) {
  json coeffs = json::object();
  for (const auto& [v, c] : e.coeffs) coeffs[std::string(var_name(v))] = coeff_json(c);
  return json{{"constant", coeff_json(e.constant)}, {"coeffs", coeffs}};
}

KAffExpr expr_from(const json& j) {
  std::map<Var, KCoeff> coeffs;
  for (const auto& [name, c] : j.at("coeffs").items()) coeffs.emplace(var_from_name(name), coeff_from(c));
  return KAffExpr(coeff_from(j.at("constant")), std::move(coeffs));
}

json bound_json(const LargeValueBound& b) {
  json terms = json::array();
  for (const auto& t : b.terms) terms.push_back(expr_json(t));
  json cons = json::array();
  for (const auto& c : b.constraints)
    cons.push_back(json{{"expr", expr_json(c.expr)}, {"rel", std::string(relation_name(c.rel))}, {"label", c.label}});
  return json{{"id", b.id},
              {"provenance", b.provenance},
              {"k_min", b.k_min ? json(*b.k_min) : json(nullptr)},
              {"assumed", b.assumed},
              {"terms", terms},
              {"constraints", cons}};
}

LargeValueBound bound_from(const json& j) {
  LargeValueBound b;
  b.id = j.at("id").get<std::string>();
  b.provenance = j.at("provenance").get<std::string>();
  if (!j.at("k_min").is_null()) b.k_min = j.at("k_min").get<int>();
  b.assumed = j.at("assumed").get<std::vector<std::string>>();
  for (const auto& t : j.at("terms")) b.terms.push_back(expr_from(t));
  if (b.terms.empty()) throw std::invalid_argument("bound '" + b.id + "' has no terms");
  for (const auto& c : j.at("constraints"))
    b.constraints.push_back(
        KConstraint{expr_from(c.at("expr")), relation_from_name(c.at("rel").get<std::string>()),
                    c.at("label").get<std::string>()});
  return b;
}

std::string rendered(const KConstraint& c) {
  return c.expr.str() + (c.rel == Relation::le_zero ? " <= 0" : " >= 0");
}

}  // namespace

std::string catalog_to_json(const std::vector<LargeValueBound>& bounds, int indent) {
  json arr = json::array();
  for (const auto& b : bounds) arr.push_back(bound_json(b));
  return json{{"format", "zdx-catalog"}, {"version", 1}, {"bounds", arr}}.dump(indent);
}

std::vector<LargeValueBound> catalog_from_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.value("format", "") != "zdx-catalog") throw std::invalid_argument("not a zdx-catalog document");
    std::vector<LargeValueBound> out;
    for (const auto& b : doc.at("bounds")) out.push_back(bound_from(b));
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed catalog JSON: ") + e.what());
  }
}

std::string describe(const LargeValueBound& b) {
  std::string s = b.id;
  if (b.k_min) s += " (k >= " + std::to_string(*b.k_min) + ")";
  s += "\n  source: " + b.provenance + "\n  terms:\n";
  for (const auto& t : b.terms) s += "    " + t.str() + "\n";
  if (!b.constraints.empty()) {
    s += "  constraints:\n";
    for (const auto& c : b.constraints) s += "    " + rendered(c) + "   [" + c.label + "]\n";
  }
  for (const auto& a : b.assumed) s += "  assumed: " + a + "\n";
  return s;
}

}  // namespace zdx
