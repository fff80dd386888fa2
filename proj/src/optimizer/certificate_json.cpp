#include "zdx/optimizer/certificate_json.hpp"

#include <json.hpp>

namespace zdx {

using nlohmann::ordered_json;

namespace {

ordered_json interval(const Interval& iv) { return ordered_json::array({iv.lo.str(), iv.hi.str()}); }

ordered_json opt_k(const std::optional<int>& k) { return k ? ordered_json(*k) : ordered_json(nullptr); }

}  // namespace

std::string to_json(const StrategyCertificate& cert, int indent) {
  ordered_json pieces = ordered_json::array();
  for (const auto& p : cert.pieces)
    pieces.push_back({{"nu", interval(p.nu)},
                      {"bound", p.bound},
                      {"k", opt_k(p.k)},
                      {"d", p.d_formula},
                      {"worst_nu", p.worst_nu.str()},
                      {"achieved", p.achieved.str()},
                      {"ok", p.ok},
                      {"violation", p.violation}});
  ordered_json checks = ordered_json::array();
  for (const auto& c : cert.checks)
    checks.push_back({{"label", c.label}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"ok", c.ok}});
  ordered_json j{{"strategy", strategy_name(cert.strategy)},
                 {"sigma", cert.sigma.str()},
                 {"target", cert.target.str()},
                 {"y", cert.y.str()},
                 {"split", cert.split ? ordered_json(cert.split->str()) : ordered_json(nullptr)},
                 {"reduction_term", cert.reduction_term.str()},
                 {"pieces", pieces},
                 {"checks", checks},
                 {"assumptions", cert.assumptions},
                 {"verdict", cert.pass ? "pass" : "fail"}};
  return j.dump(indent);
}

std::string to_json(const SearchResult& res, int indent) {
  ordered_json j{{"feasible", res.feasible}};
  if (!res.feasible) {
    j["reason"] = res.reason;
    return j.dump(indent);
  }
  ordered_json pieces = ordered_json::array();
  for (const auto& p : res.pieces) {
    ordered_json table = ordered_json::array();
    for (const auto& [nu, d] : p.d_table) table.push_back({nu.str(), d.str()});
    pieces.push_back({{"nu", interval(p.nu)}, {"bound", p.bound}, {"k", opt_k(p.k)}, {"d_samples", table}});
  }
  j["value"] = res.value.str();
  j["y"] = res.y.str();
  j["worst_nu"] = res.worst_nu.str();
  j["reduction_term"] = res.reduction_term.str();
  j["pieces"] = pieces;
  return j.dump(indent);
}

std::string to_json(const Crossover& c, int indent) {
  ordered_json j{{"method", c.method},
                 {"exact", c.exact ? ordered_json(c.exact->str()) : ordered_json(nullptr)},
                 {"approx", c.approx},
                 {"bracket", ordered_json::array({c.bracket_lo.str(), c.bracket_hi.str()})}};
  if (c.quadratic)
    j["quadratic"] = {c.quadratic->a.str(), c.quadratic->b.str(), c.quadratic->c.str()};
  return j.dump(indent);
}

}  // namespace zdx
