#include "zdx/lab/report.hpp"

#include <cmath>

#include <fmt/format.h>

namespace zdx {

using nlohmann::ordered_json;

std::string decimal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return fmt::format("{}", x);
}

ordered_json to_json(const IneqReport& r) {
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  ordered_json inter = ordered_json::object();
  for (const auto& [k, v] : r.intermediates) inter[k] = decimal(v);
  return {{"id", r.id},
          {"seed", r.seed},
          {"params", params},
          {"lhs", decimal(r.lhs)},
          {"rhs_main", decimal(r.rhs_main)},
          {"ratio", decimal(r.ratio)},
          {"slack_budget", decimal(r.slack_budget)},
          {"verdict", r.verdict},
          {"intermediates", inter}};
}

ordered_json to_json(const SuiteLine& s) {
  return {{"suite", s.name}, {"instances", s.instances}, {"failures", s.failures}, {"detail", s.detail}};
}

ordered_json to_json(const TrendReport& tr) {
  ordered_json ratios = ordered_json::array();
  for (double x : tr.ratios) ratios.push_back(decimal(x));
  return {{"id", tr.id},
          {"N", tr.Ns},
          {"ratios", ratios},
          {"slack_budget", decimal(tr.slack)},
          {"within_slack", tr.within_slack},
          {"no_growth", tr.no_growth},
          {"verdict", tr.ok() ? "pass" : "fail"}};
}

ordered_json to_json(const BProcessReport& b) {
  return {{"t", decimal(b.t)},
          {"N", b.N},
          {"direct", {decimal(b.direct.real()), decimal(b.direct.imag())}},
          {"transformed", {decimal(b.transformed.real()), decimal(b.transformed.imag())}},
          {"dual_range", {b.m_lo, b.m_hi}},
          {"deviation", decimal(b.deviation)},
          {"budget", decimal(b.budget)},
          {"verdict", b.ok ? "pass" : "fail"}};
}

ordered_json to_json(const FejerFacts& f) {
  return {{"hat_zero", decimal(f.hat_zero)},
          {"max_hat_integer", decimal(f.max_hat_integer)},
          {"min_hat_grid", decimal(f.min_hat_grid)},
          {"min_hat_quarter", decimal(f.min_hat_quarter)},
          {"quadrature_error", decimal(f.quadrature_error)},
          {"verdict", f.ok ? "pass" : "fail"}};
}

}  // namespace zdx
