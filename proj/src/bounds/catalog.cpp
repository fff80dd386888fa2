#include "zdx/bounds/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace zdx {

namespace {

AffExpr aff(Rat c, Rat nu, Rat ups, Rat d = 0) {
  return AffExpr(std::move(c), {{Var::nu, std::move(nu)}, {Var::upsilon, std::move(ups)}, {Var::d, std::move(d)}});
}

const AffExpr kNu = AffExpr::var(Var::nu);
const AffExpr kUps = AffExpr::var(Var::upsilon);
const AffExpr kD = AffExpr::var(Var::d);

KConstraint le(const AffExpr& lhs, const AffExpr& rhs, std::string label) {
  return {KAffExpr(lhs - rhs), Relation::le_zero, std::move(label)};
}
KConstraint ge(const AffExpr& lhs, const AffExpr& rhs, std::string label) {
  return {KAffExpr(lhs - rhs), Relation::ge_zero, std::move(label)};
}

KConstraint nu_min() { return ge(kNu, Rat(2, 3), "N >= T^(2/3)"); }
KConstraint v_large() { return ge(kUps, Rat(3, 4) * kNu, "V >= N^(3/4)"); }
KConstraint delta_le_one() { return le(kD, Rat(0), "delta <= 1"); }

LargeValueBound completion() {
  return {"completion",
          "\"obtained via Fourier completion\": |A| << N^2/V^2 + T N/V^2",
          {aff(1, 1, -2), aff(0, 2, -2)},
          {},
          {},
          std::nullopt};
}

LargeValueBound huxley() {
  return {"huxley",
          "\"The following is due to Huxley\": |A| << N^2/V^2 + T N^4/V^6 for V >= N^{3/4}",
          {aff(0, 2, -2), aff(1, 4, -6)},
          {v_large()},
          {},
          std::nullopt};
}

LargeValueBound bourgain() {
  return {"bourgain",
          "\"recover Bourgain's result\": N >= T^{2/3}, |A| <= N, V >= N^{3/4+o(1)}",
          {aff(0, 2, -2, -1), aff(2, 4, -8, 1), aff(Rat(1, 3), Rat(16, 3), Rat(-20, 3), Rat(-1, 3)),
           aff(Rat(2, 3), 9, -12)},
          {nu_min(), v_large(), delta_le_one()},
          {"|A| <= N"},
          std::nullopt};
}

LargeValueBound main1() {
  // (1/T) V^{4k}/N^{3k-1} and N^{1+1/(k-1)}/T caps on delta.
  KAffExpr cap1(KCoeff(1), {{Var::d, KCoeff(1)},
                            {Var::upsilon, KCoeff::linear(0, -4)},
                            {Var::nu, KCoeff::linear(-1, 3)}});
  KAffExpr cap2(KCoeff(1), {{Var::d, KCoeff(1)}, {Var::nu, KCoeff(0, -1, -1, 1)}});
  KAffExpr second(KCoeff(Rat(1, 3)), {{Var::d, KCoeff(Rat(-1, 3))},
                                      {Var::nu, KCoeff::linear(Rat(4, 3), 1)},
                                      {Var::upsilon, KCoeff::linear(Rat(-4, 3), Rat(-4, 3))}});
  LargeValueBound b{"main1",
                    "\"Let $k\\geqslant 2$ be a positive integer and $\\delta$\": |A| << N^2/(delta V^2) + "
                    "T^{1/3} N^{k+4/3}/(delta^{1/3} V^{4k/3+4/3})",
                    {KAffExpr(aff(0, 2, -2, -1)), std::move(second)},
                    {nu_min(), v_large(),
                     KConstraint{std::move(cap1), Relation::le_zero, "delta <= V^(4k)/(T N^(3k-1))"},
                     KConstraint{std::move(cap2), Relation::le_zero, "delta <= N^(1+1/(k-1))/T"}},
                    {"|A| <= N"},
                    2};
  return b;
}

LargeValueBound main4() {
  return {"main4",
          "\"V\\geqslant N^{25/32+o(1)}\": four-term estimate with N^{26}/(V^{32} T) <= delta <= V^{16}/(N^{11} T)",
          {aff(0, 2, -2, -1), aff(2, 4, -8, 1), aff(-1, 8, -8, -2), aff(0, 10, -12, Rat(-2, 3))},
          {ge(kUps, Rat(25, 32) * kNu, "V >= N^(25/32)"),
           ge(kD, Rat(26) * kNu - Rat(32) * kUps - Rat(1), "delta >= N^26/(V^32 T)"),
           le(kD, Rat(16) * kUps - Rat(11) * kNu - Rat(1), "delta <= V^16/(N^11 T)"), delta_le_one()},
          {"|A| <= min(N, N^4/T^2)"},
          std::nullopt};
}

LargeValueBound main12() {
  return {"main12",
          "\"recover a zero density estimate of Ivic\": N >= T^{2/3}, |A| <= N, delta <= V^8/(T N^5)",
          {aff(0, 2, -2, -1), aff(Rat(4, 3), Rat(23, 3), -12, Rat(2, 3)), aff(Rat(2, 3), Rat(14, 3), Rat(-20, 3))},
          {nu_min(), le(kD, Rat(8) * kUps - Rat(5) * kNu - Rat(1), "delta <= V^8/(T N^5)"), delta_le_one()},
          {"|A| <= N"},
          std::nullopt};
}

std::vector<LargeValueBound> build() {
  std::vector<LargeValueBound> out{completion(), huxley(), bourgain(), main1(), main4(), main12()};
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

}  // namespace

void LargeValueBound::check_k(std::optional<int> k) const {
  if (!parametric()) return;
  if (!k) throw std::invalid_argument("bound '" + id + "' requires the parameter k");
  if (*k < *k_min)
    throw std::invalid_argument("bound '" + id + "': k = " + std::to_string(*k) + " is below the minimum " +
                                std::to_string(*k_min));
}

PiecewiseMax LargeValueBound::terms_at(std::optional<int> k) const {
  check_k(k);
  std::vector<AffExpr> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.at(k));
  return PiecewiseMax(std::move(out));
}

ConstraintSet LargeValueBound::constraints_at(std::optional<int> k) const {
  check_k(k);
  ConstraintSet cs;
  for (const auto& c : constraints) cs.add(c.at(k));
  return cs;
}

const std::vector<LargeValueBound>& catalog() {
  static const std::vector<LargeValueBound> entries = build();
  return entries;
}

const LargeValueBound& find_bound(const std::string& id) {
  for (const auto& b : catalog())
    if (b.id == id) return b;
  throw std::invalid_argument("unknown bound '" + id + "'");
}

PiecewiseMax terms_at_sigma(const LargeValueBound& bound, const Rat& sigma, std::optional<int> k) {
  return bound.terms_at(k).substitute(Var::upsilon, AffExpr::var(Var::nu, sigma));
}

ConstraintSet constraints_at_sigma(const LargeValueBound& bound, const Rat& sigma, std::optional<int> k) {
  return bound.constraints_at(k).substitute(Var::upsilon, AffExpr::var(Var::nu, sigma));
}

BoundEvaluation evaluate(const LargeValueBound& bound, const Rat& sigma, const Rat& nu, const Rat& d,
                         std::optional<int> k) {
  if (sigma <= Rat(1, 2) || sigma >= Rat(1))
    throw std::invalid_argument("sigma = " + sigma.str() + " is outside (1/2, 1)");
  if (nu.sign() <= 0) throw std::invalid_argument("nu = " + nu.str() + " must be positive");
  const Assignment at{{Var::nu, nu}, {Var::upsilon, sigma * nu}, {Var::d, d}};
  const PiecewiseMax terms = bound.terms_at(k);
  BoundEvaluation out;
  out.exponent = terms.evaluate(at);
  out.active_term = terms.argmax_term(at);
  out.report = bound.constraints_at(k).report(at);
  out.ok = std::all_of(out.report.begin(), out.report.end(), [](const auto& s) { return s.ok; });
  out.assumed = bound.assumed;
  return out;
}

}  // namespace zdx
