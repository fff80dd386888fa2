#include "zdx/bounds/kcoeff.hpp"

#include <stdexcept>

namespace zdx {

namespace {

std::string affine_k(const Rat& c0, const Rat& ck) {
  if (ck.is_zero()) return c0.str();
  std::string s = ck == Rat(1) ? "k" : ck == Rat(-1) ? "-k" : ck.str() + "*k";
  if (c0.sign() > 0) s += " + " + c0.str();
  if (c0.sign() < 0) s += " - " + (-c0).str();
  return s;
}

}  // namespace

Rat KCoeff::at(const Rat& k) const {
  const Rat den = c + e * k;
  if (den.is_zero()) throw std::domain_error("coefficient " + str() + " is singular at k = " + k.str());
  return (a + b * k) / den;
}

Rat KCoeff::value() const {
  if (uses_k()) throw std::logic_error("coefficient " + str() + " depends on k");
  return a / c;
}

std::string KCoeff::str() const {
  if (!uses_k()) return (a / c).str();
  const std::string num = "(" + affine_k(a, b) + ")";
  if (e.is_zero() && c == Rat(1)) return num;
  return num + "/(" + affine_k(c, e) + ")";
}

KAffExpr::KAffExpr(const AffExpr& e) : constant(e.constant()) {
  for (const auto& [v, c] : e.coeffs()) coeffs.emplace(v, KCoeff(c));
}

KAffExpr::KAffExpr(KCoeff c, std::map<Var, KCoeff> cs) : constant(std::move(c)) {
  for (auto& [v, kc] : cs)
    if (!kc.is_zero()) coeffs.emplace(v, std::move(kc));
}

bool KAffExpr::uses_k() const {
  if (constant.uses_k()) return true;
  for (const auto& [v, c] : coeffs)
    if (c.uses_k()) return true;
  return false;
}

AffExpr KAffExpr::at(std::optional<int> k) const {
  auto eval = [&](const KCoeff& c) {
    if (!c.uses_k()) return c.value();
    if (!k) throw std::invalid_argument("k is required to instantiate " + str());
    return c.at(Rat(*k));
  };
  std::map<Var, Rat> out;
  for (const auto& [v, c] : coeffs) out.emplace(v, eval(c));
  return AffExpr(eval(constant), std::move(out));
}

std::string KAffExpr::str() const {
  std::string s;
  const bool const_zero = !constant.uses_k() && constant.value().is_zero();
  if (!const_zero || coeffs.empty()) s = constant.str();
  for (const auto& [v, c] : coeffs) {
    std::string term;
    if (!c.uses_k()) {
      const Rat r = c.value();
      const bool neg = r.sign() < 0;
      const Rat m = neg ? -r : r;
      term = (m == Rat(1) ? "" : m.str() + "*") + std::string(var_name(v));
      if (s.empty())
        s = neg ? "-" + term : term;
      else
        s += (neg ? " - " : " + ") + term;
    } else {
      term = c.str() + "*" + std::string(var_name(v));
      s += s.empty() ? term : " + " + term;
    }
  }
  return s;
}

Constraint KConstraint::at(std::optional<int> k) const { return Constraint{expr.at(k), rel, label, Rat(0)}; }

}  // namespace zdx
