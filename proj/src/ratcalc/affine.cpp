#include "zdx/ratcalc/affine.hpp"

#include <stdexcept>

namespace zdx {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::nu: return "nu";
    case Var::upsilon: return "upsilon";
    case Var::d: return "d";
    case Var::y: return "y";
  }
  return "?";
}

Var var_from_name(std::string_view name) {
  if (name == "nu") return Var::nu;
  if (name == "upsilon") return Var::upsilon;
  if (name == "d") return Var::d;
  if (name == "y") return Var::y;
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

AffExpr::AffExpr(Rat constant) : constant_(std::move(constant)) {}

AffExpr::AffExpr(Rat constant, std::map<Var, Rat> coeffs) : constant_(std::move(constant)) {
  for (auto& [v, c] : coeffs) add_term(v, c);
}

AffExpr AffExpr::var(Var v, Rat coeff) {
  AffExpr e;
  e.add_term(v, coeff);
  return e;
}

void AffExpr::add_term(Var v, const Rat& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(v);
  if (it == coeffs_.end()) {
    coeffs_.emplace(v, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

Rat AffExpr::coeff(Var v) const {
  auto it = coeffs_.find(v);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

Rat AffExpr::evaluate(const Assignment& at) const {
  Rat out = constant_;
  for (const auto& [v, c] : coeffs_) {
    auto it = at.find(v);
    if (it == at.end())
      throw std::invalid_argument("no value for variable '" + std::string(var_name(v)) + "'");
    out += c * it->second;
  }
  return out;
}

AffExpr AffExpr::substitute(Var v, const AffExpr& replacement) const {
  auto it = coeffs_.find(v);
  if (it == coeffs_.end()) return *this;
  AffExpr out = *this;
  const Rat c = it->second;
  out.coeffs_.erase(v);
  out += replacement * c;
  return out;
}

AffExpr AffExpr::substitute(const Assignment& at) const {
  AffExpr out = *this;
  for (const auto& [v, value] : at) out = out.substitute(v, AffExpr(value));
  return out;
}

AffExpr AffExpr::operator-() const { return *this * Rat(-1); }

AffExpr& AffExpr::operator+=(const AffExpr& rhs) {
  constant_ += rhs.constant_;
  for (const auto& [v, c] : rhs.coeffs_) add_term(v, c);
  return *this;
}

AffExpr& AffExpr::operator-=(const AffExpr& rhs) { return *this += -rhs; }

AffExpr& AffExpr::operator*=(const Rat& k) {
  if (k.is_zero()) {
    constant_ = 0;
    coeffs_.clear();
    return *this;
  }
  constant_ *= k;
  for (auto& [v, c] : coeffs_) c *= k;
  return *this;
}

std::string AffExpr::str() const {
  std::string out;
  if (!constant_.is_zero() || coeffs_.empty()) out = constant_.str();
  for (const auto& [v, c] : coeffs_) {
    const bool neg = c.sign() < 0;
    const Rat mag = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != Rat(1)) out += mag.str() + "*";
    out += var_name(v);
  }
  return out;
}

Linear as_linear(const AffExpr& e, Var v) {
  for (const auto& [w, c] : e.coeffs()) {
    if (w != v)
      throw std::invalid_argument("expression '" + e.str() + "' still depends on '" +
                                  std::string(var_name(w)) + "'");
  }
  return Linear{e.coeff(v), e.constant()};
}

PiecewiseMax::PiecewiseMax(std::vector<AffExpr> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw std::invalid_argument("PiecewiseMax needs at least one term");
}

Rat PiecewiseMax::evaluate(const Assignment& at) const {
  return terms_[argmax_term(at)].evaluate(at);
}

std::size_t PiecewiseMax::argmax_term(const Assignment& at) const {
  std::size_t best = 0;
  Rat best_value = terms_[0].evaluate(at);
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    Rat v = terms_[i].evaluate(at);
    if (v > best_value) {
      best_value = std::move(v);
      best = i;
    }
  }
  return best;
}

PiecewiseMax PiecewiseMax::substitute(Var v, const AffExpr& replacement) const {
  std::vector<AffExpr> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.substitute(v, replacement));
  return PiecewiseMax(std::move(out));
}

PiecewiseMax PiecewiseMax::substitute(const Assignment& at) const {
  std::vector<AffExpr> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.substitute(at));
  return PiecewiseMax(std::move(out));
}

std::string_view relation_name(Relation r) { return r == Relation::le_zero ? "<=0" : ">=0"; }

Relation relation_from_name(std::string_view name) {
  if (name == "<=0") return Relation::le_zero;
  if (name == ">=0") return Relation::ge_zero;
  throw std::invalid_argument("unknown relation '" + std::string(name) + "'");
}

Rat Constraint::margin(const Assignment& at) const {
  const Rat v = expr.evaluate(at);
  return rel == Relation::le_zero ? -v : v;
}

Constraint leq(const AffExpr& lhs, const AffExpr& rhs, std::string label) {
  return Constraint{lhs - rhs, Relation::le_zero, std::move(label), Rat(0)};
}

Constraint geq(const AffExpr& lhs, const AffExpr& rhs, std::string label) {
  return Constraint{lhs - rhs, Relation::ge_zero, std::move(label), Rat(0)};
}

bool ConstraintSet::satisfied(const Assignment& at) const {
  for (const auto& c : constraints_)
    if (!c.satisfied(at)) return false;
  return true;
}

std::vector<ConstraintStatus> ConstraintSet::report(const Assignment& at) const {
  std::vector<ConstraintStatus> out;
  out.reserve(constraints_.size());
  for (const auto& c : constraints_) {
    Rat m = c.margin(at);
    const bool ok = m >= c.slack;
    out.push_back(ConstraintStatus{c.label, std::move(m), ok});
  }
  return out;
}

ConstraintSet ConstraintSet::substitute(Var v, const AffExpr& replacement) const {
  ConstraintSet out = *this;
  for (auto& c : out.constraints_) c.expr = c.expr.substitute(v, replacement);
  return out;
}

ConstraintSet ConstraintSet::substitute(const Assignment& at) const {
  ConstraintSet out = *this;
  for (auto& c : out.constraints_) c.expr = c.expr.substitute(at);
  return out;
}

ConstraintSet ConstraintSet::with_slack(const Rat& eps) const {
  ConstraintSet out = *this;
  for (auto& c : out.constraints_) c.slack = eps;
  return out;
}

}  // namespace zdx
