#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zdx/ratcalc/rat.hpp"

namespace zdx {

/// Log-scale variables. Every quantity is a power of T, so N = T^nu,
/// V = T^upsilon, delta = T^d and Y = T^y.
enum class Var { nu, upsilon, d, y };

std::string_view var_name(Var v);
/// Inverse of var_name; throws std::invalid_argument for unknown names.
Var var_from_name(std::string_view name);

using Assignment = std::map<Var, Rat>;

/// constant + sum(coeff[v] * v). Zero coefficients are never stored, so
/// operator== is structural equality of the canonical form.
class AffExpr {
 public:
  AffExpr() = default;
  AffExpr(Rat constant);  // NOLINT(google-explicit-constructor)
  AffExpr(Rat constant, std::map<Var, Rat> coeffs);

  static AffExpr var(Var v, Rat coeff = 1);

  const Rat& constant() const { return constant_; }
  const std::map<Var, Rat>& coeffs() const { return coeffs_; }
  Rat coeff(Var v) const;
  bool depends_on(Var v) const { return coeffs_.contains(v); }
  bool is_constant() const { return coeffs_.empty(); }

  /// Throws std::invalid_argument if a variable with nonzero coefficient is
  /// missing from the assignment.
  Rat evaluate(const Assignment& at) const;

  AffExpr substitute(Var v, const AffExpr& replacement) const;
  AffExpr substitute(const Assignment& at) const;

  AffExpr operator-() const;
  AffExpr& operator+=(const AffExpr& rhs);
  AffExpr& operator-=(const AffExpr& rhs);
  AffExpr& operator*=(const Rat& k);
  friend AffExpr operator+(AffExpr a, const AffExpr& b) { return a += b; }
  friend AffExpr operator-(AffExpr a, const AffExpr& b) { return a -= b; }
  friend AffExpr operator*(AffExpr a, const Rat& k) { return a *= k; }
  friend AffExpr operator*(const Rat& k, AffExpr a) { return a *= k; }

  friend bool operator==(const AffExpr&, const AffExpr&) = default;

  /// Human-readable form such as "1/3 - 1/3*d + 25/3*nu".
  std::string str() const;

 private:
  void add_term(Var v, const Rat& c);
  Rat constant_{0};
  std::map<Var, Rat> coeffs_;
};

/// Slope and intercept of an expression that depends on at most one
/// variable `v`. Throws std::invalid_argument when other variables remain.
struct Linear {
  Rat slope;
  Rat intercept;
  Rat at(const Rat& x) const { return slope * x + intercept; }
};
Linear as_linear(const AffExpr& e, Var v);

/// Value is the max over a nonempty list of affine terms.
class PiecewiseMax {
 public:
  explicit PiecewiseMax(std::vector<AffExpr> terms);

  const std::vector<AffExpr>& terms() const { return terms_; }
  Rat evaluate(const Assignment& at) const;
  /// Index of the first term attaining the max.
  std::size_t argmax_term(const Assignment& at) const;
  PiecewiseMax substitute(Var v, const AffExpr& replacement) const;
  PiecewiseMax substitute(const Assignment& at) const;

  friend bool operator==(const PiecewiseMax&, const PiecewiseMax&) = default;

 private:
  std::vector<AffExpr> terms_;
};

enum class Relation { le_zero, ge_zero };

std::string_view relation_name(Relation r);
Relation relation_from_name(std::string_view name);

/// expr <= 0 or expr >= 0. `slack` tightens the inequality: a constraint
/// with slack eps holds iff margin >= eps.
struct Constraint {
  AffExpr expr;
  Relation rel = Relation::le_zero;
  std::string label;
  Rat slack{0};

  /// Distance into the feasible side; >= 0 iff satisfied without slack.
  Rat margin(const Assignment& at) const;
  bool satisfied(const Assignment& at) const { return margin(at) >= slack; }

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// lhs <= rhs as a labelled constraint.
Constraint leq(const AffExpr& lhs, const AffExpr& rhs, std::string label);
/// lhs >= rhs as a labelled constraint.
Constraint geq(const AffExpr& lhs, const AffExpr& rhs, std::string label);

struct ConstraintStatus {
  std::string label;
  Rat margin;
  bool ok = false;
};

class ConstraintSet {
 public:
  ConstraintSet() = default;
  explicit ConstraintSet(std::vector<Constraint> cs) : constraints_(std::move(cs)) {}

  void add(Constraint c) { constraints_.push_back(std::move(c)); }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  bool empty() const { return constraints_.empty(); }

  bool satisfied(const Assignment& at) const;
  std::vector<ConstraintStatus> report(const Assignment& at) const;

  ConstraintSet substitute(Var v, const AffExpr& replacement) const;
  ConstraintSet substitute(const Assignment& at) const;
  /// Same constraints with every slack set to eps.
  ConstraintSet with_slack(const Rat& eps) const;

  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;

 private:
  std::vector<Constraint> constraints_;
};

}  // namespace zdx
