#pragma once

#include <map>
#include <optional>
#include <string>

#include "zdx/ratcalc/affine.hpp"
#include "zdx/ratcalc/rat.hpp"

namespace zdx {

/// Coefficient of the form (a + b*k) / (c + e*k) in the integer parameter k.
/// A plain rational has b = e = 0 and c = 1.
struct KCoeff {
  Rat a{0}, b{0}, c{1}, e{0};

  KCoeff() = default;
  KCoeff(Rat r) : a(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  KCoeff(Rat a_, Rat b_, Rat c_, Rat e_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), e(std::move(e_)) {}

  static KCoeff linear(Rat constant, Rat per_k) { return {std::move(constant), std::move(per_k), 1, 0}; }

  bool uses_k() const { return !b.is_zero() || !e.is_zero(); }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  /// Throws std::domain_error when the denominator vanishes at k.
  Rat at(const Rat& k) const;
  /// Value of a k-free coefficient; throws std::logic_error if it uses k.
  Rat value() const;
  std::string str() const;

  friend bool operator==(const KCoeff&, const KCoeff&) = default;
};

/// Affine expression in {nu, upsilon, d} whose coefficients may depend on k.
struct KAffExpr {
  KCoeff constant;
  std::map<Var, KCoeff> coeffs;

  KAffExpr() = default;
  KAffExpr(const AffExpr& e);  // NOLINT(google-explicit-constructor)
  KAffExpr(KCoeff c, std::map<Var, KCoeff> cs);

  bool uses_k() const;
  AffExpr at(std::optional<int> k) const;
  std::string str() const;

  friend bool operator==(const KAffExpr&, const KAffExpr&) = default;
};

struct KConstraint {
  KAffExpr expr;
  Relation rel = Relation::le_zero;
  std::string label;

  Constraint at(std::optional<int> k) const;
  friend bool operator==(const KConstraint&, const KConstraint&) = default;
};

}  // namespace zdx
