#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdx/bounds/kcoeff.hpp"
#include "zdx/ratcalc/affine.hpp"

namespace zdx {

/// A bound of the form |A| <= T^{max(terms)} valid under `constraints`.
/// All exponents are in units of log T over the variables nu, upsilon, d.
struct LargeValueBound {
  std::string id;
  std::string provenance;
  std::vector<KAffExpr> terms;
  std::vector<KConstraint> constraints;
  /// Conditions on |A| itself; reported, never enforced.
  std::vector<std::string> assumed;
  /// Set for bounds with an integer parameter k >= k_min.
  std::optional<int> k_min;

  bool parametric() const { return k_min.has_value(); }
  /// Throws std::invalid_argument for a missing k on a parametric bound or
  /// a k outside the allowed range.
  void check_k(std::optional<int> k) const;

  PiecewiseMax terms_at(std::optional<int> k) const;
  ConstraintSet constraints_at(std::optional<int> k) const;

  friend bool operator==(const LargeValueBound&, const LargeValueBound&) = default;
};

/// The six large-value bounds sorted by id: bourgain, completion, huxley,
/// main1, main12, main4.
const std::vector<LargeValueBound>& catalog();
/// Throws std::invalid_argument for an unknown id.
const LargeValueBound& find_bound(const std::string& id);

struct BoundEvaluation {
  Rat exponent;
  std::size_t active_term = 0;
  std::vector<ConstraintStatus> report;
  bool ok = true;
  std::vector<std::string> assumed;
};

/// Exponent of |A| at upsilon = sigma * nu, with each constraint's margin.
/// Requires 1/2 < sigma < 1 and nu > 0.
BoundEvaluation evaluate(const LargeValueBound& bound, const Rat& sigma, const Rat& nu, const Rat& d,
                         std::optional<int> k = std::nullopt);

/// Terms and constraints with upsilon replaced by sigma * nu.
PiecewiseMax terms_at_sigma(const LargeValueBound& bound, const Rat& sigma, std::optional<int> k);
ConstraintSet constraints_at_sigma(const LargeValueBound& bound, const Rat& sigma, std::optional<int> k);

}  // namespace zdx
