#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "zdx/ratcalc/affine.hpp"
#include "zdx/ratcalc/rat.hpp"

namespace zdx {

/// Raised when a constraint set leaves no feasible point. The message names
/// the constraint that emptied the region.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, std::string constraint)
      : std::runtime_error(what), constraint_(std::move(constraint)) {}
  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

struct Interval {
  Rat lo;
  Rat hi;
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Intersection of [lo, hi] with every constraint, all of which must be
/// affine in `var` alone. Throws InfeasibleError when the result is empty.
Interval feasible_interval(Var var, const Rat& lo, const Rat& hi, const ConstraintSet& constraints);

struct Extremum {
  Rat arg;
  Rat value;
};

/// Exact minimiser of max(terms) over the feasible part of [lo, hi].
///
/// Candidates are the interval ends and every pairwise crossing of terms
/// inside the interval; on ties the smaller argument wins.
Extremum minimize_max(const PiecewiseMax& terms, Var var, const Rat& lo, const Rat& hi,
                      const ConstraintSet& constraints = {});

/// Exact max of a convex piecewise-linear function on [lo, hi]. Attained at
/// an endpoint; on ties the smaller endpoint is reported.
Extremum max_over_interval(const PiecewiseMax& f, Var var, const Rat& lo, const Rat& hi);

/// One root of a quadratic with rational coefficients.
struct QuadraticRoot {
  std::optional<Rat> exact;  ///< set iff the discriminant is a rational square
  double approx = 0.0;       ///< |approx - root| <= 1e-12 in every case
};

struct QuadraticRoots {
  Rat a, b, c;                       ///< retained for certification
  std::array<QuadraticRoot, 2> roots;  ///< ascending
  bool rational() const { return roots[0].exact.has_value(); }
};

/// Roots of a*x^2 + b*x + c. Throws std::domain_error for a == 0 or a
/// negative discriminant.
QuadraticRoots solve_quadratic(const Rat& a, const Rat& b, const Rat& c);

}  // namespace zdx
