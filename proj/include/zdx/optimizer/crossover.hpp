#pragma once

#include <optional>
#include <string>

#include "zdx/bounds/density.hpp"
#include "zdx/ratcalc/optimize.hpp"

namespace zdx {

/// A sigma where two density exponents agree.
struct Crossover {
  std::optional<Rat> exact;              ///< set when the root is rational
  std::optional<QuadraticRoots> quadratic;  ///< set for a quadratic irrational root
  int root_index = 0;                    ///< which of quadratic->roots
  double approx = 0.0;
  /// Rational bracket [lo, hi] around the root on which f - g changes sign.
  Rat bracket_lo, bracket_hi;
  std::string method;  ///< "linear", "quadratic" or "bisection"
};

/// Root of f = g in the interval. Formulas are evaluated without their
/// sigma-range checks. Single-piece bounds are solved exactly by clearing
/// denominators (degree <= 2); otherwise exact-sign bisection to 1e-12.
/// Throws std::domain_error when f - g has no sign change at the ends.
Crossover crossover(const DensityBound& f, const DensityBound& g, const Interval& interval);

}  // namespace zdx
