#pragma once

#include "zdx/ratcalc/optimize.hpp"
#include "zdx/ratcalc/rat.hpp"

namespace zdx {

/// Exponent-level form of the zero-detection reduction: with Y = T^y,
/// N(sigma, T) << T^{o(1)} (|A| + T^{extra_term}) for some N = T^nu with
/// nu in [4y/3, 2y].
struct ReductionInstance {
  Rat sigma;
  Rat y;
  Rat extra_term;  ///< 2 + 6y(1 - 2 sigma)
  Interval nu_range;
};

/// Requires 1/2 < sigma < 1 and y > 0 (std::invalid_argument otherwise).
ReductionInstance reduce(const Rat& sigma, const Rat& y);

}  // namespace zdx
