#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zdx/ratcalc/optimize.hpp"
#include "zdx/ratcalc/rat.hpp"

namespace zdx {

/// Where Y = T^y may sit. A fixed y pins the nu-window to [4y/3, 2y].
struct YWindow {
  Rat lo;
  Rat hi;
  static YWindow fixed(const Rat& y) { return {y, y}; }
};

struct SearchOptions {
  std::vector<std::string> bounds;  ///< catalog ids; main1 expands over k_range
  int k_lo = 2;
  int k_hi = 12;  ///< empty when k_hi < k_lo
  YWindow y{Rat(1, 4), Rat(2)};
};

/// A nu-subinterval on which one bound (with its best d) is the minimum.
struct SearchPiece {
  Interval nu;
  std::string bound;
  std::optional<int> k;
  /// (nu, d) samples of the optimal d at the piece ends and midpoint.
  std::vector<std::pair<Rat, Rat>> d_table;
};

struct SearchResult {
  bool feasible = false;
  std::string reason;  ///< why no parameters work, when infeasible
  Rat value;           ///< max(reduction term, worst |A| exponent)
  Rat y;
  Rat worst_nu;
  Rat reduction_term;
  std::vector<SearchPiece> pieces;
};

/// Minimises over y, over the choice of bound at each nu, over d (exactly)
/// and over k in [k_lo, k_hi] the worst exponent on nu in [4y/3, 2y],
/// together with the reduction term 2 + 6y(1 - 2 sigma). Deterministic;
/// ties go to the smaller y.
SearchResult search(const Rat& sigma, const SearchOptions& opts);

}  // namespace zdx
