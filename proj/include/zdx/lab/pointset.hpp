#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zdx/lab/poly.hpp"

namespace zdx {

struct PointSet {
  std::vector<double> points;  ///< strictly increasing
  std::vector<double> weights;  ///< empty, or one positive weight per point
  double T = 0;

  std::size_t size() const { return points.size(); }
  double weight(std::size_t i) const { return weights.empty() ? 1.0 : weights[i]; }
  bool well_spaced() const;
  /// Throws std::invalid_argument on unsorted points or bad weights.
  void validate() const;
};

/// Greedy left-to-right selection of grid points with |value| >= V, each at
/// distance >= 1 from the previously accepted one.
PointSet extract_large_values(const std::vector<GridPoint>& grid, double V);

/// Largest 1-spaced subset of the qualifying points (interval scheduling oracle).
std::size_t max_spaced_count(const std::vector<GridPoint>& grid, double V);

/// n sorted uniform points in [lo, hi].
PointSet random_points(std::size_t n, double lo, double hi, std::uint64_t seed);
/// n points starting at lo with gaps uniform in [1, 1 + spread].
PointSet random_well_spaced(std::size_t n, double lo, double spread, std::uint64_t seed);
/// Weights uniform in [lo, hi].
void random_weights(PointSet& pts, double lo, double hi, std::uint64_t seed);

}  // namespace zdx
