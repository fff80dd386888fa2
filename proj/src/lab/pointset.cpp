#include "zdx/lab/pointset.hpp"

#include <algorithm>
#include <stdexcept>

#include "zdx/lab/random.hpp"

namespace zdx {

bool PointSet::well_spaced() const {
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i] - points[i - 1] < 1) return false;
  return true;
}

void PointSet::validate() const {
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i] > points[i - 1])) throw std::invalid_argument("points must be strictly increasing");
  if (!weights.empty()) {
    if (weights.size() != points.size()) throw std::invalid_argument("one weight per point required");
    for (double w : weights)
      if (!(w > 0)) throw std::invalid_argument("weights must be positive");
  }
}

PointSet extract_large_values(const std::vector<GridPoint>& grid, double V) {
  PointSet out;
  for (const auto& g : grid) {
    out.T = std::max(out.T, g.t);
    if (g.abs_value < V) continue;
    if (out.points.empty() || g.t - out.points.back() >= 1) out.points.push_back(g.t);
  }
  return out;
}

std::size_t max_spaced_count(const std::vector<GridPoint>& grid, double V) {
  std::vector<double> q;
  for (const auto& g : grid)
    if (g.abs_value >= V) q.push_back(g.t);
  // best[i] = largest 1-spaced subset of q[0..i)
  std::vector<std::size_t> best(q.size() + 1, 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const auto prev = std::upper_bound(q.begin(), q.begin() + i, q[i] - 1) - q.begin();
    best[i + 1] = std::max(best[i], best[prev] + 1);
  }
  return best.back();
}

PointSet random_points(std::size_t n, double lo, double hi, std::uint64_t seed) {
  Rng rng(seed);
  PointSet out;
  out.T = hi;
  while (out.points.size() < n) {
    for (std::size_t i = out.points.size(); i < n; ++i) out.points.push_back(rng.uniform(lo, hi));
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  }
  return out;
}

PointSet random_well_spaced(std::size_t n, double lo, double spread, std::uint64_t seed) {
  Rng rng(seed);
  PointSet out;
  double t = lo;
  for (std::size_t i = 0; i < n; ++i) {
    out.points.push_back(t);
    t += 1 + spread * rng.uniform();
  }
  out.T = out.points.empty() ? lo : out.points.back();
  return out;
}

void random_weights(PointSet& pts, double lo, double hi, std::uint64_t seed) {
  Rng rng(seed);
  pts.weights.resize(pts.size());
  for (auto& w : pts.weights) w = rng.uniform(lo, hi);
}

}  // namespace zdx
