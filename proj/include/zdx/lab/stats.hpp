#pragma once

#include <cstdint>
#include <map>

#include "zdx/lab/pointset.hpp"

namespace zdx {

struct CountStats {
  std::uint64_t I_delta = 0;  ///< ordered pairs with |t1 - t2| <= Delta, diagonal included
  std::uint64_t energy = 0;   ///< quadruples with |t1 + t2 - t3 - t4| <= 1
  std::uint64_t T_k = 0;      ///< 2k-tuples with |t1 + ... + tk - ... - t2k| <= 1
  std::map<long, std::uint64_t> r_hist;  ///< l -> #{(t1, t2) : 0 <= t1 - t2 - l < 1}
};

inline constexpr std::size_t kStatsMaxPoints = 4096;
inline constexpr std::size_t kStatsMaxSums = std::size_t{1} << 24;

/// Exact counts. I and r by direct enumeration, E and T_k by sorting the
/// k-fold sums. Throws std::invalid_argument for k outside 1..3, more than
/// kStatsMaxPoints points, or more than kStatsMaxSums k-fold sums.
CountStats stats(const PointSet& A, double Delta, int k);

std::uint64_t count_I(const std::vector<double>& pts, double Delta);
std::map<long, std::uint64_t> r_histogram(const std::vector<double>& pts);
/// #{(x, y) in sums^2 : |x - y| <= 1} via binary search on sorted sums.
std::uint64_t close_pairs(std::vector<double> sums);
std::uint64_t count_T(const std::vector<double>& pts, int k);

// Brute-force oracles, O(n^2) and O(n^{2k}).
std::uint64_t brute_I(const std::vector<double>& pts, double Delta);
std::map<long, std::uint64_t> brute_r(const std::vector<double>& pts);
std::uint64_t brute_T(const std::vector<double>& pts, int k);

}  // namespace zdx
