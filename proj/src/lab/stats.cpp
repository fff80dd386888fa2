#include "zdx/lab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace zdx {

namespace {

long pair_index(double t1, double t2) { return static_cast<long>(std::floor(t1 - t2)); }

// All ordered k-fold sums, accumulated left to right.
std::vector<double> kfold_sums(const std::vector<double>& pts, int k) {
  std::vector<double> sums{0.0};
  for (int j = 0; j < k; ++j) {
    std::vector<double> next;
    next.reserve(sums.size() * pts.size());
    for (double s : sums)
      for (double p : pts) next.push_back(j == 0 ? p : s + p);
    sums = std::move(next);
  }
  return sums;
}

bool close(double x, double y) { return std::fabs(x - y) <= 1; }

}  // namespace

std::uint64_t count_I(const std::vector<double>& pts, double Delta) {
  // pts sorted: for each i count j >= i within Delta, then mirror
  std::uint64_t off = 0;
  std::size_t hi = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    hi = std::max(hi, i);
    while (hi + 1 < pts.size() && std::fabs(pts[hi + 1] - pts[i]) <= Delta) ++hi;
    off += hi - i;
  }
  return pts.size() + 2 * off;
}

std::map<long, std::uint64_t> r_histogram(const std::vector<double>& pts) {
  std::map<long, std::uint64_t> hist;
  for (double a : pts)
    for (double b : pts) ++hist[pair_index(a, b)];
  return hist;
}

std::uint64_t close_pairs(std::vector<double> sums) {
  std::sort(sums.begin(), sums.end());
  std::uint64_t total = 0;
  for (double x : sums) {
    // x - y is nonincreasing in y, so the close y form one run
    auto first = std::partition_point(sums.begin(), sums.end(), [x](double y) { return x - y > 1; });
    auto last = std::partition_point(first, sums.end(), [x](double y) { return close(x, y); });
    total += static_cast<std::uint64_t>(last - first);
  }
  return total;
}

std::uint64_t count_T(const std::vector<double>& pts, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("T_k supports k = 1, 2, 3 (got " + std::to_string(k) + ")");
  double n = 1;
  for (int j = 0; j < k; ++j) n *= static_cast<double>(pts.size());
  if (n > static_cast<double>(kStatsMaxSums))
    throw std::invalid_argument("T_k: |A|^k = " + std::to_string(static_cast<long long>(n)) + " exceeds the sum cap");
  return close_pairs(kfold_sums(pts, k));
}

CountStats stats(const PointSet& A, double Delta, int k) {
  A.validate();
  if (A.size() > kStatsMaxPoints) throw std::invalid_argument("stats: at most 4096 points");
  CountStats s;
  s.I_delta = count_I(A.points, Delta);
  s.r_hist = r_histogram(A.points);
  s.energy = count_T(A.points, 2);
  s.T_k = k == 2 ? s.energy : count_T(A.points, k);
  return s;
}

std::uint64_t brute_I(const std::vector<double>& pts, double Delta) {
  std::uint64_t c = 0;
  for (double a : pts)
    for (double b : pts) c += std::fabs(a - b) <= Delta;
  return c;
}

std::map<long, std::uint64_t> brute_r(const std::vector<double>& pts) {
  std::map<long, std::uint64_t> hist;
  if (pts.empty()) return hist;
  auto [mn, mx] = std::minmax_element(pts.begin(), pts.end());
  const long span = static_cast<long>(std::ceil(*mx - *mn)) + 1;
  for (long l = -span; l <= span; ++l) {
    std::uint64_t c = 0;
    for (double a : pts)
      for (double b : pts) {
        const double d = a - b - static_cast<double>(l);
        c += d >= 0 && d < 1;
      }
    if (c) hist[l] = c;
  }
  return hist;
}

std::uint64_t brute_T(const std::vector<double>& pts, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("brute_T supports k = 1, 2, 3");
  const std::size_t n = pts.size();
  std::uint64_t c = 0;
  if (n == 0) return 0;
  if (k == 1) {
    for (double a : pts)
      for (double b : pts) c += close(a, b);
  } else if (k == 2) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t e = 0; e < n; ++e) c += close(pts[a] + pts[b], pts[d] + pts[e]);
  } else {
    std::vector<std::size_t> ix(6, 0);
    while (true) {
      c += close(pts[ix[0]] + pts[ix[1]] + pts[ix[2]], pts[ix[3]] + pts[ix[4]] + pts[ix[5]]);
      std::size_t j = 0;
      while (j < 6 && ++ix[j] == n) ix[j++] = 0;
      if (j == 6) break;
    }
  }
  return c;
}

}  // namespace zdx
