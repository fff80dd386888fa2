#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdx/lab/pointset.hpp"

namespace zdx {

/// Inequality check outcome. verdict is "pass", "fail" or "info" (computed,
/// never asserted).
struct IneqReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  double lhs = 0;
  double rhs_main = 0;
  double ratio = 0;
  double slack_budget = 1;
  std::string verdict;
  std::vector<std::pair<std::string, double>> intermediates;
  std::uint64_t seed = 0;

  bool passed() const { return verdict != "fail"; }
};

/// Fills ratio and verdict. rhs_main == 0 gives ratio 0 when lhs == 0 and
/// infinity otherwise.
void finish(IneqReport& r, bool asserted = true);

struct BucketResult {
  std::uint64_t sum_squares = 0;
  std::uint64_t I = 0;
  bool lower_ok = false;  ///< sum |A_k|^2 <= I
  bool upper_ok = false;  ///< I <= 3 sum |A_k|^2
};
/// Buckets A_k = {t : k Delta < t <= (k+1) Delta}. Throws for Delta <= 0.
BucketResult bucket_check(const PointSet& A, double Delta);

/// lhs = sum_{r != s} g_r g_s / (t_r - t_s)^2, rhs = (pi^2/3) sum g_r^2.
/// Throws std::invalid_argument unless the set is well spaced.
IneqReport hilbert_check(const PointSet& pts);

struct FejerFacts {
  double hat_zero = 0;        ///< F^(0)
  double max_hat_integer = 0;  ///< max |F^(k)| over 1 <= |k| <= 64
  double min_hat_grid = 0;    ///< min F^(y) over a dense grid of [-64, 64]
  double min_hat_quarter = 0;  ///< min F^(y) over |y| <= 1/4
  double quadrature_error = 0;  ///< |int F(x) cos(2 pi x y) dx - F^(y)| over sample y
  bool ok = false;
};
FejerFacts fejer_facts();

struct SuiteLine {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string detail;
};

/// The exact-constant suites: buckets, Hilbert, Fejer, stats against brute
/// force. Each randomized suite runs `instances` seeded instances.
std::vector<SuiteLine> exact_suite(std::uint64_t seed, std::size_t instances = 1000, unsigned threads = 0);

/// E and T_1, T_2 against brute-force enumeration, |A| <= 40.
SuiteLine energy_oracle_suite(std::uint64_t seed, std::size_t seeds = 100, unsigned threads = 0);

}  // namespace zdx
