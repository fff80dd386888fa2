#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdx/lab/exact_checks.hpp"

namespace zdx {

/// Instance shape for a harness entry. Each entry reads only the fields it
/// needs; the rest are ignored.
struct HarnessInstance {
  long N = 64;
  double T = 1024;
  std::size_t R = 64;     ///< number of points in the generated set
  double Delta = 0;       ///< 0 means T
  int k = 2;
  double t = 0;
  double v_exp = 0.8;     ///< V = N^v_exp for large-value sets
  double sigma = 0.625;   ///< real part for the zeta kernel entry
  bool random_coeffs = true;
  double slack = 10;
};

inline constexpr long kHarnessMaxN = 4096;
inline constexpr double kHarnessMaxT = 1e5;
inline constexpr std::size_t kHarnessMaxPoints = 2048;

/// Registered ids, sorted.
std::vector<std::string> harness_ids();
/// The desk-scale instance each entry runs with by default.
HarnessInstance default_instance(const std::string& id);

/// lhs and rhs_main of one analytic statement with constant 1 and its stated
/// log powers. Throws std::invalid_argument for an unknown id and
/// std::domain_error (naming the window) for an out-of-window instance.
IneqReport harness(const std::string& id, const HarnessInstance& inst, std::uint64_t seed);

/// Ratios at N = 256, 512, 1024 with a fixed instance shape.
struct TrendReport {
  std::string id;
  std::vector<long> Ns;
  std::vector<double> ratios;
  double slack = 10;
  bool within_slack = false;
  bool no_growth = false;  ///< ratio(2N) <= 2 ratio(N)
  bool ok() const { return within_slack && no_growth; }
};
TrendReport trend(const std::string& id, std::uint64_t seed, double slack = 10);
/// Ids covered by the trend suite.
std::vector<std::string> trend_ids();

struct AsymptoticSuite {
  std::vector<IneqReport> entries;
  std::vector<TrendReport> trends;
  bool ok() const;
};
AsymptoticSuite asymptotic_suite(std::uint64_t seed, double slack = 10, unsigned threads = 0);

}  // namespace zdx
