#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace zdx {

/// Direct sum_{N <= n <= 2N} n^{it} against the stationary phase transform
/// of f(x) = (t / 2 pi) log x on [N - 1/2, 2N + 1/2].
struct BProcessReport {
  double t = 0;
  long N = 0;
  std::complex<double> direct;
  std::complex<double> transformed;
  long m_lo = 0, m_hi = 0;  ///< dual range, |m| in [m_lo, m_hi]; m_lo > m_hi when empty
  double deviation = 0;
  double budget = 0;  ///< slack * (N / sqrt(t) + log t)
  bool ok = false;
};
/// Window: 1e3 <= t <= 1e6, 1 <= N <= 10 sqrt(t). Throws std::domain_error.
BProcessReport b_process_check(double t, long N, double slack = 10);

/// |sum_{N..2N} n^{it}| <= slack ((N/sqrt t) max_{M <= t/N} |sum_{t/2N <= n <= M} n^{it}| + N/sqrt t + log(Nt)).
struct ReflectionReport {
  double t = 0;
  long N = 0;
  double lhs = 0;
  double max_short = 0;
  double rhs = 0;
  bool ok = false;
};
ReflectionReport reflected_length_check(double t, long N, double slack = 10);

/// Seeded (t, N) pairs with 1e3 <= t <= 1e5 and sqrt(t)/2 <= N <= 2 sqrt(t).
std::vector<BProcessReport> b_process_batch(std::uint64_t seed, std::size_t count, double slack = 10,
                                            unsigned threads = 0);

}  // namespace zdx
