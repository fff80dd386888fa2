#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace zdx {

using cplx = std::complex<double>;

/// sum_{N <= n <= 2N} a_n n^{it}; coeffs[j] is a_{N+j}.
struct SamplePoly {
  long N = 1;
  std::vector<cplx> coeffs;
  std::string provenance;

  static SamplePoly constant_one(long N);
  static SamplePoly random_unimodular(long N, std::uint64_t seed);
  /// Throws std::invalid_argument unless length is N+1 and |a_n| <= 1 + 1e-12.
  static SamplePoly from_coeffs(long N, std::vector<cplx> coeffs);
};

/// Kahan-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(cplx z);
  cplx value() const { return sum_; }

 private:
  cplx sum_{0, 0}, comp_{0, 0};
};

cplx eval_poly(const SamplePoly& p, double t);

/// sum_{lo <= n <= hi} a(n) n^{-alpha + it}; a == nullptr means a(n) = 1.
cplx dirichlet_sum(long lo, long hi, double alpha, double t, const std::vector<cplx>* a = nullptr);

struct GridPoint {
  double t;
  double abs_value;
};

/// |p(t)| at t = j*step <= T. Requires 0 < step <= 1/4 (std::invalid_argument).
/// threads == 0 uses hardware concurrency; output order never depends on it.
std::vector<GridPoint> eval_grid(const SamplePoly& p, double T, double step, unsigned threads = 0);

/// CSV with header "t,abs_value".
std::string grid_csv(const std::vector<GridPoint>& grid);

}  // namespace zdx
