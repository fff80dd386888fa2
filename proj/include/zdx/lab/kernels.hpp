#pragma once

#include <vector>

#include "zdx/lab/pointset.hpp"
#include "zdx/lab/poly.hpp"

namespace zdx {

/// F(x) = max(1 - |x|, 0) and its transform (sin(pi y)/(pi y))^2.
double fejer(double x);
double fejer_hat(double y);

/// b(n) = exp(-(n/2N)^h) - exp(-(n/N)^h), evaluated in the log domain.
double jut_b(double n, double N, double h);
/// c_n = exp(-n/2N) - exp(-n/N).
double jut_c(double n, double N);
/// h = (log T)^2.
double jut_h(double T);

/// Pair-sum of modulus-squared Dirichlet sums over t_r - t_s:
///   sum_{r,s : lo_gap <= |t_r - t_s| <= hi_gap} g(r) g(s) |sum_{n=lo}^{hi} n^{-alpha + i(t_r - t_s)}|^2
/// The inner sum depends only on the pair, so each unordered pair is
/// evaluated once and counted twice.
struct PairSumSpec {
  long lo = 1, hi = 1;
  double alpha = 0;
  double lo_gap = 0;
  double hi_gap = 0;
  int power = 2;  ///< exponent on the modulus
};
double pair_sum(const PointSet& pts, const PairSumSpec& spec);

/// S(N, Delta, gamma) as defined with exponent n^{i(t_r - t_s)}.
double weighted_S(long N, double Delta, const PointSet& pts);
/// The n^{-1/2} normalized version used by the mean value theorems.
double weighted_S_half(long N, double Delta, const PointSet& pts);
/// I(Delta, gamma) = sum over |t_r - t_s| <= Delta of g(r) g(s).
double weighted_I(double Delta, const PointSet& pts);
/// ||gamma||_2^2.
double gamma_norm2(const PointSet& pts);

}  // namespace zdx
