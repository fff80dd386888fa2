#pragma once

#include <complex>

namespace zdx {

/// zeta(sigma + it) by Euler-Maclaurin with ceil(2(|t| + 10)) terms and two
/// Bernoulli corrections. Window: 0 < sigma <= 2, |t| <= 1e5, s != 1.
/// Throws std::domain_error outside it.
std::complex<double> zeta_em(double sigma, double t);

struct MomentScan {
  double integral = 0;       ///< int_0^T |zeta|^power
  double half_integral = 0;  ///< int_0^{T/2} |zeta|^power
  double slope = 0;          ///< log2(integral / half_integral)
};

/// Composite Simpson at step 1/8. power in {2, 4, 8}, 0 < T <= 1e5.
MomentScan moment_scan(double sigma, int power, double T, unsigned threads = 0);

}  // namespace zdx
