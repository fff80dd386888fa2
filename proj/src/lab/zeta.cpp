#include "zdx/lab/zeta.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "parallel.hpp"
#include "zdx/lab/poly.hpp"

namespace zdx {

std::complex<double> zeta_em(double sigma, double t) {
  if (!(sigma > 0 && sigma <= 2) || !(std::fabs(t) <= 1e5))
    throw std::domain_error("zeta_em: window is 0 < sigma <= 2, |t| <= 1e5");
  if (sigma == 1 && t == 0) throw std::domain_error("zeta_em: pole at s = 1");
  const std::complex<double> s{sigma, t};
  const long K = static_cast<long>(std::ceil(2 * (std::fabs(t) + 10)));
  CompensatedSum acc;
  for (long n = 1; n < K; ++n) acc.add(std::exp(-s * std::log(static_cast<double>(n))));
  const double lk = std::log(static_cast<double>(K));
  const std::complex<double> k_s = std::exp(-s * lk);  // K^{-s}
  std::complex<double> z = acc.value();
  z += k_s * static_cast<double>(K) / (s - 1.0);
  z += k_s / 2.0;
  // B_2/2! s K^{-s-1} + B_4/4! s(s+1)(s+2) K^{-s-3}
  z += (1.0 / 12.0) * s * k_s / static_cast<double>(K);
  z += (-1.0 / 720.0) * s * (s + 1.0) * (s + 2.0) * k_s / std::pow(static_cast<double>(K), 3);
  return z;
}

MomentScan moment_scan(double sigma, int power, double T, unsigned threads) {
  if (power != 2 && power != 4 && power != 8) throw std::domain_error("moment_scan: power must be 2, 4 or 8");
  if (!(T > 0 && T <= 1e5)) throw std::domain_error("moment_scan: window is 0 < T <= 1e5");
  std::size_t n = static_cast<std::size_t>(std::ceil(8 * T));
  n = (n + 3) / 4 * 4;
  const double h = T / static_cast<double>(n);
  std::vector<double> f(n + 1);
  detail::parallel_for(n + 1, threads, [&](std::size_t i) {
    f[i] = std::pow(std::abs(zeta_em(sigma, static_cast<double>(i) * h)), power);
  });
  auto simpson = [&](std::size_t panels) {
    double s = f[0] + f[panels];
    for (std::size_t i = 1; i < panels; ++i) s += (i % 2 ? 4 : 2) * f[i];
    return s * h / 3;
  };
  MomentScan out;
  out.integral = simpson(n);
  out.half_integral = simpson(n / 2);
  out.slope = std::log2(out.integral / out.half_integral);
  return out;
}

}  // namespace zdx
