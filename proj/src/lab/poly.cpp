#include "zdx/lab/poly.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "zdx/lab/random.hpp"

namespace zdx {

SamplePoly SamplePoly::constant_one(long N) {
  if (N < 1) throw std::invalid_argument("polynomial length N must be >= 1");
  return {N, std::vector<cplx>(N + 1, cplx{1, 0}), "constant-one"};
}

SamplePoly SamplePoly::random_unimodular(long N, std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("polynomial length N must be >= 1");
  Rng rng(seed);
  std::vector<cplx> a(N + 1);
  for (auto& z : a) z = rng.unimodular();
  return {N, std::move(a), fmt::format("random-unimodular seed={}", seed)};
}

SamplePoly SamplePoly::from_coeffs(long N, std::vector<cplx> coeffs) {
  if (N < 1 || coeffs.size() != static_cast<std::size_t>(N + 1))
    throw std::invalid_argument("coefficient vector must have length N+1");
  for (const auto& z : coeffs)
    if (!(std::abs(z) <= 1 + 1e-12)) throw std::invalid_argument("coefficient exceeds modulus 1");
  return {N, std::move(coeffs), "user-supplied"};
}

void CompensatedSum::add(cplx z) {
  const cplx y = z - comp_;
  const cplx s = sum_ + y;
  comp_ = (s - sum_) - y;
  sum_ = s;
}

cplx dirichlet_sum(long lo, long hi, double alpha, double t, const std::vector<cplx>* a) {
  CompensatedSum acc;
  for (long n = std::max(lo, 1L); n <= hi; ++n) {
    const double ln = std::log(static_cast<double>(n));
    const double mod = alpha == 0 ? 1.0 : std::exp(-alpha * ln);
    cplx term = std::polar(mod, t * ln);
    if (a) term *= (*a)[n - lo];
    acc.add(term);
  }
  return acc.value();
}

cplx eval_poly(const SamplePoly& p, double t) {
  if (!std::isfinite(t)) throw std::invalid_argument("t must be finite");
  return dirichlet_sum(p.N, 2 * p.N, 0, t, &p.coeffs);
}

std::vector<GridPoint> eval_grid(const SamplePoly& p, double T, double step, unsigned threads) {
  if (!(step > 0) || step > 0.25) throw std::invalid_argument("grid step must lie in (0, 1/4]");
  if (!(T >= 0)) throw std::invalid_argument("grid horizon T must be >= 0");
  const auto count = static_cast<std::size_t>(std::floor(T / step + 1e-9)) + 1;
  std::vector<GridPoint> out(count);
  unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, (count + 255) / 256));
  constexpr std::size_t block = 256;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b; (b = next.fetch_add(block)) < count;)
      for (std::size_t j = b; j < std::min(count, b + block); ++j) {
        const double t = static_cast<double>(j) * step;
        out[j] = {t, std::abs(eval_poly(p, t))};
      }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return out;
}

std::string grid_csv(const std::vector<GridPoint>& grid) {
  std::string out = "t,abs_value\n";
  for (const auto& g : grid) out += fmt::format("{},{}\n", g.t, g.abs_value);
  return out;
}

}  // namespace zdx
