#include "zdx/lab/bprocess.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"
#include "zdx/lab/poly.hpp"
#include "zdx/lab/random.hpp"

namespace zdx {

namespace {

void check_window(double t, long N) {
  if (!(t >= 1e3 && t <= 1e6) || N < 1 || static_cast<double>(N) > 10 * std::sqrt(t))
    throw std::domain_error("b-process window is 1e3 <= t <= 1e6, 1 <= N <= 10 sqrt(t)");
}

}  // namespace

BProcessReport b_process_check(double t, long N, double slack) {
  check_window(t, N);
  constexpr double two_pi = 2 * std::numbers::pi;
  BProcessReport r;
  r.t = t;
  r.N = N;
  r.direct = dirichlet_sum(N, 2 * N, 0, t);
  // sum n^{-it} = sum e(g(n)) with g(x) = -(t/2pi) log x, g'' > 0; the dual
  // frequencies are m = -mu with t/(2pi b) < mu < t/(2pi a)
  const double a = static_cast<double>(N) - 0.5, b = 2.0 * static_cast<double>(N) + 0.5;
  r.m_lo = static_cast<long>(std::floor(t / (two_pi * b))) + 1;
  r.m_hi = static_cast<long>(std::ceil(t / (two_pi * a))) - 1;
  CompensatedSum dual;
  for (long mu = r.m_lo; mu <= r.m_hi; ++mu) {
    const double x = t / (two_pi * static_cast<double>(mu));
    const double g2 = t / (two_pi * x * x);
    const double phase = -t * std::log(x) + t + std::numbers::pi / 4;
    dual.add(std::polar(1 / std::sqrt(g2), phase));
  }
  r.transformed = std::conj(dual.value());
  r.deviation = std::abs(r.direct - r.transformed);
  r.budget = slack * (static_cast<double>(N) / std::sqrt(t) + std::log(t));
  r.ok = r.deviation <= r.budget;
  return r;
}

ReflectionReport reflected_length_check(double t, long N, double slack) {
  check_window(t, N);
  ReflectionReport r;
  r.t = t;
  r.N = N;
  r.lhs = std::abs(dirichlet_sum(N, 2 * N, 0, t));
  const double dN = static_cast<double>(N);
  const long first = static_cast<long>(std::ceil(t / (2 * dN)));
  const long last = static_cast<long>(std::floor(t / dN));
  CompensatedSum partial;
  for (long n = first; n <= last; ++n) {
    const double ln = std::log(static_cast<double>(n));
    partial.add(std::polar(1.0, t * ln));
    r.max_short = std::max(r.max_short, std::abs(partial.value()));
  }
  const double scale = dN / std::sqrt(t);
  r.rhs = slack * (scale * r.max_short + scale + std::log(dN * t));
  r.ok = r.lhs <= r.rhs;
  return r;
}

std::vector<BProcessReport> b_process_batch(std::uint64_t seed, std::size_t count, double slack, unsigned threads) {
  std::vector<BProcessReport> out(count);
  detail::parallel_for(count, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const double t = std::pow(10.0, rng.uniform(3, 5));
    const double n = std::sqrt(t) * std::pow(2.0, rng.uniform(-1, 1));
    out[i] = b_process_check(t, std::max(1L, std::lround(n)), slack);
  });
  return out;
}

}  // namespace zdx
