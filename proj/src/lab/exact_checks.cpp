#include "zdx/lab/exact_checks.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "parallel.hpp"
#include "zdx/lab/kernels.hpp"
#include "zdx/lab/random.hpp"
#include "zdx/lab/stats.hpp"

namespace zdx {

void finish(IneqReport& r, bool asserted) {
  if (r.rhs_main > 0)
    r.ratio = r.lhs / r.rhs_main;
  else
    r.ratio = r.lhs == 0 ? 0 : std::numeric_limits<double>::infinity();
  if (!asserted)
    r.verdict = "info";
  else
    r.verdict = r.ratio <= r.slack_budget ? "pass" : "fail";
}

BucketResult bucket_check(const PointSet& A, double Delta) {
  if (!(Delta > 0)) throw std::invalid_argument("bucket_check: Delta must be positive");
  A.validate();
  std::map<long, std::uint64_t> sizes;
  for (double t : A.points) ++sizes[static_cast<long>(std::ceil(t / Delta)) - 1];
  BucketResult out;
  for (const auto& [k, c] : sizes) out.sum_squares += c * c;
  out.I = count_I(A.points, Delta);
  out.lower_ok = out.sum_squares <= out.I;
  out.upper_ok = out.I <= 3 * out.sum_squares;
  return out;
}

IneqReport hilbert_check(const PointSet& pts) {
  pts.validate();
  if (!pts.well_spaced()) throw std::invalid_argument("hilbert_check: points must be well spaced");
  IneqReport r;
  r.id = "hilbert";
  r.params = {{"points", std::to_string(pts.size())}};
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      const double d = pts.points[i] - pts.points[j];
      r.lhs += pts.weight(i) * pts.weight(j) / (d * d);
    }
  r.rhs_main = std::numbers::pi * std::numbers::pi / 3 * gamma_norm2(pts);
  r.slack_budget = 1;
  finish(r);
  return r;
}

namespace {

// Simpson on [a, b] with n (even) panels.
template <class F>
double simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f(a + i * h);
  return s * h / 3;
}

}  // namespace

FejerFacts fejer_facts() {
  constexpr double tol = 1e-10;
  FejerFacts f;
  f.hat_zero = fejer_hat(0);
  for (int k = 1; k <= 64; ++k)
    f.max_hat_integer = std::max({f.max_hat_integer, fejer_hat(k), fejer_hat(-k)});
  f.min_hat_grid = 1;
  for (int j = -65536; j <= 65536; ++j) f.min_hat_grid = std::min(f.min_hat_grid, fejer_hat(j / 1024.0));
  f.min_hat_quarter = 1;
  for (int j = -1024; j <= 1024; ++j) f.min_hat_quarter = std::min(f.min_hat_quarter, fejer_hat(j / 4096.0));
  for (double y : {0.0, 0.25, 0.5, 1.0, 1.5, 3.7}) {
    auto g = [y](double x) { return fejer(x) * std::cos(2 * std::numbers::pi * x * y); };
    const double q = simpson(g, -1, 0, 4000) + simpson(g, 0, 1, 4000);
    f.quadrature_error = std::max(f.quadrature_error, std::fabs(q - fejer_hat(y)));
  }
  const double eight_over_pi2 = 8 / (std::numbers::pi * std::numbers::pi);
  f.ok = std::fabs(f.hat_zero - 1) <= tol && f.max_hat_integer <= tol && f.min_hat_grid >= 0 &&
         f.min_hat_quarter >= eight_over_pi2 - tol && f.quadrature_error <= tol;
  return f;
}

namespace {

template <class Check>
SuiteLine run_suite(const std::string& name, std::uint64_t seed, std::size_t n, unsigned threads, Check&& check) {
  std::vector<std::string> errors(n);
  detail::parallel_for(n, threads, [&](std::size_t i) { errors[i] = check(derive_seed(seed, i)); });
  SuiteLine line{name, n, 0, ""};
  for (std::size_t i = 0; i < n; ++i)
    if (!errors[i].empty()) {
      if (!line.failures) line.detail = fmt::format("instance {}: {}", i, errors[i]);
      ++line.failures;
    }
  return line;
}

std::vector<double> prefix(const std::vector<double>& v, std::size_t n) {
  return {v.begin(), v.begin() + static_cast<long>(std::min(n, v.size()))};
}

}  // namespace

std::vector<SuiteLine> exact_suite(std::uint64_t seed, std::size_t instances, unsigned threads) {
  std::vector<SuiteLine> out;
  out.push_back(run_suite("bucket", derive_seed(seed, 1), instances, threads, [](std::uint64_t s) -> std::string {
    Rng rng(s);
    const auto n = static_cast<std::size_t>(rng.integer(1, 500));
    const double L = rng.uniform(1, 1000);
    const double Delta = rng.uniform(0.1, 20);
    const PointSet A = random_points(n, 0, L, rng.next());
    const BucketResult b = bucket_check(A, Delta);
    if (b.I != brute_I(A.points, Delta)) return "I differs from brute force";
    if (!b.lower_ok || !b.upper_ok) return fmt::format("sum {} vs I {}", b.sum_squares, b.I);
    return "";
  }));
  out.push_back(run_suite("hilbert", derive_seed(seed, 2), instances, threads, [](std::uint64_t s) -> std::string {
    Rng rng(s);
    const auto n = static_cast<std::size_t>(rng.integer(2, 300));
    PointSet A = random_well_spaced(n, rng.uniform(0, 10), rng.uniform(0, 3), rng.next());
    random_weights(A, 0.1, 10, rng.next());
    const IneqReport r = hilbert_check(A);
    return r.passed() ? "" : fmt::format("ratio {}", r.ratio);
  }));
  out.push_back(run_suite("fejer", derive_seed(seed, 3), 1, threads, [](std::uint64_t) -> std::string {
    const FejerFacts f = fejer_facts();
    return f.ok ? "" : "kernel facts violated";
  }));
  out.push_back(run_suite("stats", derive_seed(seed, 4), instances, threads, [](std::uint64_t s) -> std::string {
    Rng rng(s);
    const auto n = static_cast<std::size_t>(rng.integer(1, 200));
    const double L = rng.uniform(1, 400);
    const double Delta = rng.uniform(0, 10);
    const PointSet A = random_points(n, 0, L, rng.next());
    if (count_I(A.points, Delta) != brute_I(A.points, Delta)) return "I differs";
    if (r_histogram(A.points) != brute_r(A.points)) return "r differs";
    // quartic and sextic oracles on prefixes
    const auto p2 = prefix(A.points, 24), p3 = prefix(A.points, 8);
    if (count_T(p2, 1) != brute_T(p2, 1)) return "T_1 differs";
    if (count_T(p2, 2) != brute_T(p2, 2)) return "E differs";
    if (count_T(p3, 3) != brute_T(p3, 3)) return "T_3 differs";
    return "";
  }));
  return out;
}

SuiteLine energy_oracle_suite(std::uint64_t seed, std::size_t seeds, unsigned threads) {
  return run_suite("energy-oracle", derive_seed(seed, 5), seeds, threads, [](std::uint64_t s) -> std::string {
    Rng rng(s);
    const double L = rng.uniform(20, 400);
    const PointSet A = random_points(40, 0, L, rng.next());
    const CountStats st = stats(A, 1, 1);
    if (st.energy != brute_T(A.points, 2)) return "E differs";
    if (st.T_k != brute_T(A.points, 1)) return "T_1 differs";
    if (count_T(A.points, 2) != st.energy) return "T_2 differs from E";
    return "";
  });
}

}  // namespace zdx
