#include "zdx/lab/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "parallel.hpp"
#include "zdx/lab/kernels.hpp"
#include "zdx/lab/poly.hpp"
#include "zdx/lab/random.hpp"
#include "zdx/lab/stats.hpp"
#include "zdx/lab/zeta.hpp"

namespace zdx {

namespace {

using Entry = std::function<void(const HarnessInstance&, std::uint64_t, IneqReport&)>;

[[noreturn]] void window(const std::string& id, const std::string& what) {
  throw std::domain_error(fmt::format("{}: instance outside window ({})", id, what));
}

void common_window(const std::string& id, const HarnessInstance& in) {
  if (in.N < 1 || in.N > kHarnessMaxN) window(id, "1 <= N <= 4096");
  if (!(in.T >= 1 && in.T <= kHarnessMaxT)) window(id, "1 <= T <= 1e5");
  if (in.R > kHarnessMaxPoints) window(id, "|A| <= 2048");
  if (!(in.slack > 0)) window(id, "slack > 0");
}

double delta_of(const HarnessInstance& in) { return in.Delta > 0 ? in.Delta : in.T; }

std::vector<cplx> coeffs(const HarnessInstance& in, std::size_t n, std::uint64_t seed) {
  if (!in.random_coeffs) return std::vector<cplx>(n, cplx{1, 0});
  Rng rng(seed);
  std::vector<cplx> a(n);
  for (auto& z : a) z = rng.unimodular();
  return a;
}

SamplePoly poly_of(const HarnessInstance& in, std::uint64_t seed) {
  return in.random_coeffs ? SamplePoly::random_unimodular(in.N, seed) : SamplePoly::constant_one(in.N);
}

// R distinct integers in [lo, hi], sorted: a well spaced set.
PointSet integer_points(std::size_t R, long lo, long hi, std::uint64_t seed) {
  std::vector<long> pool(static_cast<std::size_t>(hi - lo + 1));
  std::iota(pool.begin(), pool.end(), lo);
  Rng rng(seed);
  for (std::size_t i = 0; i < R; ++i)
    std::swap(pool[i], pool[i + static_cast<std::size_t>(rng.integer(0, static_cast<long>(pool.size() - i) - 1))]);
  PointSet out;
  for (std::size_t i = 0; i < R; ++i) out.points.push_back(static_cast<double>(pool[i]));
  std::sort(out.points.begin(), out.points.end());
  out.T = static_cast<double>(hi);
  return out;
}

PointSet points_of(const std::string& id, const HarnessInstance& in, std::uint64_t seed, long lo, bool weighted) {
  const long hi = static_cast<long>(std::floor(in.T));
  if (in.R < 1 || static_cast<long>(in.R) > hi - lo + 1) window(id, "1 <= |A| <= number of integers in [lo, T]");
  PointSet pts = integer_points(in.R, lo, hi, derive_seed(seed, 2));
  if (weighted) random_weights(pts, 0.5, 2, derive_seed(seed, 3));
  return pts;
}

PointSet large_values(const HarnessInstance& in, std::uint64_t seed, double V) {
  const SamplePoly p = poly_of(in, derive_seed(seed, 1));
  return extract_large_values(eval_grid(p, in.T, 0.25), V);
}

template <class F>
double simpson(F&& f, double a, double b, double max_step) {
  auto n = static_cast<std::size_t>(std::ceil((b - a) / max_step));
  n += n % 2;
  const double h = (b - a) / static_cast<double>(n);
  std::vector<double> v(n + 1);
  detail::parallel_for(n + 1, 0, [&](std::size_t i) { v[i] = f(a + static_cast<double>(i) * h); });
  double s = v[0] + v[n];
  for (std::size_t i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * v[i];
  return s * h / 3;
}

double norm2(const std::vector<cplx>& a) {
  double s = 0;
  for (const auto& z : a) s += std::norm(z);
  return s;
}

void removemax(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  if (in.N < 2) window(r.id, "N >= 2");
  if (!(std::fabs(in.t) <= kHarnessMaxT)) window(r.id, "|t| <= 1e5");
  const SamplePoly p = poly_of(in, derive_seed(seed, 1));
  const double L = std::log(static_cast<double>(in.N));
  r.lhs = std::abs(eval_poly(p, in.t));
  const double integral = simpson([&](double tau) { return std::abs(eval_poly(p, in.t + tau)); }, -L, L, 1.0 / 64);
  r.rhs_main = L * integral;
  r.intermediates = {{"log_N", L}, {"integral", integral}};
}

void classicalmv(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  if (in.N < 2) window(r.id, "N >= 2");
  if (in.T > 4096) window(r.id, "T <= 4096 (A is every integer in [0, T])");
  const auto a = coeffs(in, static_cast<std::size_t>(in.N), derive_seed(seed, 1));
  const long count = static_cast<long>(std::floor(in.T)) + 1;
  std::vector<double> vals(static_cast<std::size_t>(count));
  detail::parallel_for(vals.size(), 0, [&](std::size_t j) {
    vals[j] = std::norm(dirichlet_sum(1, in.N, 0, static_cast<double>(j), &a));
  });
  r.lhs = std::accumulate(vals.begin(), vals.end(), 0.0);
  const double a2 = norm2(a);
  r.rhs_main = (in.T + static_cast<double>(in.N)) * a2 * std::log(static_cast<double>(in.N));
  r.intermediates = {{"points", static_cast<double>(count)}, {"a_norm2", a2}};
}

void classicalmoments(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  if (in.k < 1 || in.k > 4) window(r.id, "1 <= k <= 4");
  const auto a = coeffs(in, static_cast<std::size_t>(in.N), derive_seed(seed, 1));
  const PointSet A = points_of(r.id, in, seed, 0, false);
  std::vector<double> vals(A.size());
  detail::parallel_for(A.size(), 0, [&](std::size_t j) {
    vals[j] = std::pow(std::abs(dirichlet_sum(1, in.N, 0.5, A.points[j], &a)), 2 * in.k);
  });
  r.lhs = std::accumulate(vals.begin(), vals.end(), 0.0);
  r.rhs_main = in.T + std::pow(static_cast<double>(in.N), in.k);
  r.intermediates = {{"points", static_cast<double>(A.size())}};
}

void heathbrown(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  const auto a = coeffs(in, static_cast<std::size_t>(in.N), derive_seed(seed, 1));
  const PointSet A = points_of(r.id, in, seed, 0, false);
  const std::size_t R = A.size();
  std::vector<double> row(R);
  detail::parallel_for(R, 0, [&](std::size_t i) {
    double acc = 0;
    for (std::size_t j = 0; j < R; ++j) acc += std::norm(dirichlet_sum(1, in.N, 0.5, A.points[i] - A.points[j], &a));
    row[i] = acc;
  });
  r.lhs = std::accumulate(row.begin(), row.end(), 0.0);
  const double n = static_cast<double>(R);
  r.rhs_main = n * n + static_cast<double>(in.N) * n + std::sqrt(in.T) * std::pow(n, 1.25);
  r.intermediates = {{"points", n}};
}

void e2energy(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  if (static_cast<double>(in.N) < std::pow(in.T, 2.0 / 3.0) - 1e-9) window(r.id, "N >= T^(2/3)");
  const double V = std::pow(static_cast<double>(in.N), in.v_exp);
  PointSet A = large_values(in, seed, V);
  // a subset of a large-value set is one; trim to meet |A| <= N
  if (A.size() > static_cast<std::size_t>(in.N)) A.points.resize(static_cast<std::size_t>(in.N));
  const auto hist = r_histogram(A.points);
  double W = 0, total = 0;
  for (const auto& [l, c] : hist) {
    W += static_cast<double>(c) * static_cast<double>(c);
    total += static_cast<double>(c);
  }
  const double N = static_cast<double>(in.N), n = static_cast<double>(A.size());
  r.lhs = W;
  r.rhs_main = std::pow(N, 1.5) / (V * V) * std::sqrt(n) * total + std::pow(N, 4) / std::pow(V, 4) * n;
  r.intermediates = {{"V", V}, {"points", n}, {"sum_r", total}};
}

void smoothsums(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  const double Delta = delta_of(in);
  if (Delta < 1) window(r.id, "Delta >= 1");
  if (in.N < 2) window(r.id, "N >= 2");
  const auto a = coeffs(in, static_cast<std::size_t>(in.N + 1), derive_seed(seed, 1));
  const PointSet A = points_of(r.id, in, seed, 1, true);
  const std::size_t R = A.size();
  std::vector<double> row(R);
  detail::parallel_for(R, 0, [&](std::size_t i) {
    double acc = 0;
    for (std::size_t j = 0; j < R; ++j) {
      const double u = A.points[i] - A.points[j];
      if (std::fabs(u) > Delta) continue;
      Rng rng(derive_seed(derive_seed(seed, 4), i * R + j));
      long lo = rng.integer(in.N, 2 * in.N), hi = rng.integer(in.N, 2 * in.N);
      if (lo > hi) std::swap(lo, hi);
      if (lo == hi) hi = std::min(hi + 1, 2 * in.N), lo = hi - 1;
      std::vector<cplx> part(a.begin() + (lo - in.N), a.begin() + (hi - in.N) + 1);
      acc += A.weight(i) * A.weight(j) * std::norm(dirichlet_sum(lo, hi, 0, u, &part));
    }
    row[i] = acc;
  });
  r.lhs = std::accumulate(row.begin(), row.end(), 0.0);
  const double L = std::log(static_cast<double>(in.N));
  const double S = weighted_S(in.N, Delta, A);
  r.rhs_main = L * L * S;
  r.intermediates = {{"S_full", S}};
}

void larger(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  if (in.N > kHarnessMaxN / 2) window(r.id, "M = 2N <= 4096");
  const double Delta = delta_of(in);
  const PointSet A = points_of(r.id, in, seed, 1, true);
  r.lhs = weighted_S_half(in.N, Delta, A);
  r.rhs_main = weighted_S_half(2 * in.N, Delta, A);
  r.intermediates = {{"M", 2.0 * static_cast<double>(in.N)}};
}

void square(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  if (in.N > 22) window(r.id, "N <= 22 so that M = 8N^2 <= 4096");
  const double Delta = delta_of(in);
  const PointSet A = points_of(r.id, in, seed, 1, true);
  const long M = 8 * in.N * in.N;
  const double S = weighted_S_half(in.N, Delta, A);
  const double I = weighted_I(Delta, A);
  const double SM = weighted_S_half(M, Delta, A);
  r.lhs = S * S;
  r.rhs_main = I * SM;
  r.intermediates = {{"M", static_cast<double>(M)}, {"S_N", S}, {"I", I}, {"S_M", SM}};
}

void mvsmall(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  const double Delta = delta_of(in);
  if (in.N < 2) window(r.id, "N >= 2");
  if (Delta < 1) window(r.id, "Delta >= 1");
  const PointSet A = points_of(r.id, in, seed, 1, true);
  const double I = weighted_I(Delta, A), g2 = gamma_norm2(A);
  r.lhs = weighted_S_half(in.N, Delta, A);
  r.rhs_main = static_cast<double>(in.N) * g2 + Delta / static_cast<double>(in.N) * I;
  r.intermediates = {{"I", I}, {"gamma_norm2", g2}};
}

void reflection_lemma(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  const double Delta = delta_of(in);
  const double N = static_cast<double>(in.N);
  if (Delta < N) window(r.id, "Delta >= N");
  if (2 * Delta / N > kHarnessMaxN) window(r.id, "2 Delta / N <= 4096");
  const PointSet A = points_of(r.id, in, seed, 1, true);
  r.lhs = pair_sum(A, {in.N, 2 * in.N, 0.5, Delta, 2 * Delta, 2});
  const long lo = static_cast<long>(std::ceil(Delta / (2 * N)));
  const long hi = static_cast<long>(std::floor(2 * Delta / N));
  const double dual = pair_sum(A, {lo, hi, 0.5, 0, 2 * Delta, 2});
  const double I = weighted_I(Delta, A);
  r.rhs_main = dual + I;
  r.intermediates = {{"dual_lo", static_cast<double>(lo)}, {"dual_hi", static_cast<double>(hi)}, {"dual", dual}, {"I", I}};
}

void reflection(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  const double Delta = delta_of(in);
  const double N = static_cast<double>(in.N);
  const long dual = static_cast<long>(std::floor(4 * Delta / N));
  if (dual < 1 || 2 * dual > kHarnessMaxN) window(r.id, "1 <= 4 Delta / N <= 2048");
  const PointSet A = points_of(r.id, in, seed, 1, true);
  const double Sd = weighted_S_half(dual, Delta, A);
  const double I = weighted_I(Delta, A), g2 = gamma_norm2(A);
  r.lhs = weighted_S_half(in.N, Delta, A);
  r.rhs_main = Sd + I + g2 * N;
  r.intermediates = {{"dual_N", static_cast<double>(dual)}, {"S_dual", Sd}, {"I", I}, {"gamma_norm2", g2}};
}

void largeadditive(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  const double Delta = delta_of(in);
  const PointSet A = points_of(r.id, in, seed, 1, true);
  const double I = weighted_I(Delta, A), g2 = gamma_norm2(A);
  r.lhs = weighted_S_half(in.N, Delta, A);
  r.rhs_main = I + static_cast<double>(in.N) * g2 + std::sqrt(Delta) * std::pow(I, 0.25) * std::pow(g2, 0.75);
  r.intermediates = {{"I", I}, {"gamma_norm2", g2}};
}

void largeadditive1(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  if (in.k < 1 || in.k > 3) window(r.id, "1 <= k <= 3");
  const double tuples = std::pow(static_cast<double>(in.R), 2 * in.k);
  if (tuples > static_cast<double>(1 << 22)) window(r.id, "|A|^(2k) <= 2^22");
  const auto a = coeffs(in, static_cast<std::size_t>(in.N + 1), derive_seed(seed, 1));
  const PointSet A = points_of(r.id, in, seed, 0, false);
  std::vector<double> sums{0.0};
  for (int j = 0; j < in.k; ++j) {
    std::vector<double> next;
    for (double s : sums)
      for (double p : A.points) next.push_back(s + p);
    sums = std::move(next);
  }
  // group equal k-fold sums (integer points) to cut the work
  std::map<double, double> mult;
  for (double s : sums) mult[s] += 1;
  std::vector<std::pair<double, double>> groups(mult.begin(), mult.end());
  std::vector<double> row(groups.size());
  detail::parallel_for(groups.size(), 0, [&](std::size_t i) {
    double acc = 0;
    for (const auto& [y, m] : groups)
      acc += m * std::norm(dirichlet_sum(in.N, 2 * in.N, 0.5, groups[i].first - y, &a));
    row[i] = groups[i].second * acc;
  });
  r.lhs = std::accumulate(row.begin(), row.end(), 0.0);
  const double Tk = static_cast<double>(count_T(A.points, in.k));
  const double n = static_cast<double>(A.size());
  r.rhs_main = tuples + static_cast<double>(in.N) * Tk + std::sqrt(in.T) * std::pow(n, in.k / 2.0) * std::pow(Tk, 0.75);
  r.intermediates = {{"T_k", Tk}, {"points", n}};
}

void mainvlarge1(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  const double N = static_cast<double>(in.N);
  const double V = std::pow(N, in.v_exp);
  if (in.v_exp < 0.75) window(r.id, "V^4 >= N^3, i.e. v_exp >= 3/4");
  const double dT = delta_of(in);
  if (!(dT > 0 && dT < in.T)) window(r.id, "0 < delta T < T");
  const PointSet A = large_values(in, seed, V);
  const long short_len = static_cast<long>(std::floor(dT / N));
  const double I = static_cast<double>(count_I(A.points, dT));
  const double pairs = pair_sum(A, {1, short_len, 0.5, 0, dT, 1});
  const double n = static_cast<double>(A.size());
  r.lhs = I;
  r.rhs_main = N * N / (V * V) * n + std::pow(N, 1.5) / (V * V) * pairs;
  r.intermediates = {{"V", V}, {"points", n}, {"short_length", static_cast<double>(short_len)}, {"pair_sum", pairs}};
}

void jut(const HarnessInstance& in, std::uint64_t, IneqReport& r) {
  const double h = jut_h(in.T);
  const double N = static_cast<double>(in.N);
  if (!(in.t >= h * h && in.t <= in.T)) window(r.id, "h^2 <= t <= T with h = (log T)^2");
  if (N > in.T) window(r.id, "N <= T");
  const long M = static_cast<long>(std::ceil(in.t / N));
  CompensatedSum lhs;
  for (long n = 1; n <= 4 * in.N; ++n) {
    const double nn = static_cast<double>(n);
    lhs.add(std::polar(jut_b(nn, N, h), -in.t * std::log(nn)));
  }
  r.lhs = std::abs(lhs.value());
  const double integral = simpson(
      [&](double tau) { return std::abs(dirichlet_sum(1, M, 0.5, in.t + tau)); }, -h * h, h * h, 1.0 / 8);
  r.rhs_main = std::sqrt(N) * integral + 1;
  r.intermediates = {{"h", h}, {"M", static_cast<double>(M)}, {"integral", integral}};
}

void jut1(const HarnessInstance& in, std::uint64_t, IneqReport& r) {
  const double h = jut_h(in.T);
  const double N = static_cast<double>(in.N);
  if (!(in.t >= h && in.t <= in.T)) window(r.id, "h <= t <= T with h = (log T)^2");
  if (!(in.sigma > 0 && in.sigma <= 2) || in.t + h > kHarnessMaxT) window(r.id, "0 < sigma <= 2, t + h <= 1e5");
  CompensatedSum lhs;
  for (long n = 1; n <= 80 * in.N; ++n) {
    const double nn = static_cast<double>(n);
    lhs.add(std::polar(jut_c(nn, N) * std::pow(nn, -in.sigma), -in.t * std::log(nn)));
  }
  r.lhs = std::abs(lhs.value());
  const double integral =
      simpson([&](double tau) { return std::abs(zeta_em(in.sigma, in.t + tau)); }, -h, h, 1.0 / 8);
  r.rhs_main = integral + 1;
  r.intermediates = {{"h", h}, {"integral", integral}};
}

void montgomery(const HarnessInstance& in, std::uint64_t seed, IneqReport& r) {
  const double N = static_cast<double>(in.N);
  const double V = std::pow(N, in.v_exp);
  const SamplePoly p = poly_of(in, derive_seed(seed, 1));
  const PointSet A = extract_large_values(eval_grid(p, in.T, 0.25), V);
  for (double t : A.points) r.lhs += std::norm(eval_poly(p, t));
  const double n = static_cast<double>(A.size());
  r.rhs_main = N * n + N * N;
  r.intermediates = {{"V", V}, {"points", n}};
}

struct Registered {
  Entry run;
  bool asserted;
};

const std::map<std::string, Registered>& registry() {
  static const std::map<std::string, Registered> r{
      {"classicalmoments", {classicalmoments, true}},
      {"classicalmv", {classicalmv, true}},
      {"e2energy", {e2energy, true}},
      {"heathbrown", {heathbrown, true}},
      {"jut", {jut, true}},
      {"jut1", {jut1, true}},
      {"largeadditive", {largeadditive, true}},
      {"largeadditive1", {largeadditive1, true}},
      {"larger", {larger, true}},
      {"mainvlarge1", {mainvlarge1, true}},
      {"montgomery", {montgomery, false}},
      {"mvsmall", {mvsmall, true}},
      {"reflection", {reflection, true}},
      {"reflection_lemma", {reflection_lemma, true}},
      {"removemax", {removemax, true}},
      {"smoothsums", {smoothsums, true}},
      {"square", {square, true}},
  };
  return r;
}

std::vector<std::pair<std::string, std::string>> describe(const HarnessInstance& in) {
  return {{"N", std::to_string(in.N)},
          {"T", fmt::format("{}", in.T)},
          {"R", std::to_string(in.R)},
          {"Delta", fmt::format("{}", delta_of(in))},
          {"k", std::to_string(in.k)},
          {"t", fmt::format("{}", in.t)},
          {"v_exp", fmt::format("{}", in.v_exp)},
          {"sigma", fmt::format("{}", in.sigma)},
          {"coeffs", in.random_coeffs ? "random-unimodular" : "constant-one"}};
}

HarnessInstance trend_shape(const std::string& id, long N) {
  HarnessInstance in;
  in.N = N;
  in.T = 4.0 * static_cast<double>(N);
  in.random_coeffs = true;
  in.k = 2;
  if (id == "classicalmoments") in.R = static_cast<std::size_t>(N);
  if (id == "heathbrown" || id == "largeadditive") in.R = static_cast<std::size_t>(N / 4);
  return in;
}

}  // namespace

std::vector<std::string> harness_ids() {
  std::vector<std::string> out;
  for (const auto& [id, e] : registry()) out.push_back(id);
  return out;
}

HarnessInstance default_instance(const std::string& id) {
  HarnessInstance in;
  if (id == "removemax") {
    in.N = 64, in.t = 0, in.random_coeffs = false;
  } else if (id == "classicalmv") {
    in.N = 256, in.T = 4096, in.random_coeffs = false;
  } else if (id == "classicalmoments" || id == "heathbrown") {
    in.N = 256, in.T = 1024, in.R = 128;
  } else if (id == "e2energy") {
    in.N = 64, in.T = 512, in.v_exp = 0.6;
  } else if (id == "smoothsums" || id == "larger" || id == "mvsmall" || id == "largeadditive") {
    in.N = 64, in.T = 1024, in.R = 64, in.Delta = 256;
  } else if (id == "square") {
    in.N = 16, in.T = 512, in.R = 32, in.Delta = 128;
  } else if (id == "reflection_lemma" || id == "reflection") {
    in.N = 32, in.T = 2048, in.R = 128, in.Delta = 512;
  } else if (id == "largeadditive1") {
    in.N = 64, in.T = 1024, in.R = 16, in.k = 2;
  } else if (id == "mainvlarge1") {
    in.N = 32, in.T = 4096, in.v_exp = 0.75, in.Delta = 512;
  } else if (id == "jut") {
    in.N = 128, in.T = 3e4, in.t = 2e4;
  } else if (id == "jut1") {
    in.N = 64, in.T = 4096, in.t = 1000, in.sigma = 0.625;
  } else if (id == "montgomery") {
    in.N = 64, in.T = 1024, in.v_exp = 0.6;
  } else if (!registry().count(id)) {
    throw std::invalid_argument("unknown inequality id '" + id + "'");
  }
  return in;
}

IneqReport harness(const std::string& id, const HarnessInstance& inst, std::uint64_t seed) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown inequality id '" + id + "'");
  common_window(id, inst);
  IneqReport r;
  r.id = id;
  r.params = describe(inst);
  r.slack_budget = inst.slack;
  r.seed = seed;
  it->second.run(inst, seed, r);
  finish(r, it->second.asserted);
  return r;
}

std::vector<std::string> trend_ids() { return {"classicalmoments", "classicalmv", "heathbrown", "largeadditive"}; }

TrendReport trend(const std::string& id, std::uint64_t seed, double slack) {
  TrendReport tr{id, {256, 512, 1024}, {}, slack, true, true};
  for (long N : tr.Ns) {
    HarnessInstance in = trend_shape(id, N);
    in.slack = slack;
    tr.ratios.push_back(harness(id, in, seed).ratio);
  }
  for (std::size_t i = 0; i < tr.ratios.size(); ++i) {
    if (!(tr.ratios[i] <= slack)) tr.within_slack = false;
    if (i && !(tr.ratios[i] <= 2 * tr.ratios[i - 1])) tr.no_growth = false;
  }
  return tr;
}

bool AsymptoticSuite::ok() const {
  for (const auto& e : entries)
    if (!e.passed()) return false;
  for (const auto& t : trends)
    if (!t.ok()) return false;
  return true;
}

AsymptoticSuite asymptotic_suite(std::uint64_t seed, double slack, unsigned threads) {
  const auto ids = harness_ids();
  const auto tids = trend_ids();
  AsymptoticSuite out;
  out.entries.resize(ids.size());
  out.trends.resize(tids.size());
  detail::parallel_for(ids.size() + tids.size(), threads, [&](std::size_t i) {
    if (i < ids.size()) {
      HarnessInstance in = default_instance(ids[i]);
      in.slack = slack;
      out.entries[i] = harness(ids[i], in, derive_seed(seed, i));
    } else {
      const std::size_t j = i - ids.size();
      out.trends[j] = trend(tids[j], derive_seed(seed, 1000 + j), slack);
    }
  });
  return out;
}

}  // namespace zdx
