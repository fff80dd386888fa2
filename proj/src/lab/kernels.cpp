#include "zdx/lab/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"

namespace zdx {

double fejer(double x) { return std::max(1 - std::fabs(x), 0.0); }

double fejer_hat(double y) {
  if (y == 0) return 1;
  const double s = std::sin(std::numbers::pi * y) / (std::numbers::pi * y);
  return s * s;
}

double jut_b(double n, double N, double h) {
  // exp(-(x)^h) with x^h formed as exp(h log x) to avoid overflow
  auto damp = [h](double x) { return std::exp(-std::exp(h * std::log(x))); };
  return damp(n / (2 * N)) - damp(n / N);
}

double jut_c(double n, double N) { return std::exp(-n / (2 * N)) - std::exp(-n / N); }

double jut_h(double T) {
  const double l = std::log(T);
  return l * l;
}

double pair_sum(const PointSet& pts, const PairSumSpec& spec) {
  const std::size_t R = pts.size();
  const long lo = std::max(spec.lo, 1L);
  std::vector<double> logs, mods;
  for (long n = lo; n <= spec.hi; ++n) {
    logs.push_back(std::log(static_cast<double>(n)));
    mods.push_back(std::exp(-spec.alpha * logs.back()));
  }
  std::vector<double> row(R, 0.0);
  detail::parallel_for(R, 0, [&](std::size_t r) {
    double acc = 0;
    for (std::size_t s = r; s < R; ++s) {
      const double u = pts.points[r] - pts.points[s];
      const double gap = std::fabs(u);
      if (gap < spec.lo_gap || gap > spec.hi_gap) continue;
      CompensatedSum d;
      for (std::size_t j = 0; j < logs.size(); ++j) d.add(std::polar(mods[j], u * logs[j]));
      const double m = std::abs(d.value());
      const double val = pts.weight(r) * pts.weight(s) * std::pow(m, spec.power);
      acc += r == s ? val : 2 * val;
    }
    row[r] = acc;
  });
  double total = 0;
  for (double v : row) total += v;
  return total;
}

double weighted_S(long N, double Delta, const PointSet& pts) {
  return pair_sum(pts, {N, 2 * N, 0.0, 0.0, Delta, 2});
}

double weighted_S_half(long N, double Delta, const PointSet& pts) {
  return pair_sum(pts, {N, 2 * N, 0.5, 0.0, Delta, 2});
}

double weighted_I(double Delta, const PointSet& pts) {
  double total = 0;
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t s = 0; s < pts.size(); ++s)
      if (std::fabs(pts.points[r] - pts.points[s]) <= Delta) total += pts.weight(r) * pts.weight(s);
  return total;
}

double gamma_norm2(const PointSet& pts) {
  double total = 0;
  for (std::size_t r = 0; r < pts.size(); ++r) total += pts.weight(r) * pts.weight(r);
  return total;
}

}  // namespace zdx
