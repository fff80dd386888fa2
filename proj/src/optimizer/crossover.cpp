#include "zdx/optimizer/crossover.hpp"

#include <cmath>
#include <stdexcept>

namespace zdx {

namespace {

int diff_sign(const DensityBound& f, const DensityBound& g, const Rat& s) {
  return (closed_form(f, s) - closed_form(g, s)).sign();
}

// Dyadic rational at or just below x, with 2^-50 resolution.
Rat dyadic(double x) {
  return Rat(BigInt(static_cast<long long>(std::floor(std::ldexp(x, 50)))), BigInt(1) << 50);
}

Crossover bisect(const DensityBound& f, const DensityBound& g, Rat lo, Rat hi, int sign_lo) {
  const Rat tol(1, 1000000000000LL);
  while (hi - lo > tol) {
    const Rat mid = (lo + hi) / Rat(2);
    const int s = diff_sign(f, g, mid);
    if (s == 0) {
      Crossover c;
      c.exact = mid;
      c.approx = mid.to_double();
      c.bracket_lo = c.bracket_hi = mid;
      c.method = "bisection";
      return c;
    }
    if (s == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  Crossover c;
  c.approx = ((lo + hi) / Rat(2)).to_double();
  c.bracket_lo = lo;
  c.bracket_hi = hi;
  c.method = "bisection";
  return c;
}

}  // namespace

Crossover crossover(const DensityBound& f, const DensityBound& g, const Interval& iv) {
  if (iv.lo > iv.hi) throw std::invalid_argument("crossover: empty interval");
  const int slo = diff_sign(f, g, iv.lo), shi = diff_sign(f, g, iv.hi);
  for (const auto& [s, x] : {std::pair{slo, iv.lo}, std::pair{shi, iv.hi}})
    if (s == 0) {
      Crossover c;
      c.exact = x;
      c.approx = x.to_double();
      c.bracket_lo = c.bracket_hi = x;
      c.method = "endpoint";
      return c;
    }
  if (slo == shi)
    throw std::domain_error("crossover: " + f.id + " - " + g.id + " has the same sign at sigma = " + iv.lo.str() +
                            " and " + iv.hi.str());

  if (f.pieces.size() != 1 || g.pieces.size() != 1) return bisect(f, g, iv.lo, iv.hi, slo);

  const SigmaRatio &a = f.pieces.front(), &b = g.pieces.front();
  SigmaPoly p = a.num * b.den - b.num * a.den;
  const int deg = p.degree();
  p.c.resize(3, Rat(0));
  auto inside = [&](const Rat& r) { return iv.lo < r && r < iv.hi; };

  if (deg == 1) {
    const Rat r = -p.c[0] / p.c[1];
    if (inside(r) && diff_sign(f, g, r) == 0)
      return Crossover{r, std::nullopt, 0, r.to_double(), r, r, "linear"};
  } else if (deg == 2) {
    const QuadraticRoots q = solve_quadratic(p.c[2], p.c[1], p.c[0]);
    for (int i = 0; i < 2; ++i) {
      const QuadraticRoot& root = q.roots[i];
      if (root.exact) {
        if (inside(*root.exact) && diff_sign(f, g, *root.exact) == 0) {
          const Rat r = *root.exact;
          return Crossover{r, std::nullopt, 0, r.to_double(), r, r, "linear"};
        }
        continue;
      }
      // Certify the irrational root by an exact sign change of p on a
      // rational bracket of width 2^-40 around the numeric value.
      const Rat lo = dyadic(root.approx) - Rat(BigInt(1), BigInt(1) << 40);
      const Rat hi = dyadic(root.approx) + Rat(BigInt(1), BigInt(1) << 40);
      if (!(inside(lo) && inside(hi))) continue;
      if (p.at(lo).sign() * p.at(hi).sign() >= 0) continue;
      if (diff_sign(f, g, lo) * diff_sign(f, g, hi) >= 0) continue;
      return Crossover{std::nullopt, q, i, root.approx, lo, hi, "quadratic"};
    }
  }
  return bisect(f, g, iv.lo, iv.hi, slo);
}

}  // namespace zdx
