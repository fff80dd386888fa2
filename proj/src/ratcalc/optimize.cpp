#include "zdx/ratcalc/optimize.hpp"

#include <algorithm>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace zdx {

Interval feasible_interval(Var var, const Rat& lo, const Rat& hi, const ConstraintSet& constraints) {
  if (lo > hi)
    throw InfeasibleError("empty search interval [" + lo.str() + ", " + hi.str() + "]", "interval");
  Interval iv{lo, hi};
  for (const auto& c : constraints.constraints()) {
    const Linear f = as_linear(c.expr, var);
    // Normalise to slope*x + intercept >= slack.
    Rat slope = c.rel == Relation::ge_zero ? f.slope : -f.slope;
    Rat intercept = c.rel == Relation::ge_zero ? f.intercept : -f.intercept;
    intercept -= c.slack;
    if (slope.is_zero()) {
      if (intercept.sign() < 0)
        throw InfeasibleError("constraint '" + c.label + "' is violated everywhere", c.label);
      continue;
    }
    const Rat root = -intercept / slope;
    if (slope.sign() > 0)
      iv.lo = max(iv.lo, root);
    else
      iv.hi = min(iv.hi, root);
    if (iv.lo > iv.hi)
      throw InfeasibleError("constraint '" + c.label + "' leaves no feasible " +
                                std::string(var_name(var)) + " in [" + lo.str() + ", " + hi.str() + "]",
                            c.label);
  }
  return iv;
}

Extremum minimize_max(const PiecewiseMax& terms, Var var, const Rat& lo, const Rat& hi,
                      const ConstraintSet& constraints) {
  const Interval iv = feasible_interval(var, lo, hi, constraints);

  std::vector<Linear> lines;
  lines.reserve(terms.terms().size());
  for (const auto& t : terms.terms()) lines.push_back(as_linear(t, var));

  std::vector<Rat> candidates{iv.lo, iv.hi};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Rat ds = lines[i].slope - lines[j].slope;
      if (ds.is_zero()) continue;
      Rat x = (lines[j].intercept - lines[i].intercept) / ds;
      if (iv.contains(x)) candidates.push_back(std::move(x));
    }
  }
  std::sort(candidates.begin(), candidates.end());

  auto value_at = [&](const Rat& x) {
    Rat best = lines[0].at(x);
    for (std::size_t i = 1; i < lines.size(); ++i) best = max(best, lines[i].at(x));
    return best;
  };

  Extremum out{candidates.front(), value_at(candidates.front())};
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Rat v = value_at(candidates[i]);
    if (v < out.value) out = Extremum{candidates[i], std::move(v)};
  }
  return out;
}

Extremum max_over_interval(const PiecewiseMax& f, Var var, const Rat& lo, const Rat& hi) {
  if (lo > hi)
    throw std::invalid_argument("max_over_interval: lo " + lo.str() + " exceeds hi " + hi.str());
  Rat at_lo, at_hi;
  bool first = true;
  for (const auto& t : f.terms()) {
    const Linear l = as_linear(t, var);
    Rat a = l.at(lo), b = l.at(hi);
    if (first) {
      at_lo = std::move(a);
      at_hi = std::move(b);
      first = false;
    } else {
      at_lo = max(at_lo, a);
      at_hi = max(at_hi, b);
    }
  }
  if (at_hi > at_lo) return Extremum{hi, at_hi};
  return Extremum{lo, at_lo};
}

namespace {

using Float = boost::multiprecision::cpp_bin_float_50;

Float to_float(const Rat& r) { return Float(r.num()) / Float(r.den()); }

}  // namespace

QuadraticRoots solve_quadratic(const Rat& a, const Rat& b, const Rat& c) {
  if (a.is_zero()) throw std::domain_error("solve_quadratic: leading coefficient is zero");
  const Rat disc = b * b - Rat(4) * a * c;
  if (disc.sign() < 0)
    throw std::domain_error("solve_quadratic: negative discriminant " + disc.str());

  QuadraticRoots out{a, b, c, {}};
  if (auto s = exact_sqrt(disc)) {
    Rat r1 = (-b - *s) / (Rat(2) * a);
    Rat r2 = (-b + *s) / (Rat(2) * a);
    if (r2 < r1) std::swap(r1, r2);
    out.roots[0] = QuadraticRoot{r1, r1.to_double()};
    out.roots[1] = QuadraticRoot{r2, r2.to_double()};
    return out;
  }

  // 50 significant digits make the final rounding to double the only error.
  const Float fa = to_float(a), fb = to_float(b), fd = to_float(disc);
  const Float sq = boost::multiprecision::sqrt(fd);
  Float r1 = (-fb - sq) / (2 * fa);
  Float r2 = (-fb + sq) / (2 * fa);
  if (r2 < r1) std::swap(r1, r2);
  out.roots[0] = QuadraticRoot{std::nullopt, r1.convert_to<double>()};
  out.roots[1] = QuadraticRoot{std::nullopt, r2.convert_to<double>()};
  return out;
}

}  // namespace zdx
