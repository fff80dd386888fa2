#include "zdx/optimizer/search.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "zdx/bounds/catalog.hpp"
#include "zdx/optimizer/reduction.hpp"

namespace zdx {

namespace {

// d never needs to leave this box; its two walls join the vertex
// enumeration so that a bound unbounded in d still has finitely many
// breakpoints.
const Rat kDBox(64);

struct Instance {
  std::string id;
  std::optional<int> k;
  PiecewiseMax terms;   // in nu and d
  ConstraintSet cons;   // in nu and d
  bool has_d = false;
};

struct Value {
  Rat h;
  Rat d;
};

// h(nu) = min over d of max(terms), subject to the constraints.
std::optional<Value> value_at(const Instance& in, const Rat& nu) {
  const Assignment at{{Var::nu, nu}};
  try {
    const Extremum e = minimize_max(in.terms.substitute(at), Var::d, -kDBox, kDBox, in.cons.substitute(at));
    return Value{e.value, e.arg};
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
}

// a*nu + b*d + c*z = e
struct Plane {
  Rat a, b, c, e;
};

Rat det3(const std::array<std::array<Rat, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// nu-coordinates of every vertex of the plane arrangement in (nu, d, z);
// the value function is affine between consecutive ones.
std::vector<Rat> breakpoints(const Instance& in) {
  std::vector<Plane> planes;
  for (const auto& t : in.terms.terms())
    planes.push_back({-t.coeff(Var::nu), -t.coeff(Var::d), Rat(1), t.constant()});
  for (const auto& c : in.cons.constraints()) {
    const AffExpr& x = c.expr;
    if (x.coeff(Var::nu).is_zero() && x.coeff(Var::d).is_zero()) continue;
    planes.push_back({x.coeff(Var::nu), x.coeff(Var::d), Rat(0), -x.constant()});
  }
  std::vector<Rat> out;
  if (!in.has_d) {
    // Planar case in (nu, z).
    for (std::size_t i = 0; i < planes.size(); ++i)
      for (std::size_t j = i + 1; j < planes.size(); ++j) {
        const Plane &p = planes[i], &q = planes[j];
        const Rat det = p.a * q.c - p.c * q.a;
        if (det.is_zero()) continue;
        out.push_back((p.e * q.c - p.c * q.e) / det);
      }
    return out;
  }
  planes.push_back({Rat(0), Rat(1), Rat(0), kDBox});
  planes.push_back({Rat(0), Rat(1), Rat(0), -kDBox});
  for (std::size_t i = 0; i < planes.size(); ++i)
    for (std::size_t j = i + 1; j < planes.size(); ++j)
      for (std::size_t l = j + 1; l < planes.size(); ++l) {
        const Plane* p[3] = {&planes[i], &planes[j], &planes[l]};
        std::array<std::array<Rat, 3>, 3> m;
        for (int r = 0; r < 3; ++r) m[r] = {p[r]->a, p[r]->b, p[r]->c};
        const Rat det = det3(m);
        if (det.is_zero()) continue;
        for (int r = 0; r < 3; ++r) m[r][0] = p[r]->e;
        out.push_back(det3(m) / det);
      }
  return out;
}

// Maximal nu-interval on which g = min over instances is one affine piece.
struct Elem {
  Rat a, b;
  bool covered = false;
  Linear line;
  std::size_t inst = 0;
};

std::vector<Instance> instances(const Rat& sigma, const SearchOptions& opts) {
  std::vector<Instance> out;
  for (const auto& id : opts.bounds) {
    const LargeValueBound& b = find_bound(id);
    std::vector<std::optional<int>> ks;
    if (b.parametric()) {
      for (int k = std::max(opts.k_lo, *b.k_min); k <= opts.k_hi; ++k) ks.push_back(k);
    } else {
      ks.push_back(std::nullopt);
    }
    for (const auto& k : ks) {
      Instance in{b.id, k, terms_at_sigma(b, sigma, k), constraints_at_sigma(b, sigma, k)};
      for (const auto& t : in.terms.terms()) in.has_d = in.has_d || t.depends_on(Var::d);
      for (const auto& c : in.cons.constraints()) in.has_d = in.has_d || c.expr.depends_on(Var::d);
      out.push_back(std::move(in));
    }
  }
  return out;
}

std::vector<Elem> build_elems(const std::vector<Instance>& insts, const Rat& lo, const Rat& hi) {
  std::vector<Rat> cuts{lo, hi};
  for (const auto& in : insts)
    for (Rat& x : breakpoints(in))
      if (lo < x && x < hi) cuts.push_back(std::move(x));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Elem> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat &p = cuts[i], &q = cuts[i + 1];
    const Rat mid = (p + q) / Rat(2);
    std::vector<std::pair<std::size_t, Linear>> live;
    for (std::size_t j = 0; j < insts.size(); ++j) {
      if (!value_at(insts[j], mid)) continue;
      const auto vp = value_at(insts[j], p), vq = value_at(insts[j], q);
      if (!vp || !vq) continue;
      const Rat slope = (vq->h - vp->h) / (q - p);
      live.emplace_back(j, Linear{slope, vp->h - slope * p});
    }
    if (live.empty()) {
      out.push_back({p, q, false, {}, 0});
      continue;
    }
    std::vector<Rat> sub{p, q};
    for (std::size_t u = 0; u < live.size(); ++u)
      for (std::size_t v = u + 1; v < live.size(); ++v) {
        const Rat ds = live[u].second.slope - live[v].second.slope;
        if (ds.is_zero()) continue;
        Rat x = (live[v].second.intercept - live[u].second.intercept) / ds;
        if (p < x && x < q) sub.push_back(std::move(x));
      }
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    for (std::size_t s = 0; s + 1 < sub.size(); ++s) {
      const Rat m = (sub[s] + sub[s + 1]) / Rat(2);
      std::size_t best = 0;
      for (std::size_t u = 1; u < live.size(); ++u)
        if (live[u].second.at(m) < live[best].second.at(m)) best = u;
      Elem e{sub[s], sub[s + 1], true, live[best].second, live[best].first};
      if (!out.empty() && out.back().covered && out.back().inst == e.inst && out.back().line.slope == e.line.slope &&
          out.back().line.intercept == e.line.intercept)
        out.back().b = e.b;
      else
        out.push_back(std::move(e));
    }
  }
  return out;
}

struct WindowMax {
  bool covered = true;
  Rat value;
  Rat arg;
};

WindowMax window_max(const std::vector<Elem>& elems, const Rat& u, const Rat& v) {
  WindowMax w;
  bool first = true;
  for (const auto& e : elems) {
    if (e.b <= u || e.a >= v) continue;
    if (!e.covered) {
      w.covered = false;
      w.arg = max(e.a, u);
      return w;
    }
    for (const Rat& x : {max(e.a, u), min(e.b, v)}) {
      const Rat val = e.line.at(x);
      if (first || val > w.value) {
        w.value = val;
        w.arg = x;
        first = false;
      }
    }
  }
  return w;
}

AffExpr line_in_y(const Linear& l, const Rat& scale) {
  return AffExpr::var(Var::y, l.slope * scale) + AffExpr(l.intercept);
}

}  // namespace

SearchResult search(const Rat& sigma, const SearchOptions& opts) {
  SearchResult res;
  if (opts.y.lo.sign() <= 0 || opts.y.lo > opts.y.hi)
    throw std::invalid_argument("search: y window [" + opts.y.lo.str() + ", " + opts.y.hi.str() + "] is invalid");
  reduce(sigma, opts.y.lo);  // validates sigma
  if (opts.bounds.empty()) {
    res.reason = "no bounds selected";
    return res;
  }
  const std::vector<Instance> insts = instances(sigma, opts);
  if (insts.empty()) {
    res.reason = "no bound instances: k range [" + std::to_string(opts.k_lo) + ", " + std::to_string(opts.k_hi) +
                 "] is empty";
    return res;
  }
  const Rat nu_lo = Rat(4, 3) * opts.y.lo, nu_hi = Rat(2) * opts.y.hi;
  const std::vector<Elem> elems = build_elems(insts, nu_lo, nu_hi);

  const AffExpr red = AffExpr(2) + AffExpr::var(Var::y, Rat(6) * (Rat(1) - Rat(2) * sigma));

  std::vector<Rat> ys{opts.y.lo, opts.y.hi};
  for (const auto& e : elems)
    for (const Rat& g : {e.a, e.b})
      for (Rat y : {Rat(3, 4) * g, g / Rat(2)})
        if (opts.y.lo < y && y < opts.y.hi) ys.push_back(std::move(y));
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  if (ys.size() == 1) ys.push_back(ys.front());

  bool found = false;
  std::string first_gap;
  for (std::size_t i = 0; i + 1 < ys.size(); ++i) {
    const Rat &y0 = ys[i], &y1 = ys[i + 1];
    const Rat ym = (y0 + y1) / Rat(2);
    const Rat u = Rat(4, 3) * ym, v = Rat(2) * ym;
    std::vector<AffExpr> terms{red};
    bool covered = true;
    for (const auto& e : elems) {
      if (e.b <= u || e.a >= v) continue;
      if (!e.covered) {
        covered = false;
        if (first_gap.empty())
          first_gap = "no selected bound applies for nu in (" + e.a.str() + ", " + e.b.str() + ")";
        break;
      }
      terms.push_back(e.a <= u ? line_in_y(e.line, Rat(4, 3)) : AffExpr(e.line.at(e.a)));
      terms.push_back(e.b >= v ? line_in_y(e.line, Rat(2)) : AffExpr(e.line.at(e.b)));
    }
    if (!covered) continue;
    const Extremum ex = minimize_max(PiecewiseMax(std::move(terms)), Var::y, y0, y1);
    if (!found || ex.value < res.value) {
      res.value = ex.value;
      res.y = ex.arg;
      found = true;
    }
  }
  if (!found) {
    res.reason = first_gap.empty() ? "no feasible y" : first_gap;
    return res;
  }

  res.feasible = true;
  res.reduction_term = reduce(sigma, res.y).extra_term;
  const Rat u = Rat(4, 3) * res.y, v = Rat(2) * res.y;
  res.worst_nu = window_max(elems, u, v).arg;
  for (const auto& e : elems) {
    if (e.b <= u || e.a >= v) continue;
    const Rat a = max(e.a, u), b = min(e.b, v);
    const Instance& in = insts[e.inst];
    if (!res.pieces.empty() && res.pieces.back().bound == in.id && res.pieces.back().k == in.k) {
      res.pieces.back().nu.hi = b;
    } else {
      res.pieces.push_back({{a, b}, in.id, in.k, {}});
    }
  }
  for (auto& p : res.pieces) {
    const Instance* in = nullptr;
    for (const auto& c : insts)
      if (c.id == p.bound && c.k == p.k) in = &c;
    if (!in->has_d) continue;
    for (const Rat& x : {p.nu.lo, (p.nu.lo + p.nu.hi) / Rat(2), p.nu.hi})
      if (auto val = value_at(*in, x)) p.d_table.emplace_back(x, val->d);
  }
  return res;
}

}  // namespace zdx
