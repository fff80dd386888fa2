#include "zdx/optimizer/replay.hpp"

#include <algorithm>
#include <stdexcept>

#include "zdx/bounds/catalog.hpp"
#include "zdx/optimizer/reduction.hpp"

namespace zdx {

namespace {

const AffExpr kNu = AffExpr::var(Var::nu);

void add_assumptions(StrategyCertificate& cert, const LargeValueBound& b) {
  for (const auto& a : b.assumed) {
    const std::string entry = b.id + ": " + a;
    if (std::find(cert.assumptions.begin(), cert.assumptions.end(), entry) == cert.assumptions.end())
      cert.assumptions.push_back(entry);
  }
}

// Checks `bound` on [lo, hi] with d(nu) = min(0, d_line(nu)). Everything is
// affine in nu once d is fixed to one branch, so the segment ends and the
// branch switch are the only points that need evaluating.
CertPiece verify_piece(const LargeValueBound& bound, std::optional<int> k, const Rat& sigma, const Rat& lo,
                       const Rat& hi, const std::optional<AffExpr>& d_line, const Rat& target) {
  CertPiece piece{{lo, hi}, bound.id, k, d_line ? "min(0, " + d_line->str() + ")" : "none", lo, Rat(0), true, ""};
  const PiecewiseMax terms = terms_at_sigma(bound, sigma, k);
  const ConstraintSet cons = constraints_at_sigma(bound, sigma, k);

  std::vector<Rat> cuts{lo, hi};
  if (d_line) {
    const Linear l = as_linear(*d_line, Var::nu);
    if (!l.slope.is_zero()) {
      const Rat r = -l.intercept / l.slope;
      if (lo < r && r < hi) cuts.push_back(r);
    }
  }
  std::sort(cuts.begin(), cuts.end());

  bool first = true;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rat a = cuts[i], b = cuts[i + 1];
    AffExpr d_expr(0);
    if (d_line && d_line->evaluate({{Var::nu, (a + b) / Rat(2)}}).sign() < 0) d_expr = *d_line;
    const PiecewiseMax t = terms.substitute(Var::d, d_expr);
    const ConstraintSet c = cons.substitute(Var::d, d_expr);
    for (const Rat& x : {a, b}) {
      const Assignment at{{Var::nu, x}};
      const Rat v = t.evaluate(at);
      if (first || v > piece.achieved) {
        piece.achieved = v;
        piece.worst_nu = x;
        first = false;
      }
      if (!piece.ok) continue;
      for (const auto& st : c.report(at)) {
        if (st.ok) continue;
        piece.ok = false;
        piece.violation = "constraint '" + st.label + "' fails at nu = " + x.str() + " (margin " + st.margin.str() + ")";
        break;
      }
    }
  }
  if (piece.ok && piece.achieved > target) {
    piece.ok = false;
    piece.violation = "exponent " + piece.achieved.str() + " at nu = " + piece.worst_nu.str() + " exceeds target " +
                      target.str();
  }
  return piece;
}

SideCheck le_check(std::string label, Rat lhs, Rat rhs) {
  const bool ok = lhs <= rhs;
  return {std::move(label), std::move(lhs), std::move(rhs), ok};
}

void finish(StrategyCertificate& cert) {
  cert.pass = std::all_of(cert.pieces.begin(), cert.pieces.end(), [](const auto& p) { return p.ok; }) &&
              std::all_of(cert.checks.begin(), cert.checks.end(), [](const auto& c) { return c.ok; });
}

StrategyCertificate replay_zd2(const Rat& sigma) {
  StrategyCertificate cert;
  cert.strategy = Strategy::zd2;
  cert.sigma = sigma;
  cert.target = Rat(3) * (Rat(1) - sigma) / (Rat(2) * sigma);
  cert.y = Rat(3) / (Rat(8) * sigma);
  const ReductionInstance red = reduce(sigma, cert.y);
  cert.reduction_term = red.extra_term;
  const Rat rho = zd2_rho(sigma);
  cert.split = rho;
  const Rat split = std::clamp(rho, red.nu_range.lo, red.nu_range.hi);

  const auto& m4 = find_bound("main4");
  const auto& hux = find_bound("huxley");
  // N^{o(1)} delta = min{1, V^3/(TN)}.
  const AffExpr d_line = AffExpr::var(Var::nu, Rat(3) * sigma - Rat(1)) - AffExpr(1);
  if (red.nu_range.lo < split) {
    cert.pieces.push_back(verify_piece(m4, std::nullopt, sigma, red.nu_range.lo, split, d_line, cert.target));
    add_assumptions(cert, m4);
  }
  if (split < red.nu_range.hi)
    cert.pieces.push_back(verify_piece(hux, std::nullopt, sigma, split, red.nu_range.hi, std::nullopt, cert.target));
  cert.checks.push_back(le_check("reduction term <= target", cert.reduction_term, cert.target));
  finish(cert);
  return cert;
}

StrategyCertificate replay_zd1(const Rat& sigma) {
  StrategyCertificate cert;
  cert.strategy = Strategy::zd1;
  cert.sigma = sigma;
  const Rat den = Rat(138) * sigma - Rat(89);
  cert.target = max(Rat(36) * (Rat(1) - sigma), Rat(114) * sigma - Rat(79)) / den;
  cert.y = Rat(9) / den;
  const Rat z = Rat(2) / (Rat(13) - Rat(14) * sigma);
  cert.split = z;
  const ReductionInstance red = reduce(sigma, cert.y);
  cert.reduction_term = red.extra_term;

  cert.checks.push_back(le_check("Y >= T^(1/2)", Rat(1, 2), cert.y));
  cert.checks.push_back(le_check("Y^(4/3) <= Z", red.nu_range.lo, z));
  cert.checks.push_back(le_check("Z <= Y^2", z, red.nu_range.hi));
  cert.checks.push_back(le_check("28 sigma - 20 >= 7/6", Rat(7, 6), Rat(28) * sigma - Rat(20)));
  cert.checks.push_back(le_check("reduction term <= target", cert.reduction_term, cert.target));
  cert.checks.push_back(le_check("5 - 6 sigma <= target", Rat(5) - Rat(6) * sigma, cert.target));

  const auto& m1 = find_bound("main1");
  const auto& hux = find_bound("huxley");
  // N^{o(1)} delta = min{N^{7/6}/T, 1}.
  const AffExpr d_line = AffExpr::var(Var::nu, Rat(7, 6)) - AffExpr(1);
  const Rat split = std::clamp(z, red.nu_range.lo, red.nu_range.hi);
  if (red.nu_range.lo < split) {
    cert.pieces.push_back(verify_piece(m1, 7, sigma, red.nu_range.lo, split, d_line, cert.target));
    add_assumptions(cert, m1);
  }
  if (split < red.nu_range.hi)
    cert.pieces.push_back(verify_piece(hux, std::nullopt, sigma, split, red.nu_range.hi, std::nullopt, cert.target));
  finish(cert);
  return cert;
}

}  // namespace

std::string strategy_name(Strategy s) { return s == Strategy::zd1 ? "zd1" : "zd2"; }

Strategy strategy_from_name(const std::string& name) {
  if (name == "zd1") return Strategy::zd1;
  if (name == "zd2") return Strategy::zd2;
  throw std::invalid_argument("unknown strategy '" + name + "' (expected zd1 or zd2)");
}

Interval strategy_range(Strategy s) {
  if (s == Strategy::zd2) return {Rat(23, 29), Rat(1)};
  return {Rat(127, 168), Rat(107, 138)};
}

bool in_strategy_range(Strategy s, const Rat& sigma) {
  const Interval r = strategy_range(s);
  if (s == Strategy::zd2) return r.lo <= sigma && sigma < r.hi;
  return r.contains(sigma);
}

Rat zd2_rho(const Rat& sigma) {
  const Rat one_minus = Rat(1) - sigma;
  const Rat second = Rat(3) / (Rat(16) * sigma) + Rat(1) / (Rat(8) * one_minus);
  const Rat f = Rat(10) - Rat(12) * sigma;
  if (f.sign() <= 0) return second;
  return min(Rat(3) * one_minus / (Rat(2) * sigma * f), second);
}

StrategyCertificate replay(Strategy s, const Rat& sigma) {
  if (!in_strategy_range(s, sigma)) {
    const Interval r = strategy_range(s);
    throw std::out_of_range("sigma = " + sigma.str() + " is outside the " + strategy_name(s) + " range [" +
                            r.lo.str() + ", " + r.hi.str() + (s == Strategy::zd2 ? ")" : "]"));
  }
  return s == Strategy::zd2 ? replay_zd2(sigma) : replay_zd1(sigma);
}

}  // namespace zdx
