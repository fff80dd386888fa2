#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "zdx/bounds/catalog.hpp"
#include "zdx/optimizer/certificate_json.hpp"
#include "zdx/optimizer/crossover.hpp"
#include "zdx/optimizer/reduction.hpp"
#include "zdx/optimizer/replay.hpp"
#include "zdx/optimizer/search.hpp"
#include "zdx/optimizer/tabulate.hpp"

using zdx::Rat;
using zdx::Strategy;

namespace {

Rat R(const char* s) { return Rat::parse(s); }

std::vector<Rat> rationals_in(const Rat& lo, const Rat& hi, int maxden, bool hi_open = false) {
  std::vector<Rat> out;
  for (int q = 1; q <= maxden; ++q)
    for (int p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const Rat s(p, q);
      if (s >= lo && (hi_open ? s < hi : s <= hi)) out.push_back(s);
    }
  return out;
}

Rat zd1_value(const Rat& s) {
  const Rat den = Rat(138) * s - Rat(89);
  return zdx::max(Rat(36) * (Rat(1) - s), Rat(114) * s - Rat(79)) / den;
}

}  // namespace

TEST(Reduce, Examples) {
  const auto r = zdx::reduce(R("4/5"), R("15/32"));
  EXPECT_EQ(r.extra_term, R("5/16"));
  EXPECT_EQ(r.extra_term, (Rat(9) - Rat(10) * R("4/5")) / (Rat(4) * R("4/5")));
  EXPECT_EQ(r.nu_range.lo, R("5/8"));
  EXPECT_EQ(r.nu_range.hi, R("15/16"));
  EXPECT_EQ(zdx::reduce(R("3/4"), R("1/2")).extra_term, R("1/2"));
  EXPECT_EQ(zdx::reduce(R("3/4"), R("1/2")).extra_term, Rat(5) - Rat(6) * R("3/4"));
  EXPECT_THROW(zdx::reduce(R("1/2"), R("1/2")), std::invalid_argument);
  EXPECT_THROW(zdx::reduce(R("3/4"), R("0")), std::invalid_argument);
}

TEST(ReplayZd2, Thresholds) {
  const std::pair<const char*, const char*> cases[] = {{"23/29", "9/23"}, {"4/5", "3/8"}, {"9/10", "1/6"}};
  for (const auto& [s, t] : cases) {
    const auto cert = zdx::replay(Strategy::zd2, R(s));
    EXPECT_EQ(cert.target, R(t)) << s;
    EXPECT_TRUE(cert.pass) << zdx::to_json(cert);
  }
}

TEST(ReplayZd2, SplitPoint) {
  // Below 5/6 both candidates are live; at or above it only the second.
  EXPECT_EQ(zdx::zd2_rho(R("9/10")), Rat(3) / (Rat(16) * R("9/10")) + Rat(1) / (Rat(8) * R("1/10")));
  const Rat s = R("4/5");
  EXPECT_EQ(zdx::zd2_rho(s), zdx::min(Rat(3) * (Rat(1) - s) / (Rat(2) * s * (Rat(10) - Rat(12) * s)),
                                      Rat(3) / (Rat(16) * s) + Rat(1) / (Rat(8) * (Rat(1) - s))));
}

TEST(ReplayZd2, PassesOnSmallDenominators) {
  const auto sigmas = rationals_in(R("23/29"), Rat(1), 64, true);
  ASSERT_GT(sigmas.size(), 100u);
  for (const Rat& s : sigmas) {
    const auto cert = zdx::replay(Strategy::zd2, s);
    EXPECT_TRUE(cert.pass) << s;
    for (const auto& p : cert.pieces) EXPECT_LE(p.achieved, cert.target) << s;
  }
}

TEST(ReplayZd2, RangeErrors) {
  EXPECT_THROW(zdx::replay(Strategy::zd2, R("1/2")), std::out_of_range);
  EXPECT_THROW(zdx::replay(Strategy::zd2, R("22/29")), std::out_of_range);
  EXPECT_THROW(zdx::replay(Strategy::zd2, R("1")), std::out_of_range);
}

TEST(ReplayZd2, TargetStrictlyDecreasing) {
  const auto sigmas = rationals_in(R("1/100"), R("99/100"), 40);
  for (std::size_t i = 0; i + 1 < sigmas.size(); ++i) {
    const Rat a = sigmas[i], b = sigmas[i + 1];
    if (!(a < b)) continue;
    EXPECT_GT(Rat(3) * (Rat(1) - a) / (Rat(2) * a), Rat(3) * (Rat(1) - b) / (Rat(2) * b));
  }
}

TEST(ReplayZd1, NamedPoints) {
  for (const char* s : {"127/168", "19/25", "23/30", "107/138"}) {
    const auto cert = zdx::replay(Strategy::zd1, R(s));
    EXPECT_TRUE(cert.pass) << zdx::to_json(cert);
    EXPECT_EQ(cert.target, zd1_value(R(s))) << s;
  }
  EXPECT_EQ(zdx::replay(Strategy::zd1, R("19/25")).target, R("216/397"));
  // The two terms agree exactly at 23/30: 36(1 - s) = 114s - 79 iff 150s = 115.
  const Rat s = R("23/30");
  EXPECT_EQ(Rat(36) * (Rat(1) - s), Rat(114) * s - Rat(79));
  EXPECT_EQ(Rat(150) * s, Rat(115));
}

TEST(ReplayZd1, PassesOnWholeRange) {
  const auto sigmas = rationals_in(R("127/168"), R("107/138"), 168);
  ASSERT_GT(sigmas.size(), 50u);
  for (const Rat& s : sigmas) EXPECT_TRUE(zdx::replay(Strategy::zd1, s).pass) << s;
  EXPECT_THROW(zdx::replay(Strategy::zd1, R("3/4")), std::out_of_range);
  EXPECT_THROW(zdx::replay(Strategy::zd1, R("4/5")), std::out_of_range);
}

TEST(ReplayZd1, CertificateShape) {
  const auto cert = zdx::replay(Strategy::zd1, R("19/25"));
  ASSERT_EQ(cert.pieces.size(), 2u);
  EXPECT_EQ(cert.pieces[0].bound, "main1");
  EXPECT_EQ(cert.pieces[0].k, 7);
  EXPECT_EQ(cert.pieces[1].bound, "huxley");
  EXPECT_EQ(cert.pieces[0].nu.hi, Rat(2) / (Rat(13) - Rat(14) * R("19/25")));
  EXPECT_FALSE(cert.assumptions.empty());
  const std::string j = zdx::to_json(cert);
  EXPECT_NE(j.find("\"target\": \"216/397\""), std::string::npos);
  EXPECT_NE(j.find("\"verdict\": \"pass\""), std::string::npos);
}

TEST(Crossover, LinearCaseWithIvic) {
  const auto c = zdx::crossover(zdx::zerodensity1_term(0), zdx::ivic(), {R("3/4"), R("10/13")});
  ASSERT_TRUE(c.exact.has_value());
  EXPECT_EQ(*c.exact, R("41/54"));
  EXPECT_EQ(zdx::closed_form(zdx::zerodensity1_term(0), *c.exact), zdx::closed_form(zdx::ivic(), *c.exact));
}

TEST(Crossover, QuadraticCaseWithIvic) {
  const auto c = zdx::crossover(zdx::zerodensity1_term(1), zdx::ivic(), {R("3/4"), R("10/13")});
  EXPECT_FALSE(c.exact.has_value());
  ASSERT_TRUE(c.quadratic.has_value());
  EXPECT_EQ(c.quadratic->a / c.quadratic->c, R("1212/583"));
  EXPECT_EQ(c.quadratic->b / c.quadratic->c, R("-1690/583"));
  EXPECT_NEAR(c.approx, (845 + std::sqrt(7429.0)) / 1212, 1e-12);
  // 0.76830994 to eight places; a six-place rounding is 0.768310.
  EXPECT_NEAR(c.approx, 0.7683099397, 1e-10);
  // Numeric agreement of the two exponents at the reported root.
  auto f = [](double s) { return (114 * s - 79) / (138 * s - 89) - 3 * (1 - s) / (7 * s - 4); };
  EXPECT_LE(std::abs(f(c.approx)), 1e-9);
  EXPECT_LT(c.bracket_lo, c.bracket_hi);
}

TEST(Crossover, IvicAgainstZd2Form) {
  const auto c = zdx::crossover(zdx::ivic(), zdx::zerodensity2(), {R("3/4"), R("9/10")});
  ASSERT_TRUE(c.exact.has_value());
  EXPECT_EQ(*c.exact, R("4/5"));
}

TEST(Crossover, NoSignChangeAndBisection) {
  EXPECT_THROW(zdx::crossover(zdx::ivic(), zdx::zerodensity2(), {R("3/4"), R("79/100")}), std::domain_error);
  // Two-piece zerodensity1 against ivic goes through bisection; on
  // [3/4, 23/30] the first piece is active at the crossing 41/54.
  const auto c = zdx::crossover(zdx::zerodensity1(), zdx::ivic(), {R("3/4"), R("23/30")});
  EXPECT_EQ(c.method, "bisection");
  EXPECT_LE(c.bracket_hi - c.bracket_lo, Rat(1, 1000000000000LL));
  EXPECT_LE(c.bracket_lo, R("41/54"));
  EXPECT_GE(c.bracket_hi, R("41/54"));
}

TEST(Search, HuxleyAloneAtNineTenths) {
  zdx::SearchOptions o;
  o.bounds = {"huxley"};
  o.y = zdx::YWindow::fixed(Rat(3) / (Rat(8) * R("9/10")));
  const auto r = zdx::search(R("9/10"), o);
  ASSERT_TRUE(r.feasible);
  // 1 + 4nu - 6(9/10)nu at nu = 5/9.
  EXPECT_EQ(r.value, R("2/9"));
  EXPECT_EQ(r.worst_nu, R("5/9"));
  o.bounds = {"huxley", "main4"};
  EXPECT_LE(zdx::search(R("9/10"), o).value, R("1/6"));
}

TEST(Search, CompletionNeverBeatsZd2) {
  zdx::SearchOptions o;
  o.bounds = {"completion"};
  const auto r = zdx::search(R("4/5"), o);
  ASSERT_TRUE(r.feasible);
  EXPECT_GE(r.value, R("3/8"));
}

TEST(Search, EmptyKRangeIsInfeasible) {
  zdx::SearchOptions o;
  o.bounds = {"main1"};
  o.k_lo = 5;
  o.k_hi = 4;
  const auto r = zdx::search(R("19/25"), o);
  EXPECT_FALSE(r.feasible);
  EXPECT_NE(r.reason.find("empty"), std::string::npos);
  EXPECT_NE(zdx::to_json(r).find("\"feasible\": false"), std::string::npos);
}

TEST(Search, NeverWorseThanReplay) {
  zdx::SearchOptions o2;
  o2.bounds = {"huxley", "main4"};
  for (const char* s : {"23/29", "4/5", "33/40", "9/10"}) {
    const auto r = zdx::search(R(s), o2);
    ASSERT_TRUE(r.feasible) << s;
    EXPECT_LE(r.value, zdx::replay(Strategy::zd2, R(s)).target) << s;
  }
  zdx::SearchOptions o1;
  o1.bounds = {"huxley", "main1"};
  o1.k_lo = o1.k_hi = 7;
  o1.y = {R("1/2"), R("2")};
  for (const char* s : {"127/168", "19/25", "23/30", "107/138"}) {
    const auto r = zdx::search(R(s), o1);
    ASSERT_TRUE(r.feasible) << s;
    EXPECT_LE(r.value, zdx::replay(Strategy::zd1, R(s)).target) << s;
  }
}

TEST(Search, MatchesSampledOracleAtFixedY) {
  // Independent oracle: at each sampled nu take the best bound with d chosen
  // by minimize_max directly, then the max over samples. The exact search
  // value can only exceed it by the sampling error.
  const Rat sigma = R("4/5"), y = R("15/32");
  zdx::SearchOptions o;
  o.bounds = {"huxley", "main4", "main12"};
  o.y = zdx::YWindow::fixed(y);
  const auto r = zdx::search(sigma, o);
  ASSERT_TRUE(r.feasible);
  double sampled = zdx::reduce(sigma, y).extra_term.to_double();
  const Rat lo = Rat(4, 3) * y, hi = Rat(2) * y;
  const int steps = 1024;
  for (int i = 0; i <= steps; ++i) {
    const Rat nu = lo + (hi - lo) * Rat(i, steps);
    std::optional<Rat> best;
    for (const auto& id : o.bounds) {
      const auto& b = zdx::find_bound(id);
      const zdx::Assignment at{{zdx::Var::nu, nu}};
      try {
        const auto e = zdx::minimize_max(zdx::terms_at_sigma(b, sigma, std::nullopt).substitute(at), zdx::Var::d,
                                         Rat(-64), Rat(64),
                                         zdx::constraints_at_sigma(b, sigma, std::nullopt).substitute(at));
        if (!best || e.value < *best) best = e.value;
      } catch (const zdx::InfeasibleError&) {
      }
    }
    ASSERT_TRUE(best.has_value()) << nu;
    sampled = std::max(sampled, best->to_double());
  }
  EXPECT_GE(r.value.to_double() + 1e-12, sampled);
  EXPECT_LE(r.value.to_double(), sampled + 40.0 / steps);
}

TEST(Tabulate, RowsInGridOrderAndDeterministic) {
  const auto grid = zdx::rational_grid(R("127/168"), R("107/138"), R("1/336"));
  zdx::TabulateOptions one;
  one.threads = 1;
  one.compare = true;
  zdx::TabulateOptions many = one;
  many.threads = 4;
  const auto a = zdx::tabulate(grid, one), b = zdx::tabulate(grid, many);
  ASSERT_EQ(a.size(), grid.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].sigma, grid[i]);
    EXPECT_EQ(a[i].best, b[i].best);
    ASSERT_EQ(a[i].cells.size(), b[i].cells.size());
    for (std::size_t j = 0; j < a[i].cells.size(); ++j) EXPECT_EQ(a[i].cells[j].value, b[i].cells[j].value);
    EXPECT_EQ(zdx::to_json(*a[i].replays[0].cert), zdx::to_json(*b[i].replays[0].cert));
  }
}

TEST(Tabulate, GapIdentities) {
  const auto rows = zdx::tabulate({R("23/30"), R("409/534"), R("3734/4694")}, {});
  // Row 23/30: the two zerodensity1 pieces coincide.
  EXPECT_EQ(zdx::density_exponent(zdx::zerodensity1_term(0), rows[0].sigma),
            zdx::density_exponent(zdx::zerodensity1_term(1), rows[0].sigma));
  // Row 409/534: jutila(5) meets the first zerodensity1 piece, 1/1335 below 23/30.
  EXPECT_EQ(zdx::closed_form(zdx::jutila(5), rows[1].sigma), zdx::closed_form(zdx::zerodensity1_term(0), rows[1].sigma));
  EXPECT_EQ(R("23/30") - rows[1].sigma, R("1/1335"));
  // Row 3734/4694 sits 162/68063 above 23/29.
  EXPECT_EQ(rows[2].sigma - R("23/29"), R("162/68063"));
  EXPECT_EQ(rows[2].cells[0].id, "zerodensity1");
  EXPECT_FALSE(rows[2].cells[0].value.has_value());
  ASSERT_TRUE(rows[2].cells[1].value.has_value());
  EXPECT_EQ(rows[2].best, "zerodensity2");
}

TEST(Tabulate, GridValidation) {
  EXPECT_THROW(zdx::rational_grid(R("1/2"), R("1"), R("0")), std::invalid_argument);
  EXPECT_THROW(zdx::tabulate({R("1/2")}), std::invalid_argument);
  EXPECT_EQ(zdx::rational_grid(R("3/4"), R("4/5"), R("1/40")).size(), 3u);
}
