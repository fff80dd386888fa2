#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "zdx/ratcalc/affine.hpp"
#include "zdx/ratcalc/optimize.hpp"
#include "zdx/ratcalc/rat.hpp"

using zdx::AffExpr;
using zdx::ConstraintSet;
using zdx::PiecewiseMax;
using zdx::Rat;
using zdx::Var;

namespace {

Rat R(const char* s) { return Rat::parse(s); }

AffExpr lin(Var v, Rat slope, Rat intercept) { return AffExpr::var(v, slope) + AffExpr(intercept); }

Rat random_rat(std::mt19937_64& gen, int range = 50, int maxden = 40) {
  std::uniform_int_distribution<int> num(-range * maxden, range * maxden);
  std::uniform_int_distribution<int> den(1, maxden);
  return Rat(num(gen), den(gen));
}

}  // namespace

TEST(Rat, NormalisedForm) {
  const Rat r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rat(0, 7).str(), "0");
  EXPECT_EQ(R("  -10/4 "), Rat(-5, 2));
  EXPECT_EQ(R("23/29"), Rat(23, 29));
}

TEST(Rat, ParseRejectsMalformed) {
  EXPECT_THROW(R("0.5"), std::invalid_argument);
  EXPECT_THROW(R("1/"), std::invalid_argument);
  EXPECT_THROW(R("a/2"), std::invalid_argument);
  EXPECT_THROW(R("3/0"), std::invalid_argument);
  EXPECT_THROW(R(""), std::invalid_argument);
}

TEST(Rat, DivisionByZeroThrows) {
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
  EXPECT_THROW(Rat(1, 0), std::domain_error);
}

TEST(Rat, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 gen(42);
  for (int i = 0; i < 500; ++i) {
    const Rat a = random_rat(gen), b = random_rat(gen), c = random_rat(gen);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, Rat(0));
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
    EXPECT_GT(a.den(), 0);
    EXPECT_EQ(boost::multiprecision::gcd(boost::multiprecision::abs(a.num()), a.den()), 1);
  }
}

TEST(Rat, FloorAndPow) {
  EXPECT_EQ(zdx::floor(Rat(-5, 2)), -3);
  EXPECT_EQ(zdx::floor(Rat(5, 2)), 2);
  EXPECT_EQ(zdx::floor(Rat(4)), 4);
  EXPECT_EQ(zdx::pow(Rat(2, 3), 3), Rat(8, 27));
  EXPECT_EQ(zdx::pow(Rat(2, 3), -2), Rat(9, 4));
  EXPECT_EQ(zdx::exact_sqrt(Rat(9, 49)), Rat(3, 7));
  EXPECT_FALSE(zdx::exact_sqrt(Rat(7429)).has_value());
}

TEST(AffExpr, CanonicalFormDropsZeroCoefficients) {
  const AffExpr a = AffExpr::var(Var::nu, 2) + AffExpr(1);
  const AffExpr b = AffExpr::var(Var::nu, 2) + AffExpr::var(Var::d, 3) - AffExpr::var(Var::d, 3) + AffExpr(1);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(b.depends_on(Var::d));
  EXPECT_EQ(a.str(), "1 + 2*nu");
}

TEST(AffExpr, SubstituteUpsilonAsSigmaNu) {
  // 1/3 - d/3 + 25/3 nu - 32/3 upsilon, with upsilon = 4/5 nu.
  const AffExpr e = AffExpr(Rat(1, 3)) - AffExpr::var(Var::d, Rat(1, 3)) + AffExpr::var(Var::nu, Rat(25, 3)) -
                    AffExpr::var(Var::upsilon, Rat(32, 3));
  const AffExpr s = e.substitute(Var::upsilon, AffExpr::var(Var::nu, Rat(4, 5)));
  EXPECT_EQ(s.coeff(Var::nu), Rat(25, 3) - Rat(32, 3) * Rat(4, 5));
  EXPECT_EQ(s.evaluate({{Var::nu, Rat(1)}, {Var::d, Rat(0)}}), Rat(1, 3) + Rat(25, 3) - Rat(128, 15));
  EXPECT_THROW(e.evaluate({{Var::nu, Rat(1)}}), std::invalid_argument);
}

TEST(MinimizeMax, SymmetricCrossing) {
  const PiecewiseMax f({lin(Var::d, -1, 1), lin(Var::d, 1, 2)});
  const auto r = zdx::minimize_max(f, Var::d, Rat(-1), Rat(0));
  EXPECT_EQ(r.arg, Rat(-1, 2));
  EXPECT_EQ(r.value, Rat(3, 2));
}

TEST(MinimizeMax, SingleTermGoesToBestEndpoint) {
  const PiecewiseMax f({lin(Var::nu, 2, -1)});
  const auto r = zdx::minimize_max(f, Var::nu, Rat(1, 2), Rat(1));
  EXPECT_EQ(r.arg, Rat(1, 2));
  EXPECT_EQ(r.value, Rat(0));
}

TEST(MinimizeMax, Main4WorkedExample) {
  // Four main4 terms at sigma = 4/5, nu = 1/2 (upsilon = 2/5) as functions of d.
  const Rat nu(1, 2), up(2, 5);
  const PiecewiseMax f({
      lin(Var::d, -1, 2 * nu - 2 * up),
      lin(Var::d, 1, 2 + 4 * nu - 8 * up),
      lin(Var::d, -2, -1 + 8 * nu - 8 * up),
      lin(Var::d, Rat(-2, 3), 10 * nu - 12 * up),
  });
  const auto r = zdx::minimize_max(f, Var::d, Rat(-4, 5), Rat(-1, 10));
  EXPECT_EQ(r.arg, Rat(-3, 10));
  EXPECT_EQ(r.value, Rat(1, 2));
  // Frozen from a 1/2048-step grid scan of [-4/5, -1/10] (grid min 10241/20480
  // at d = -6143/20480), consistent with the exact optimum above.
  EXPECT_LE(r.value, Rat(10241, 20480));
}

TEST(MinimizeMax, TiesPreferSmallerArgument) {
  const PiecewiseMax f({AffExpr(Rat(3))});
  const auto r = zdx::minimize_max(f, Var::d, Rat(-2), Rat(5));
  EXPECT_EQ(r.arg, Rat(-2));
}

TEST(MinimizeMax, InfeasibleNamesConstraint) {
  const PiecewiseMax f({lin(Var::d, 1, 0)});
  ConstraintSet cs;
  cs.add(zdx::geq(AffExpr::var(Var::d), AffExpr(Rat(2)), "d-lower"));
  try {
    zdx::minimize_max(f, Var::d, Rat(-1), Rat(1), cs);
    FAIL() << "expected InfeasibleError";
  } catch (const zdx::InfeasibleError& e) {
    EXPECT_EQ(e.constraint(), "d-lower");
    EXPECT_NE(std::string(e.what()).find("d-lower"), std::string::npos);
  }
}

TEST(MinimizeMax, SlackTightensConstraint) {
  const PiecewiseMax f({lin(Var::d, 1, 0)});
  ConstraintSet cs;
  cs.add(zdx::geq(AffExpr::var(Var::d), AffExpr(Rat(0)), "d>=0"));
  EXPECT_EQ(zdx::minimize_max(f, Var::d, Rat(-1), Rat(1), cs).arg, Rat(0));
  EXPECT_EQ(zdx::minimize_max(f, Var::d, Rat(-1), Rat(1), cs.with_slack(Rat(1, 100))).arg, Rat(1, 100));
}

// Property: exact minimum agrees with a 1/2048 grid scan within the grid's
// resolution (max |slope| * step / 2), and the exact min never exceeds the grid min.
TEST(MinimizeMax, MatchesGridOracle) {
  std::mt19937_64 gen(7);
  std::uniform_int_distribution<int> nterms(1, 5);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<AffExpr> terms;
    Rat max_slope(0);
    const int n = nterms(gen);
    for (int i = 0; i < n; ++i) {
      const Rat s = random_rat(gen, 4, 8), c = random_rat(gen, 4, 8);
      max_slope = zdx::max(max_slope, zdx::abs(s));
      terms.push_back(lin(Var::d, s, c));
    }
    const Rat lo(-1), hi(1);
    ConstraintSet cs;
    cs.add(zdx::leq(AffExpr::var(Var::d), AffExpr(Rat(1, 2)), "cap"));
    const PiecewiseMax f(terms);
    const auto exact = zdx::minimize_max(f, Var::d, lo, hi, cs);
    EXPECT_EQ(f.evaluate({{Var::d, exact.arg}}), exact.value);

    const Rat step(1, 2048);
    Rat grid_min;
    bool first = true;
    for (Rat x = lo; x <= Rat(1, 2); x += step) {
      Rat v = f.evaluate({{Var::d, x}});
      if (first || v < grid_min) grid_min = v;
      first = false;
    }
    EXPECT_LE(exact.value, grid_min);
    EXPECT_LE(grid_min - exact.value, max_slope * step / 2);
  }
}

TEST(MaxOverInterval, Examples) {
  const auto a = zdx::max_over_interval(PiecewiseMax({lin(Var::nu, 2, -1)}), Var::nu, Rat(1, 2), Rat(1));
  EXPECT_EQ(a.arg, Rat(1));
  EXPECT_EQ(a.value, Rat(1));

  const auto b = zdx::max_over_interval(PiecewiseMax({lin(Var::nu, 1, 0), lin(Var::nu, -1, 1)}), Var::nu,
                                        Rat(0), Rat(1));
  EXPECT_EQ(b.value, Rat(1));
  EXPECT_EQ(b.arg, Rat(0));

  EXPECT_THROW(zdx::max_over_interval(PiecewiseMax({AffExpr(1)}), Var::nu, Rat(1), Rat(0)),
               std::invalid_argument);
}

TEST(MaxOverInterval, HuxleyAtThreeQuarters) {
  // Huxley terms 2nu - 2upsilon and 1 + 4nu - 6upsilon at sigma = 3/4:
  // nu/2 and 1 - nu/2. Endpoint values: nu=2/3 -> {1/3, 2/3}, nu=1 -> {1/2, 1/2}.
  const PiecewiseMax hux({lin(Var::nu, Rat(1, 2), 0), lin(Var::nu, Rat(-1, 2), 1)});
  const auto r = zdx::max_over_interval(hux, Var::nu, Rat(2, 3), Rat(1));
  EXPECT_EQ(r.arg, Rat(2, 3));
  EXPECT_EQ(r.value, Rat(2, 3));
  EXPECT_EQ(hux.evaluate({{Var::nu, Rat(1)}}), Rat(1, 2));
}

TEST(MaxOverInterval, SingleTermIsLargerEndpoint) {
  std::mt19937_64 gen(3);
  for (int i = 0; i < 200; ++i) {
    const Rat s = random_rat(gen), c = random_rat(gen);
    Rat lo = random_rat(gen), hi = random_rat(gen);
    if (hi < lo) std::swap(lo, hi);
    const auto r = zdx::max_over_interval(PiecewiseMax({lin(Var::nu, s, c)}), Var::nu, lo, hi);
    EXPECT_EQ(r.value, zdx::max(s * lo + c, s * hi + c));
  }
}

TEST(SolveQuadratic, DoubleRoot) {
  const auto r = zdx::solve_quadratic(1, -2, 1);
  ASSERT_TRUE(r.rational());
  EXPECT_EQ(*r.roots[0].exact, Rat(1));
  EXPECT_EQ(*r.roots[1].exact, Rat(1));
}

TEST(SolveQuadratic, PlusMinusTwo) {
  const auto r = zdx::solve_quadratic(1, 0, -4);
  ASSERT_TRUE(r.rational());
  EXPECT_EQ(*r.roots[0].exact, Rat(-2));
  EXPECT_EQ(*r.roots[1].exact, Rat(2));
}

TEST(SolveQuadratic, IrrationalCrossoverRoots) {
  const auto r = zdx::solve_quadratic(1212, -1690, 583);
  ASSERT_FALSE(r.rational());
  // Bisection oracle at 60 digits: 0.62607949923509408736, 0.76830993970880030208.
  EXPECT_NEAR(r.roots[0].approx, 0.62607949923509408736, 1e-12);
  EXPECT_NEAR(r.roots[1].approx, 0.76830993970880030208, 1e-12);
  EXPECT_EQ(r.a, Rat(1212));
}

TEST(SolveQuadratic, ResidualsSmall) {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 300; ++i) {
    Rat a = random_rat(gen, 5, 9), b = random_rat(gen, 5, 9), c = random_rat(gen, 5, 9);
    if (a.is_zero() || b * b - 4 * a * c < Rat(0)) continue;
    const auto r = zdx::solve_quadratic(a, b, c);
    for (const auto& root : r.roots) {
      if (root.exact) {
        EXPECT_EQ(a * *root.exact * *root.exact + b * *root.exact + c, Rat(0));
      }
      const double x = root.approx;
      EXPECT_LE(std::abs(a.to_double() * x * x + b.to_double() * x + c.to_double()), 1e-9);
    }
  }
}

TEST(SolveQuadratic, Errors) {
  EXPECT_THROW(zdx::solve_quadratic(0, 1, 1), std::domain_error);
  EXPECT_THROW(zdx::solve_quadratic(1, 0, 1), std::domain_error);
}
