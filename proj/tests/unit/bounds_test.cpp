#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "zdx/bounds/catalog.hpp"
#include "zdx/bounds/density.hpp"
#include "zdx/bounds/serialize.hpp"

using zdx::AffExpr;
using zdx::Rat;
using zdx::Var;

namespace {

Rat R(const char* s) { return Rat::parse(s); }

const zdx::ConstraintStatus& status(const zdx::BoundEvaluation& ev, const std::string& label) {
  for (const auto& s : ev.report)
    if (s.label == label) return s;
  throw std::runtime_error("no constraint " + label);
}

}  // namespace

TEST(Catalog, SortedIdsAndSize) {
  std::vector<std::string> ids;
  for (const auto& b : zdx::catalog()) ids.push_back(b.id);
  EXPECT_EQ(ids, (std::vector<std::string>{"bourgain", "completion", "huxley", "main1", "main12", "main4"}));
  EXPECT_THROW(zdx::find_bound("nope"), std::invalid_argument);
}

TEST(Catalog, Main1SecondTermAtSeven) {
  const auto terms = zdx::find_bound("main1").terms_at(7);
  const AffExpr& t = terms.terms()[1];
  EXPECT_EQ(t.coeff(Var::nu), R("25/3"));
  EXPECT_EQ(t.coeff(Var::upsilon), R("-32/3"));
  EXPECT_EQ(t.coeff(Var::d), R("-1/3"));
  EXPECT_EQ(t.constant(), R("1/3"));
}

TEST(Catalog, Main1NeedsValidK) {
  const auto& b = zdx::find_bound("main1");
  EXPECT_THROW(b.terms_at(std::nullopt), std::invalid_argument);
  EXPECT_THROW(b.terms_at(1), std::invalid_argument);
  EXPECT_THROW(zdx::evaluate(b, R("4/5"), R("1"), R("0")), std::invalid_argument);
  EXPECT_NO_THROW(b.terms_at(2));
}

TEST(Catalog, Main1CapsAtK) {
  // d <= 4k*ups - (3k-1)*nu - 1 and d <= k/(k-1)*nu - 1, checked at k = 3.
  const auto cs = zdx::find_bound("main1").constraints_at(3);
  const AffExpr& cap1 = cs.constraints()[2].expr;
  EXPECT_EQ(cap1, AffExpr::var(Var::d) - AffExpr::var(Var::upsilon, 12) + AffExpr::var(Var::nu, 8) + AffExpr(1));
  const AffExpr& cap2 = cs.constraints()[3].expr;
  EXPECT_EQ(cap2, AffExpr::var(Var::d) - AffExpr::var(Var::nu, R("3/2")) + AffExpr(1));
}

TEST(Catalog, HuxleyAndCompletionAtThreeQuarters) {
  for (const char* id : {"huxley", "completion"}) {
    const auto ev = zdx::evaluate(zdx::find_bound(id), R("3/4"), R("1"), R("0"));
    EXPECT_EQ(ev.exponent, R("1/2")) << id;
    EXPECT_TRUE(ev.ok) << id;
  }
  const auto terms = zdx::terms_at_sigma(zdx::find_bound("huxley"), R("3/4"), std::nullopt);
  const zdx::Assignment at{{Var::nu, R("1")}};
  EXPECT_EQ(terms.terms()[0].evaluate(at), R("1/2"));
  EXPECT_EQ(terms.terms()[1].evaluate(at), R("1/2"));
}

TEST(Catalog, Main4WorkedExample) {
  const auto ev = zdx::evaluate(zdx::find_bound("main4"), R("4/5"), R("1/2"), R("-3/10"));
  EXPECT_EQ(ev.exponent, R("1/2"));
  EXPECT_TRUE(ev.ok);
  EXPECT_EQ(status(ev, "delta >= N^26/(V^32 T)").margin, R("1/2"));
  EXPECT_EQ(status(ev, "delta <= V^16/(N^11 T)").margin, R("1/5"));
  ASSERT_EQ(ev.assumed.size(), 1u);
}

TEST(Catalog, Main1CapActiveWithZeroMargin) {
  // sigma = 9/10, nu = 2/3, k = 2: cap 8*(3/5) - 5*(2/3) - 1 = 7/15.
  const auto ev = zdx::evaluate(zdx::find_bound("main1"), R("9/10"), R("2/3"), R("7/15"), 2);
  const auto& cap = status(ev, "delta <= V^(4k)/(T N^(3k-1))");
  EXPECT_EQ(cap.margin, R("0"));
  EXPECT_TRUE(cap.ok);
  EXPECT_EQ(status(ev, "N >= T^(2/3)").margin, R("0"));
}

TEST(Catalog, EvaluateRejectsBadSigma) {
  const auto& b = zdx::find_bound("huxley");
  EXPECT_THROW(zdx::evaluate(b, R("1/2"), R("1"), R("0")), std::invalid_argument);
  EXPECT_THROW(zdx::evaluate(b, R("1"), R("1"), R("0")), std::invalid_argument);
  EXPECT_THROW(zdx::evaluate(b, R("3/4"), R("0"), R("0")), std::invalid_argument);
}

TEST(Catalog, ViolatedConstraintReported) {
  // Huxley requires V >= N^(3/4); sigma = 3/5 violates it.
  const auto ev = zdx::evaluate(zdx::find_bound("huxley"), R("3/5"), R("1"), R("0"));
  EXPECT_FALSE(ev.ok);
  EXPECT_EQ(ev.report[0].margin, R("-3/20"));
}

TEST(Catalog, AntitoneInUpsilon) {
  for (const auto& b : zdx::catalog()) {
    for (int kk = 0; kk < (b.parametric() ? 11 : 1); ++kk) {
      const auto kv = b.parametric() ? std::optional<int>(*b.k_min + kk) : std::nullopt;
      for (const auto& t : b.terms_at(kv).terms()) EXPECT_LE(t.coeff(Var::upsilon), Rat(0)) << b.id;
    }
  }
}

TEST(Catalog, SharedFirstTerm) {
  const AffExpr first = AffExpr::var(Var::d, -1) + AffExpr::var(Var::nu, 2) + AffExpr::var(Var::upsilon, -2);
  for (const char* id : {"bourgain", "main1"}) {
    const auto t = zdx::find_bound(id).terms_at(id == std::string("main1") ? std::optional<int>(2) : std::nullopt);
    EXPECT_NE(std::find(t.terms().begin(), t.terms().end(), first), t.terms().end()) << id;
  }
}

TEST(Catalog, JsonRoundTrip) {
  const std::string text = zdx::catalog_to_json(zdx::catalog());
  const auto back = zdx::catalog_from_json(text);
  ASSERT_EQ(back.size(), zdx::catalog().size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(back[i], zdx::catalog()[i]) << back[i].id;
  EXPECT_EQ(zdx::catalog_to_json(back), text);
  EXPECT_THROW(zdx::catalog_from_json("{\"format\": 1}"), std::invalid_argument);
  EXPECT_THROW(zdx::catalog_from_json("not json"), std::invalid_argument);
}

TEST(Catalog, DescribeKeepsKSymbolic) {
  const std::string s = zdx::describe(zdx::find_bound("main1"));
  EXPECT_NE(s.find("(k + 4/3)*nu"), std::string::npos) << s;
  EXPECT_NE(s.find("(-k)/(k - 1)*nu"), std::string::npos) << s;
}

TEST(Density, ClosedForms) {
  // 4/5 lies past the stated upper end 10/13 of Ivic's range.
  EXPECT_EQ(zdx::closed_form(zdx::ivic(), R("4/5")), R("3/8"));
  EXPECT_EQ(zdx::density_exponent(zdx::ivic(), R("3/4")), R("3/5"));
  EXPECT_EQ(zdx::density_exponent(zdx::jutila(5), R("77/100")), R("345/701"));
  EXPECT_EQ(zdx::density_exponent(zdx::zerodensity2(), R("23/29")), R("9/23"));
  EXPECT_EQ(zdx::density_exponent(zdx::zerodensity1(), R("19/25")), R("216/397"));
  EXPECT_EQ(zdx::density_exponent(zdx::zerodensity1_term(0), R("23/30")),
            zdx::density_exponent(zdx::zerodensity1_term(1), R("23/30")));
}

TEST(Density, RangeErrorsNameTheBound) {
  try {
    zdx::density_exponent(zdx::ivic(), R("9/10"));
    FAIL() << "expected out_of_range";
  } catch (const std::out_of_range& e) {
    EXPECT_NE(std::string(e.what()).find("ivic"), std::string::npos);
  }
  EXPECT_THROW(zdx::density_exponent(zdx::zerodensity2(), R("3/4")), std::out_of_range);
  EXPECT_THROW(zdx::jutila(1), std::invalid_argument);
}

TEST(Density, JutilaIncreasesInK) {
  // The limit 3(1-s)/(3s-1) exceeds the k = 2 value 3(1-s)/(2s) for s < 1,
  // so the family increases with k.
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> num(751, 999);
  for (int i = 0; i < 200; ++i) {
    const Rat s(num(gen), 1000);
    for (int k = 2; k < 12; ++k)
      EXPECT_LT(zdx::density_exponent(zdx::jutila(k), s), zdx::density_exponent(zdx::jutila(k + 1), s));
  }
}

TEST(Density, PositiveOnRange) {
  for (const auto& b : {zdx::ivic(), zdx::jutila(3), zdx::zerodensity2(), zdx::zerodensity1()}) {
    const Rat lo = b.sigma_range.lo, hi = b.sigma_range.hi;
    for (int i = 0; i < 64; ++i) {
      const Rat s = lo + (hi - lo) * Rat(i, 64);
      EXPECT_GT(zdx::density_exponent(b, s), Rat(0)) << b.id << " " << s;
    }
  }
}
