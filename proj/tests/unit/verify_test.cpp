#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hlag/families.hpp"
#include "hlag/verify.hpp"
#include "json.hpp"

using namespace hlag;

TEST(Rational, ReducesAndPrints) {
  Rational r = Rational::reduced(810, 61952);
  EXPECT_EQ(r.num, 405);
  EXPECT_EQ(r.den, 30976);
  EXPECT_EQ(r.str(), "405/30976");
  EXPECT_EQ(Rational::reduced(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational::reduced(4, 2).str(), "2");
  EXPECT_DOUBLE_EQ(star_lambda_exact(12).value(), 810.0 / 61952);
  EXPECT_DOUBLE_EQ(star_lambda_exact(8).value(), 9.0 * 6 * 5 / (512.0 * 49));
}

TEST(Row, Semantics) {
  VerificationRow up = make_row("a", "f", "8", "1/64", 1.0 / 64, RowKind::Upper, 1e-7, 1.0 / 64 + 5e-8);
  EXPECT_TRUE(up.pass);
  EXPECT_NEAR(up.margin, -5e-8, 1e-15);
  EXPECT_FALSE(make_row("a", "f", "8", "1/64", 1.0 / 64, RowKind::Upper, 1e-7, 1.0 / 64 + 2e-7).pass);
  EXPECT_FALSE(make_row("a", "f", "8", "x", 0.5, RowKind::StrictUpper, 0, 0.5).pass);
  EXPECT_TRUE(make_row("a", "f", "8", "x", 0.5, RowKind::StrictUpper, 0, 0.4999).pass);
  VerificationRow eq = make_row("a", "f", "8", "x", 1.0, RowKind::Equality, 1e-9, 1.0 + 1e-8);
  EXPECT_FALSE(eq.pass);
  EXPECT_LT(eq.margin, 0);
}

TEST(Report, JsonRoundTrip) {
  std::vector<VerificationRow> rows{make_row("K7^4", "complete", "7", "5/343", 5.0 / 343, RowKind::Equality, 1e-9,
                                             0.014577259475218662),
                                    make_row("x", "y", "8..14", "1/3", 1.0 / 3, RowKind::Upper, 1e-7, 0.1)};
  const std::string text = rows_to_json(rows);
  auto j = nlohmann::ordered_json::parse(text);
  EXPECT_EQ(j.dump(2), text);
  EXPECT_EQ(j.size(), 2U);
  EXPECT_EQ(j[0]["bound"], "5/343");
  EXPECT_EQ(j[1]["pass"], true);
  const std::string table = rows_to_text(rows);
  EXPECT_EQ(table.rfind("id", 0), 0U);
  EXPECT_NE(table.find("pass"), std::string::npos);
}

TEST(Cases, RowsAtOneSize) {
  CaseSuiteConfig cfg;
  cfg.n_lo = cfg.n_hi = 9;
  auto rows = verify_cases(cfg);
  std::map<std::string, bool> bound_pass, identity_pass;
  for (const auto& r : rows) {
    if (r.id.rfind("F", 0) == 0 && r.id.find(' ') == std::string::npos) bound_pass[r.id] = r.pass;
    if (r.id == "K7^4" || r.id == "K4^3" || r.id == "star" || r.id.rfind("K5^3-2", 0) == 0 ||
        r.id.rfind("interval", 0) == 0 || r.id == "apex triples") {
      EXPECT_TRUE(r.pass) << r.id << " " << r.n_range;
    }
    if (r.id.find("uncovered") != std::string::npos || r.id.find("delete") != std::string::npos) {
      EXPECT_TRUE(r.pass) << r.id;
    }
    if (r.id.find("link bound") != std::string::npos) {
      EXPECT_EQ(r.pass, r.id != "F1 link bound") << r.id;
    }
    if (r.id.find("link identity") != std::string::npos) identity_pass[r.id.substr(0, r.id.find(' '))] = r.pass;
  }
  ASSERT_EQ(bound_pass.size(), 14U);
  for (int k = 2; k <= 14; ++k) EXPECT_TRUE(bound_pass["F" + std::to_string(k)]) << k;
  EXPECT_FALSE(bound_pass["F1"]);
  // Optima of these envelopes put no weight on the link vertex.
  const std::set<int> off_link{1, 2, 5, 6, 8, 10};
  for (int k = 1; k <= 14; ++k) EXPECT_EQ(identity_pass["F" + std::to_string(k)], !off_link.count(k)) << k;
}

TEST(Cases, CaseOneOptimumAvoidsVertexEight) {
  // λ(F_1) is attained on [7]: the restriction already exceeds 1/108.
  for (int n = 8; n <= 10; ++n) {
    Hypergraph f = case_family(1, n);
    LagrangianResult r = maximize(f);
    EXPECT_LT(r.weighting[7], 1e-9);
    const double on7 = maximize(induced(f, {1, 2, 3, 4, 5, 6, 7}).graph).value;
    EXPECT_NEAR(r.value, on7, 1e-9);
    EXPECT_GT(r.value, 1.0 / 108);
  }
}

TEST(Theorem, SmallRange) {
  TheoremConfig cfg;
  cfg.n_max = 7;
  cfg.star_trend_max = 9;
  TheoremSummary s = verify_theorem(cfg);
  EXPECT_TRUE(s.pass()) << rows_to_text(s.rows);
  ASSERT_EQ(s.searches.size(), 4U);
  EXPECT_EQ(s.searches.back().witness, complete(7, 4));
}
