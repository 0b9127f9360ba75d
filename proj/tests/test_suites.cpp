#include <gtest/gtest.h>

#include "spreadres/suites.hpp"

using namespace spreadres;

TEST(PropertyResult, CountsAndCapsExamples) {
  PropertyResult p;
  for (int i = 0; i < 10; ++i) p.record(i % 2 == 0, [i] { return std::to_string(i); });
  EXPECT_EQ(p.cases, 10);
  EXPECT_EQ(p.failures, 5);
  EXPECT_EQ(p.examples, (std::vector<std::string>{"1", "3", "5", "7", "9"}));
  EXPECT_FALSE(p.passed());
}

TEST(SuiteReport, PropertyReferencesStayValid) {
  SuiteReport r("x");
  auto& first = r.property("a");
  for (int i = 0; i < 100; ++i) r.property("p" + std::to_string(i));
  first.record(false, [] { return std::string("bad"); });
  EXPECT_EQ(r.properties.front().failures, 1);
  EXPECT_FALSE(r.passed());
}

TEST(AlignedInclusions, Counts) {
  EXPECT_EQ(all_aligned_inclusions(Poset::grid({3, 2}), Poset::grid({5, 2})).size(), 10u);
  EXPECT_EQ(all_aligned_inclusions(Poset::grid({3, 2}), Poset::grid({6, 3})).size(), 60u);
  EXPECT_TRUE(all_aligned_inclusions(Poset::grid({4}), Poset::grid({3})).empty());
}

TEST(FormulaInclusions, Shapes) {
  auto inc = spread_formula_inclusions(Poset::grid({6, 2}), 3, 7);
  ASSERT_EQ(inc.lan.size(), 3u);
  ASSERT_EQ(inc.contraction.size(), 3u);
  for (const auto& i : inc.lan) EXPECT_EQ(i.target().factors(), (std::vector<int>{9, 3}));
  for (const auto& i : inc.contraction) {
    EXPECT_TRUE(i.origin_aligned());
    EXPECT_EQ(i.source().factors(), (std::vector<int>{4, 2}));
  }
}

TEST(Suites, SmallInstancesPass) {
  const std::vector<Field> fields{Field(2), Field(3)};
  const std::vector<NamedPoset> small{{"3x2", Poset::grid({3, 2})}};
  EXPECT_TRUE(verify_radapp_closed_form(small, fields).passed());
  EXPECT_TRUE(verify_relative_simple(small, fields).passed());
  EXPECT_TRUE(verify_windows(small, Field(2)).passed());
  EXPECT_TRUE(verify_chains(30, 4, 1, fields).passed());
  EXPECT_TRUE(verify_kan_transport(Poset::grid({2, 2}), {Poset::grid({4, 2})}, 2, 5, 1, Field(2)).passed());
  auto inc = spread_formula_inclusions(Poset::grid({4, 2}), 2, 1);
  EXPECT_TRUE(verify_spread_formulas(inc.lan, inc.contraction, Field(3)).passed());
  auto stab = verify_stabilization(2, 1, 5, Field(2), 1, 60.0);
  EXPECT_TRUE(stab.passed());
  ASSERT_TRUE(stab.stabilization.has_value());
  EXPECT_EQ(stab.stabilization->onset(), 4);
}

TEST(Suites, OrderCombinatoricsCountsAreExhaustive) {
  auto r = verify_order_combinatorics({{"abc", Poset::from_relations(3, {{1, 0}, {1, 2}}, {"a", "b", "c"})}});
  EXPECT_TRUE(r.passed());
  // Seven nonempty subsets, each checked once for upsets and duality.
  EXPECT_GE(r.property("duality-dictionary").cases, 7);
  EXPECT_GT(r.property("cocover-vs-connected-component").cases, 0);
}

TEST(Suites, RejectsLargePosetsForOrderCombinatorics) {
  EXPECT_THROW(verify_order_combinatorics({{"big", Poset::grid({5, 4})}}), std::invalid_argument);
}
