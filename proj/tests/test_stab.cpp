#include <gtest/gtest.h>

#include "spreadres/stab.hpp"

using namespace spreadres;

TEST(Window, WholeGrid) {
  auto g = Poset::grid({4, 2});
  EXPECT_EQ(radapp_window(*g, g->all()), (std::vector<int>{0, 1, 3}));
  auto inc = radapp_subgrid(g, g->all());
  EXPECT_EQ(inc.source().factors(), (std::vector<int>{3, 2}));
  EXPECT_TRUE(inc.origin_aligned());
}

TEST(Window, Singleton) {
  auto g = Poset::grid({5, 2});
  EXPECT_EQ(radapp_window(*g, Subset::singleton(g->at({0, 0}))), (std::vector<int>{0, 1, 2}));
  auto c = Poset::grid({2, 1});
  EXPECT_EQ(radapp_window(*c, Subset::singleton(0)), (std::vector<int>{0, 1}));
}

TEST(KStar, Formula) {
  EXPECT_EQ(k_star({2}), 9);
  EXPECT_EQ(k_star({2, 2}), 17);
  EXPECT_EQ(k_star({1}), 5);
}

TEST(WindowProperty, CoverWindowExhaustive) {
  for (auto factors : {std::vector<int>{4, 2}, std::vector<int>{5, 3}, std::vector<int>{4, 3}}) {
    auto g = Poset::grid(factors);
    for (const auto& s : enumerate_spreads(*g)) EXPECT_TRUE(cover_window_check(*g, s.members)) << format_subset(*g, s.members);
  }
}

TEST(WindowProperty, SizeBound) {
  for (auto factors : {std::vector<int>{5, 2}, std::vector<int>{4, 3}}) {
    auto g = Poset::grid(factors);
    const int bound = k_star({factors[1]});
    for (const auto& s : enumerate_spreads(*g)) EXPECT_LE(static_cast<int>(radapp_window(*g, s.members).size()), bound);
  }
}

TEST(WindowProperty, HitCheckExhaustive) {
  for (auto factors : {std::vector<int>{4, 2}, std::vector<int>{5, 2}}) {
    auto g = Poset::grid(factors);
    for (const auto& s : enumerate_spreads(*g)) {
      auto r = hit_check(g, s.members);
      EXPECT_TRUE(r.grades_in_image) << format_subset(*g, s.members);
      EXPECT_TRUE(r.round_trip) << format_subset(*g, s.members);
    }
  }
}

TEST(Stabilization, KnownRange) {
  auto r = stabilization_table(2, 4, 6);
  ASSERT_EQ(r.rows.size(), 3u);
  for (const auto& row : r.rows) EXPECT_EQ(row.gldim, 2);
  EXPECT_EQ(r.onset(), 4);
  EXPECT_TRUE(r.monotone());
  EXPECT_EQ(r.k_star, 9);
}

TEST(Stabilization, ChainsAreZero) {
  EXPECT_EQ(stabilization_table(2, 1, 1).rows[0].gldim, 0);
  for (const auto& row : stabilization_table(1, 1, 6).rows) EXPECT_EQ(row.gldim, 0);
}

TEST(Stabilization, CapAndBudget) {
  auto r = stabilization_table(8, 9, 9, Field(2), 1, 1e9);
  EXPECT_EQ(r.rows[0].status, "skipped (cap)");
  auto b = stabilization_table(1, 1, 3, Field(2), 1, -1.0);
  for (const auto& row : b.rows) EXPECT_EQ(row.status, "skipped (time budget)");
  EXPECT_FALSE(b.onset().has_value());
}

TEST(Stabilization, OnsetAndMonotone) {
  StabilizationReport r;
  r.rows = {{1, 0, 0, "ok"}, {2, 1, 0, "ok"}, {3, std::nullopt, 0, "skipped (cap)"}, {4, 2, 0, "ok"}, {5, 2, 0, "ok"}};
  EXPECT_EQ(r.onset(), 4);
  EXPECT_TRUE(r.monotone());
  r.rows[1].gldim = 3;
  EXPECT_FALSE(r.monotone());
}
