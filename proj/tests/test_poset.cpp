#include <gtest/gtest.h>

#include <random>

#include "spreadres/poset.hpp"

using namespace spreadres;

namespace {

PosetPtr abc() {
  // b <= a, b <= c
  return Poset::from_relations(3, {{1, 0}, {1, 2}}, {"a", "b", "c"});
}

PosetPtr random_poset(std::mt19937_64& rng, int n) {
  std::vector<std::pair<Elem, Elem>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 3 == 0) rel.emplace_back(i, j);
  return Poset::from_relations(n, rel);
}

}  // namespace

TEST(Poset, RejectsCycles) {
  EXPECT_THROW(Poset::from_relations(2, {{0, 1}, {1, 0}}), NotAPartialOrder);
  EXPECT_THROW(Poset::from_relations(3, {{0, 3}}), std::invalid_argument);
}

TEST(Poset, CapIsEnforced) {
  EXPECT_THROW(Poset::grid({9, 8}), CapExceeded);
  EXPECT_NO_THROW(Poset::grid({8, 8}));
}

TEST(Grid, CoordinatesAndFormat) {
  auto g = Poset::grid({3, 2});
  EXPECT_EQ(g->size(), 6);
  EXPECT_EQ(g->at({1, 0}), 2);
  EXPECT_EQ(format_elem(*g, 2), "(1,0)");
  EXPECT_TRUE(g->leq(g->at({0, 1}), g->at({2, 1})));
  EXPECT_FALSE(g->comparable(g->at({0, 1}), g->at({1, 0})));
  EXPECT_EQ(g->hasse().size(), 7u);
}

TEST(Grid, TruncatedArithmetic) {
  auto c = Poset::grid({4});
  EXPECT_EQ(grid_add(*c, 3, 2), 3);
  EXPECT_EQ(grid_sub(*c, 1, 3), 0);
  auto g = Poset::grid({4, 2});
  EXPECT_EQ(grid_add(*g, g->at({2, 1}), unit_vector(*g, 0)), g->at({3, 1}));
  EXPECT_EQ(grid_add(*g, g->at({3, 1}), unit_vector(*g, 1)), g->at({3, 1}));
  EXPECT_EQ(grid_origin(*g), 0);
}

TEST(Spreads, FrozenCounts) {
  const std::vector<std::pair<std::vector<int>, std::size_t>> cases = {
      {{2, 2}, 11},  {{3, 2}, 27},  {{4, 2}, 55},  {{5, 2}, 100}, {{6, 2}, 168}, {{7, 2}, 266},
      {{8, 2}, 402}, {{9, 2}, 585}, {{3, 3}, 83},  {{4, 3}, 212}, {{5, 3}, 479}, {{6, 3}, 987},
  };
  for (const auto& [factors, count] : cases) {
    EXPECT_EQ(enumerate_spreads(*Poset::grid(factors)).size(), count);
  }
}

TEST(Spreads, ChainCountIsTriangular) {
  for (int m = 1; m <= 9; ++m) {
    EXPECT_EQ(enumerate_spreads(*Poset::grid({m})).size(), static_cast<std::size_t>(m * (m + 1) / 2));
  }
}

TEST(Spreads, CanonicalPresentation) {
  auto g = Poset::grid({3, 3});
  const Subset up11 = g->up_of(g->at({1, 1}));
  Spread s = make_spread(*g, up11);
  EXPECT_EQ(s.minima, Subset::singleton(g->at({1, 1})));
  EXPECT_TRUE(s.covers.empty());
  EXPECT_EQ(cocovers(*g, up11), Subset::of({g->at({0, 2}), g->at({2, 0})}));
  EXPECT_THROW(make_spread(*g, Subset::of({g->at({0, 0}), g->at({2, 2})})), std::invalid_argument);
}

TEST(Spreads, RegionDecompositionPartitions) {
  auto g = Poset::grid({4, 3});
  for (const auto& s : enumerate_spreads(*g)) {
    auto r = region_decomposition(*g, s.members);
    EXPECT_EQ((r.spread | r.up_cover | r.down_cocover | r.incomparable), g->all());
    EXPECT_EQ(r.up_cover, upset(*g, covers(*g, s.members)));
    EXPECT_EQ(r.down_cocover, downset(*g, cocovers(*g, s.members)));
    EXPECT_FALSE(r.up_cover.intersects(r.down_cocover));
  }
}

TEST(Width, FrozenAndBrute) {
  EXPECT_EQ(max_antichain_size(*Poset::grid({5, 3})), 3);
  EXPECT_EQ(max_antichain_size(*abc()), 2);
}

TEST(Opposite, SwapsOrder) {
  auto p = abc();
  auto op = opposite(*p);
  EXPECT_TRUE(op->leq(0, 1));
  EXPECT_FALSE(op->leq(1, 0));
  EXPECT_EQ(enumerate_spreads(*op).size(), enumerate_spreads(*p).size());
}

// Property: the growth enumeration agrees with the exhaustive filter, and every
// spread equals up(minima) - up(covers).
TEST(SpreadsProperty, AgreesWithBruteForce) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_poset(rng, 3 + static_cast<int>(rng() % 8));
    auto fast = enumerate_spreads(*p);
    auto slow = enumerate_spreads_brute(*p);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      EXPECT_EQ(fast[i].members, slow[i].members);
      EXPECT_EQ(upset(*p, fast[i].minima) - upset(*p, fast[i].covers), fast[i].members);
      EXPECT_TRUE(is_antichain(*p, fast[i].minima));
      EXPECT_TRUE(is_antichain(*p, fast[i].covers));
    }
    EXPECT_EQ(max_antichain_size(*p), max_antichain_size_brute(*p));
  }
}

TEST(SpreadsProperty, CanonicalOrder) {
  auto s = enumerate_spreads(*Poset::grid({4, 3}));
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_TRUE(canonical_less(s[i - 1].members, s[i].members));
}
