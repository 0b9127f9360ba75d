#include <gtest/gtest.h>

#include <random>

#include "spreadres/approx.hpp"
#include "spreadres/kan.hpp"

using namespace spreadres;

namespace {

AlignedGridInclusion inclusion(std::vector<int> from, std::vector<int> to, std::vector<std::vector<int>> maps) {
  return AlignedGridInclusion(Poset::grid(from), Poset::grid(to), std::move(maps));
}

std::vector<AlignedGridInclusion> three_by_two_into_five_by_two() {
  return {inclusion({3, 2}, {5, 2}, {{0, 1, 2}, {0, 1}}), inclusion({3, 2}, {5, 2}, {{0, 2, 4}, {0, 1}}),
          inclusion({3, 2}, {5, 2}, {{0, 3, 4}, {0, 1}}), inclusion({3, 2}, {5, 2}, {{1, 2, 4}, {0, 1}})};
}

}  // namespace

TEST(Inclusion, Validation) {
  EXPECT_THROW(inclusion({2}, {4}, {{3, 0}}), std::invalid_argument);
  EXPECT_THROW(inclusion({2}, {4}, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(inclusion({2}, {4}, {{0, 4}}), std::invalid_argument);
  EXPECT_THROW(inclusion({2}, {4, 1}, {{0, 1}}), std::invalid_argument);
  EXPECT_NO_THROW(inclusion({7, 3}, {9, 3}, {{0, 1, 3, 4, 5, 7, 8}, {0, 1, 2}}));
}

TEST(Floor, ChainExample) {
  auto i = inclusion({2}, {4}, {{0, 3}});
  EXPECT_EQ(i.floor(2), 0);
  EXPECT_EQ(i.floor(3), 1);
  EXPECT_EQ(i.floor(0), 0);
  EXPECT_TRUE(i.origin_aligned());
  auto shifted = inclusion({2}, {4}, {{1, 3}});
  EXPECT_FALSE(shifted.origin_aligned());
  EXPECT_THROW(shifted.floor(0), OutsideImageUpset);
}

TEST(FloorProperty, AdjunctionRetractionJoins) {
  auto i = inclusion({7, 3}, {9, 3}, {{0, 1, 3, 4, 5, 7, 8}, {0, 1, 2}});
  const Poset& q = i.source();
  const Poset& p = i.target();
  for (Elem x = 0; x < q.size(); ++x) EXPECT_EQ(i.floor(i.map(x)), x);
  for (Elem x = 0; x < q.size(); ++x)
    for (Elem y = 0; y < p.size(); ++y) EXPECT_EQ(p.leq(i.map(x), y), q.leq(x, i.floor(y)));
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b) EXPECT_EQ(i.floor(grid_join(p, a, b)), grid_join(q, i.floor(a), i.floor(b)));
}

TEST(Lan, IdentityIsIdentity) {
  auto g = Poset::grid({3, 2});
  auto i = AlignedGridInclusion::identity(g);
  std::mt19937_64 rng(3);
  auto m = random_representation(g, Field(2), rng);
  EXPECT_EQ(*lan(i, *m), *m);
  auto c = contraction(i, *m);
  EXPECT_TRUE(iso_check(c, m, 8));
}

TEST(LanProperty, SpreadFormula) {
  Field field(2);
  for (const auto& i : three_by_two_into_five_by_two()) {
    for (const auto& s : enumerate_spreads(i.source())) {
      auto image = lan(i, *indicator_rep(i.source_ptr(), field, s.members));
      const Subset expected = upset(i.target(), i.map_of(s.minima)) - upset(i.target(), i.map_of(s.covers));
      EXPECT_EQ(*image, *indicator_rep(i.target_ptr(), field, expected));
      EXPECT_TRUE(is_spread(i.target(), expected));
    }
  }
}

TEST(ContractionProperty, SpreadFormula) {
  Field field(3);
  auto p = Poset::grid({5, 2});
  for (const auto& i : three_by_two_into_five_by_two()) {
    if (!i.origin_aligned()) continue;
    for (const auto& s : enumerate_spreads(*p)) {
      auto c = contraction(i, *indicator_rep(p, field, s.members));
      const Subset expected = upset(i.source(), i.floor_of(s.minima)) - upset(i.source(), i.floor_of(s.covers));
      ASSERT_TRUE(is_convex(i.source(), expected));
      EXPECT_TRUE(iso_check(c, indicator_rep(i.source_ptr(), field, expected), 8)) << format_subset(*p, s.members);
    }
  }
}

TEST(ContractionProperty, EqualityIndexAgrees) {
  std::mt19937_64 rng(8);
  Field field(2);
  auto i = inclusion({3, 2}, {5, 2}, {{0, 2, 3}, {0, 1}});
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_representation(i.target_ptr(), field, rng);
    auto c = contraction(i, *m);
    for (Elem q = 0; q < i.source().size(); ++q) {
      Subset fibre;
      for (Elem p = 0; p < i.target().size(); ++p)
        if (i.floor(p) == q) fibre.insert(p);
      EXPECT_EQ(c->dim(q), co_limit_over(*m, CoLimitKind::colimit, fibre).dim);
    }
  }
}

TEST(ContractionProperty, AdjunctionDimensions) {
  std::mt19937_64 rng(13);
  Field field(2);
  for (const auto& i : three_by_two_into_five_by_two()) {
    if (!i.origin_aligned()) continue;
    for (int trial = 0; trial < 10; ++trial) {
      auto m = random_representation(i.target_ptr(), field, rng);
      auto n = random_representation(i.source_ptr(), field, rng);
      EXPECT_EQ(hom_dim(*contraction(i, *m), *n), hom_dim(*m, *lan(i, *n)));
    }
  }
}

TEST(Contraction, RejectsSupportOutsideUpset) {
  auto i = inclusion({2}, {4}, {{1, 3}});
  auto m = indicator_rep(i.target_ptr(), Field(2), Subset::of({0, 1}));
  EXPECT_THROW(contraction(i, *m), OutsideImageUpset);
}

TEST(LanProperty, FullyFaithful) {
  std::mt19937_64 rng(17);
  Field field(3);
  for (const auto& i : three_by_two_into_five_by_two()) {
    for (int trial = 0; trial < 10; ++trial) {
      auto m = random_representation(i.source_ptr(), field, rng);
      auto n = random_representation(i.source_ptr(), field, rng);
      EXPECT_EQ(hom_dim(*m, *n), hom_dim(*lan(i, *m), *lan(i, *n)));
    }
  }
}

TEST(LanProperty, ApproximationsArePreserved) {
  std::mt19937_64 rng(19);
  Field field(2);
  auto i = inclusion({3, 2}, {5, 2}, {{0, 2, 4}, {0, 1}});
  auto small = SpreadFamily::all_spreads(i.source_ptr(), field);
  auto big = SpreadFamily::all_spreads(i.target_ptr(), field);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_representation(i.source_ptr(), field, rng);
    auto a = minimal_approximation(small, m);
    auto ls = lan(i, *a.domain.sum);
    auto lt = lan(i, *m);
    EXPECT_TRUE(is_approximation(big, lan(i, a.morphism, ls, lt)));
  }
}

TEST(UsminusProperty, FloorExchange) {
  auto i = inclusion({3, 2}, {6, 2}, {{0, 2, 5}, {0, 1}});
  const Subset image = i.image();
  const auto elems = image.elements();
  const int n = static_cast<int>(elems.size());
  for (int am = 0; am < (1 << n); ++am)
    for (int bm = 0; bm < (1 << n); ++bm) {
      Subset a, b;
      for (int k = 0; k < n; ++k) {
        if (am >> k & 1) a.insert(elems[static_cast<std::size_t>(k)]);
        if (bm >> k & 1) b.insert(elems[static_cast<std::size_t>(k)]);
      }
      const Subset lhs = upset(i.source(), i.floor_of(a)) - upset(i.source(), i.floor_of(b));
      const Subset rhs = i.floor_of(upset(i.target(), a) - upset(i.target(), b));
      ASSERT_EQ(lhs, rhs);
    }
}

TEST(Padding, Basics) {
  auto g = Poset::grid({3, 2});
  Field field(2);
  const Subset u = g->up_of(g->at({1, 0}));
  auto sub = induced_subposet(*g, u);
  auto inner = indicator_rep(sub.poset, field, sub.poset->all());
  auto padded = padding(g, sub, *inner);
  EXPECT_EQ(*padded, *indicator_rep(g, field, u));
  auto whole = induced_subposet(*g, g->all());
  std::mt19937_64 rng(1);
  auto m = random_representation(whole.poset, field, rng);
  EXPECT_EQ(padding(g, whole, *m)->dims(), m->dims());
  EXPECT_THROW(padding(g, induced_subposet(*g, Subset::singleton(0)), *indicator_rep(induced_subposet(*g, Subset::singleton(0)).poset, field, Subset::singleton(0))),
               std::invalid_argument);
}

TEST(Subgrid, SpreadGrades) {
  auto g = Poset::grid({5, 3});
  Field field(2);
  const Subset s = upset(*g, Subset::of({g->at({1, 1}), g->at({3, 0})})) - g->up_of(g->at({4, 2}));
  auto r = support_subgrid(g, {indicator_rep(g, field, s)});
  EXPECT_EQ(r.inclusion.factor_maps(), (std::vector<std::vector<int>>{{1, 3, 4}, {0, 1, 2}}));
}

TEST(Subgrid, ConstantModuleUsesOrigin) {
  auto g = Poset::grid({5, 3});
  auto r = support_subgrid(g, {indicator_rep(g, Field(2), g->all())});
  EXPECT_EQ(r.inclusion.factor_maps(), (std::vector<std::vector<int>>{{0}, {0}}));
}

TEST(SubgridProperty, RoundTrip) {
  std::mt19937_64 rng(2718);
  auto g = Poset::grid({5, 3});
  Field field(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_representation(g, field, rng);
    auto r = support_subgrid(g, {m});
    auto back = lan(r.inclusion, *r.restricted[0]);
    EXPECT_TRUE(counit(r.inclusion, *m, back, m).is_iso());
  }
}
