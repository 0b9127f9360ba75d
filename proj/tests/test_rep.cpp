#include <gtest/gtest.h>

#include <random>

#include "spreadres/rep.hpp"

using namespace spreadres;

namespace {

// Reference count for Hom(k_T, k_S) between spreads: components of T∩S with no
// upper cover in S - T and no lower cover in T - S.
int thin_hom_reference(const Poset& p, Subset t, Subset s) {
  int count = 0;
  for (Subset comp : connected_components(p, t & s)) {
    bool bad = false;
    comp.for_each([&](Elem x) {
      for (Elem y : p.upper_covers(x))
        if (s.contains(y) && !t.contains(y)) bad = true;
      for (Elem y : p.lower_covers(x))
        if (t.contains(y) && !s.contains(y)) bad = true;
    });
    if (!bad) ++count;
  }
  return count;
}

}  // namespace

TEST(Rep, ShapeMismatchIsReported) {
  auto c = Poset::grid({2});
  Field f(2);
  EXPECT_THROW(Representation(c, f, {1, 1}, {Matrix(2, 1, f)}), std::invalid_argument);
}

TEST(Rep, NonCommutingSquareIsRejected) {
  auto g = Poset::grid({2, 2});
  Field f(2);
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < g->hasse().size(); ++i) maps.push_back(Matrix::identity(1, f));
  maps[0] = Matrix(1, 1, f);
  EXPECT_THROW(validate_representation(g, f, {1, 1, 1, 1}, maps), FunctorialityError);
}

TEST(Rep, ChainHomOracle) {
  auto c = Poset::grid({3});
  Field f(2);
  auto k12 = indicator_rep(c, f, Subset::of({1, 2}));
  auto k01 = indicator_rep(c, f, Subset::of({0, 1}));
  EXPECT_EQ(hom_dim(*k12, *k01), 1);
  EXPECT_EQ(hom_dim(*k01, *k12), 0);
}

TEST(Rep, ProjectiveHomIsEvaluation) {
  auto g = Poset::grid({3, 2});
  Field f(3);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_representation(g, f, rng);
    for (Elem x = 0; x < g->size(); ++x) {
      EXPECT_EQ(hom_dim(*indicator_rep(g, f, g->up_of(x)), *m), m->dim(x));
    }
  }
}

TEST(RepProperty, ThinHomMatchesReference) {
  for (auto factors : {std::vector<int>{3, 2}, std::vector<int>{3, 3}}) {
    auto g = Poset::grid(factors);
    Field f(2);
    auto spreads = enumerate_spreads(*g);
    for (const auto& t : spreads)
      for (const auto& s : spreads)
        ASSERT_EQ(hom_dim(*indicator_rep(g, f, t.members), *indicator_rep(g, f, s.members)),
                  thin_hom_reference(*g, t.members, s.members));
  }
}

TEST(RepProperty, RandomRepsAreFunctorial) {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u}) {
    auto g = Poset::grid({3, 3});
    for (int trial = 0; trial < 30; ++trial) {
      auto m = random_representation(g, Field(p), rng);
      EXPECT_NO_THROW(check_functorial(*m));
    }
  }
}

TEST(RepProperty, KernelCokernelExactness) {
  std::mt19937_64 rng(23);
  auto g = Poset::grid({3, 2});
  Field f(2);
  for (int trial = 0; trial < 25; ++trial) {
    auto m = random_representation(g, f, rng);
    auto n = random_representation(g, f, rng);
    auto basis = hom_basis(m, n);
    if (basis.empty()) continue;
    RepMorphism h = basis[0];
    for (std::size_t i = 1; i < basis.size(); ++i)
      if (rng() % 2) h = add(h, basis[i]);
    ASSERT_TRUE(h.is_natural());
    auto k = kernel_of(h);
    auto c = cokernel_of(h);
    EXPECT_NO_THROW(check_functorial(*k.kernel));
    EXPECT_NO_THROW(check_functorial(*c.cokernel));
    EXPECT_TRUE(k.inclusion.is_natural());
    EXPECT_TRUE(c.projection.is_natural());
    EXPECT_TRUE(compose(h, k.inclusion).is_zero());
    EXPECT_TRUE(compose(c.projection, h).is_zero());
    for (Elem x = 0; x < g->size(); ++x) {
      const int r = static_cast<int>(rank(h.at(x)));
      EXPECT_EQ(k.kernel->dim(x), m->dim(x) - r);
      EXPECT_EQ(c.cokernel->dim(x), n->dim(x) - r);
    }
  }
}

// lim M = Hom(const k, M) and (colim M)^* = Hom(M, const k).
TEST(RepProperty, LimitsByUniversalProperty) {
  std::mt19937_64 rng(31);
  auto g = Poset::grid({3, 2});
  Field f(3);
  auto constant = indicator_rep(g, f, g->all());
  for (int trial = 0; trial < 25; ++trial) {
    auto m = random_representation(g, f, rng);
    EXPECT_EQ(co_limit(*m, CoLimitKind::limit).dim, hom_dim(*constant, *m));
    EXPECT_EQ(co_limit(*m, CoLimitKind::colimit).dim, hom_dim(*m, *constant));
  }
}

TEST(Rep, ColimitOverSubdiagram) {
  auto g = Poset::grid({3, 3});
  Field f(2);
  auto m = indicator_rep(g, f, g->up_of(g->at({1, 1})));
  // Two incomparable points in the support and nothing joining them inside D.
  const Subset d = Subset::of({g->at({1, 2}), g->at({2, 1})});
  EXPECT_EQ(co_limit_over(*m, CoLimitKind::colimit, d).dim, 2);
  EXPECT_EQ(co_limit_over(*m, CoLimitKind::colimit, d | Subset::singleton(g->at({2, 2}))).dim, 1);
}

TEST(Rep, IsoCheck) {
  std::mt19937_64 rng(41);
  auto g = Poset::grid({2, 2});
  Field f(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_representation(g, f, rng);
    EXPECT_TRUE(iso_check(m, m, 16));
  }
  auto a = indicator_rep(g, f, Subset::of({g->at({0, 1}), g->at({1, 1})}));
  auto b = indicator_rep(g, f, Subset::of({g->at({1, 0}), g->at({1, 1})}));
  EXPECT_FALSE(iso_check(a, b));
  auto ab = direct_sum(g, f, {a, b}).sum;
  auto ba = direct_sum(g, f, {b, a}).sum;
  EXPECT_TRUE(iso_check(ab, ba));
}

TEST(Rep, RestrictRejectsNonMonotone) {
  auto g = Poset::grid({3});
  auto q = Poset::grid({2});
  Field f(2);
  auto m = indicator_rep(g, f, g->all());
  EXPECT_THROW(restrict(*m, q, {2, 0}), std::invalid_argument);
  auto r = restrict(*m, q, {0, 2});
  EXPECT_EQ(r.dims(), (std::vector<int>{1, 1}));
  EXPECT_EQ(r.edge_map(0), Matrix::identity(1, f));
}
