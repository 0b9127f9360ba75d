#include <gtest/gtest.h>

#include <random>

#include "spreadres/linalg.hpp"

using namespace spreadres;

TEST(Field, RejectsNonPrimeAndLarge) {
  EXPECT_THROW(Field(4), std::invalid_argument);
  EXPECT_THROW(Field(1), std::invalid_argument);
  EXPECT_THROW(Field(65537), std::invalid_argument);
  EXPECT_NO_THROW(Field(65521));
}

TEST(Field, InversesOverGF7) {
  Field f(7);
  for (Scalar a = 1; a < 7; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_EQ(f.reduce(-1), 6u);
  EXPECT_EQ(f.neg(0), 0u);
}

TEST(Matrix, RankAndKernel) {
  Field f(3);
  Matrix a = Matrix::from_rows({{1, 2, 0}, {2, 1, 0}, {0, 0, 1}}, f);
  // Over GF(3) rows 1 and 2 are dependent: 2*(1,2,0) = (2,1,0).
  EXPECT_EQ(rank(a), 2u);
  auto k = kernel_basis(a);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE((a * k[0] == Vec{0, 0, 0}));
}

TEST(Matrix, SolveInconsistent) {
  Field f(2);
  Matrix a = Matrix::from_rows({{1, 1}, {1, 1}}, f);
  EXPECT_FALSE(solve(a, Vec{1, 0}).has_value());
  auto x = solve(a, Vec{1, 1});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(a * *x, (Vec{1, 1}));
  EXPECT_THROW(solve(a, Vec{1}), std::invalid_argument);
}

TEST(Matrix, ZeroSizedShapes) {
  Field f(2);
  Matrix z(0, 3, f);
  EXPECT_EQ(kernel_basis(z).size(), 3u);
  Matrix w(2, 0, f);
  EXPECT_EQ((w * Matrix(0, 4, f)).rows(), 2u);
  EXPECT_TRUE((w * Matrix(0, 4, f)).is_zero());
}

TEST(Quotient, CoordsRespectSubspace) {
  Field f(2);
  std::vector<Vec> sub{{1, 1, 0}};
  QuotientMap q(3, sub, f);
  EXPECT_EQ(q.quotient_dim(), 2u);
  EXPECT_TRUE(q.contains(Vec{1, 1, 0}));
  EXPECT_EQ(q.coords(Vec{1, 0, 0}), q.coords(Vec{0, 1, 0}));
}

// Property: rank + nullity = columns, and every kernel vector is annihilated.
TEST(MatrixProperty, RankNullity) {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Field f(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = rng() % 6, c = rng() % 6;
      Matrix m(r, c, f);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Scalar>(rng() % p);
      auto k = kernel_basis(m);
      EXPECT_EQ(rank(m) + k.size(), c);
      for (const auto& v : k) {
        const Vec image = m * v;
        EXPECT_TRUE(std::all_of(image.begin(), image.end(), [](Scalar s) { return s == 0; }));
      }
      EXPECT_EQ(rank(m), rank(m.transpose()));
    }
  }
}

TEST(SpanBuilderProperty, MatchesRank) {
  std::mt19937_64 rng(11);
  Field f(3);
  for (int trial = 0; trial < 40; ++trial) {
    SpanBuilder sb(5, f);
    std::vector<Vec> cols;
    for (int k = 0; k < 7; ++k) {
      Vec v(5);
      for (auto& x : v) x = static_cast<Scalar>(rng() % 3);
      sb.add(v);
      cols.push_back(v);
    }
    EXPECT_EQ(sb.dim(), rank(Matrix::from_columns(5, cols, f)));
    for (const auto& v : cols) EXPECT_TRUE(sb.contains(v));
  }
}
