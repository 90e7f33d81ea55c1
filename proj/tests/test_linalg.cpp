#include <gtest/gtest.h>

#include "tcalab/linalg.hpp"

#include <random>

using namespace tcalab;

namespace {

Matrix random_matrix(std::mt19937& rng, int r, int c, int rank_cap) {
  // product of r x k and k x c factors, so the rank is at most k
  std::uniform_int_distribution<int> v(-3, 3);
  Matrix a(r, rank_cap), b(rank_cap, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < rank_cap; ++j) a(i, j) = Rational(v(rng), 1 + (v(rng) + 3) % 3);
  for (int i = 0; i < rank_cap; ++i)
    for (int j = 0; j < c; ++j) b(i, j) = v(rng);
  return a * b;
}

}  // namespace

TEST(Linalg, RankExamples) {
  EXPECT_EQ(rank(Matrix::identity(4)), 4);
  EXPECT_EQ(rank(Matrix(3, 5)), 0);
  EXPECT_EQ(rank(Matrix(0, 4)), 0);
  EXPECT_EQ(rank(Matrix(4, 0)), 0);
  Matrix m(2, 2);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 2;
  EXPECT_EQ(rank(m), 1);
}

TEST(Linalg, FractionFreeRankMatchesGaussian) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + trial % 6, c = 1 + (trial / 6) % 6, k = 1 + trial % 4;
    const Matrix m = random_matrix(rng, r, c, k);
    const int x = rank(m);
    EXPECT_EQ(x, rank_rational(m));
    EXPECT_LE(x, std::min({r, c, k}));
  }
}

TEST(Linalg, NullspaceIsAKernelBasis) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 1 + trial % 5, c = 1 + (trial / 5) % 7;
    const Matrix m = random_matrix(rng, r, c, 1 + trial % 3);
    const auto ns = nullspace(m);
    EXPECT_EQ(static_cast<int>(ns.size()), c - rank(m));
    Matrix basis(c, static_cast<int>(ns.size()));
    for (std::size_t k = 0; k < ns.size(); ++k)
      for (int i = 0; i < c; ++i) basis(i, static_cast<int>(k)) = ns[k][i];
    EXPECT_TRUE((m * basis).is_zero());
    EXPECT_EQ(rank(basis), static_cast<int>(ns.size()));
  }
}

TEST(Linalg, ShapeErrors) {
  EXPECT_THROW(Matrix(2, 3) * Matrix(2, 3), Error);
  EXPECT_THROW(Matrix(2, 3) - Matrix(3, 2), Error);
  EXPECT_EQ((Matrix(2, 0) * Matrix(0, 3)), Matrix(2, 3));
}
