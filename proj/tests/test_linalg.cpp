#include <cilef/linalg.hpp>

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace cilef;
using namespace cilef::testing;

namespace {

RationalMatrix random_matrix(Index rows, Index cols, int rank_hint, Rng& rng) {
  // product of random rows x cols factors with inner dimension rank_hint
  std::uniform_int_distribution<int> dist(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  RationalMatrix a(rows, rank_hint), b(rank_hint, cols), out(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < rank_hint; ++j) a(i, j) = Rational(dist(rng)) / den(rng);
  for (Index i = 0; i < rank_hint; ++i)
    for (Index j = 0; j < cols; ++j) b(i, j) = dist(rng);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      Rational s = 0;
      for (Index k = 0; k < rank_hint; ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  }
  return out;
}

}  // namespace

TEST(Linalg, RankAndDeterminantOfSmallMatrices) {
  RationalMatrix m(3, 3);
  m << 1, 1, 0, 1, 0, 1, 0, 1, 1;
  EXPECT_EQ(rank(m), 3);
  EXPECT_EQ(determinant(m), -2);

  RationalMatrix s(3, 3);
  s << 0, 0, 0, 1, 0, 0, 0, 1, 0;
  EXPECT_EQ(rank(s), 2);
  EXPECT_EQ(determinant(s), 0);

  RationalMatrix h(2, 2);
  h << q("1/2"), q("1/3"), q("1/3"), q("1/4");
  EXPECT_EQ(determinant(h), q("1/72"));
}

TEST(Linalg, BareissDeterminantMatchesCofactorExpansion) {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = 1 + trial % 6;
    const RationalMatrix m = random_matrix(n, n, static_cast<int>(n - (trial % 3 == 0)), rng);
    EXPECT_EQ(determinant(m), cofactor_determinant(m));
  }
}

TEST(Linalg, KernelVectorsAreNormalizedAndAnnihilate) {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Index rows = 1 + trial % 5, cols = 2 + trial % 7;
    const int r = 1 + trial % 3;
    const RationalMatrix m = random_matrix(rows, cols, r, rng);
    const RationalMatrix k = kernel(m);
    EXPECT_EQ(k.cols() + rank(m), cols);
    for (Index c = 0; c < k.cols(); ++c) {
      Index lead = 0;
      while (k(lead, c) == 0) ++lead;
      EXPECT_EQ(k(lead, c), 1);
      for (Index i = 0; i < rows; ++i) {
        Rational s = 0;
        for (Index j = 0; j < cols; ++j) s += m(i, j) * k(j, c);
        EXPECT_EQ(s, 0);
      }
    }
    EXPECT_EQ(rank(k), k.cols());
  }
}

TEST(Linalg, RankStableUnderRowAndColumnScaling) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMatrix m = random_matrix(4, 5, 1 + trial % 4, rng);
    const Index r = rank(m);
    m.row(trial % 4) *= Rational(-7, 3);
    m.col(trial % 5) *= Rational(5, 11);
    EXPECT_EQ(rank(m), r);
  }
}

TEST(Linalg, RowSpaceComparison) {
  RationalMatrix a(2, 3), b(2, 3), c(1, 3);
  a << 1, 2, 3, 0, 1, 1;
  b << 1, 3, 4, 2, 5, 7;  // rows are a0 + a1 and 2 a0 + a1
  c << 1, 2, 3;
  EXPECT_TRUE(same_row_space(a, b));
  EXPECT_FALSE(same_row_space(a, c));
  const RationalMatrix r = rref(b);
  EXPECT_TRUE(entries_equal(rref(r), r));
  EXPECT_EQ(r.rows(), 2);
  EXPECT_EQ(r(0, 0), 1);
  EXPECT_EQ(r(1, 0), 0);
}
