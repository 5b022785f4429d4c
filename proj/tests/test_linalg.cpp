#include <random>

#include <gtest/gtest.h>

#include "strathom/matrix.hpp"

using namespace strathom;

namespace {

using Q = Rational;

Mat<Q> random_int_matrix(std::mt19937& g, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat<Q> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Q::from_int(d(g));
  return m;
}

// product of a random r x k and k x c matrix, so rank <= k
Mat<Q> low_rank(std::mt19937& g, std::size_t r, std::size_t c, std::size_t k) {
  return random_int_matrix(g, r, k) * random_int_matrix(g, k, c);
}

}  // namespace

TEST(Rational, ParsesFractionsAndCanonicalizes) {
  EXPECT_EQ(Q::parse("6/8"), Q(3, 4));
  EXPECT_EQ(Q::parse("-3/4"), Q(-3, 4));
  EXPECT_EQ(Q::parse("5"), Q::from_int(5));
  EXPECT_THROW(Q::parse("1/0"), ParseError);
  EXPECT_THROW(Q::parse("x"), ParseError);
  EXPECT_THROW(Q(1, 0), DomainError);
}

TEST(Rational, FieldAxiomsOnSamples) {
  Q a(2, 3), b(-5, 7), c(1, 11);
  EXPECT_EQ((a + b) * c, a * c + b * c);
  EXPECT_EQ(a * a.inverse(), Q::from_int(1));
  EXPECT_EQ(a / b * b, a);
  EXPECT_THROW(Q::from_int(0).inverse(), DomainError);
}

TEST(PrimeField, ArithmeticModP) {
  ScopedPrimeField guard(7);
  EXPECT_EQ(Fp::from_int(3) * Fp::from_int(5), Fp::from_int(1));
  EXPECT_EQ(Fp::from_int(-1), Fp::from_int(6));
  EXPECT_EQ(Fp::parse("1/3"), Fp::from_int(5));
  for (long x = 1; x < 7; ++x) EXPECT_EQ(Fp::from_int(x) * Fp::from_int(x).inverse(), Fp::from_int(1));
}

TEST(PrimeField, RejectsNonPrimeModulus) {
  EXPECT_THROW(ScopedPrimeField(9), DomainError);
  EXPECT_THROW(ScopedPrimeField(1), DomainError);
}

TEST(PrimeField, ScopeRestoresPreviousModulus) {
  ScopedPrimeField outer(5);
  {
    ScopedPrimeField inner(11);
    EXPECT_EQ(Fp::active(), 11u);
  }
  EXPECT_EQ(Fp::active(), 5u);
}

TEST(PrimeField, MixingModuliThrows) {
  Fp a, b;
  {
    ScopedPrimeField g(5);
    a = Fp::from_int(2);
  }
  {
    ScopedPrimeField g(7);
    b = Fp::from_int(2);
  }
  EXPECT_THROW(a + b, FieldMismatch);
}

TEST(PrimeField, RankDropsInCharacteristicTwo) {
  ScopedPrimeField g(2);
  auto m = Mat<Fp>::from_ints({{1, 1}, {1, -1}});
  EXPECT_EQ(rank(m), 1u);
  EXPECT_EQ(rank(Mat<Q>::from_ints({{1, 1}, {1, -1}})), 2u);
}

TEST(Matrix, ProductAndTranspose) {
  auto a = Mat<Q>::from_ints({{1, 2}, {3, 4}});
  auto b = Mat<Q>::from_ints({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, Mat<Q>::from_ints({{2, 1}, {4, 3}}));
  EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
  EXPECT_EQ(a.trace(), Q::from_int(5));
}

TEST(Matrix, RowVectorConvention) {
  auto m = Mat<Q>::from_ints({{1, 2, 3}, {4, 5, 6}});
  Vec<Q> v{Q::from_int(1), Q::from_int(-1)};
  auto w = m.apply(v);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], Q::from_int(-3));
  EXPECT_EQ(w[2], Q::from_int(-3));
}

TEST(Matrix, BlocksAndStacks) {
  auto a = Mat<Q>::identity(2);
  auto b = Mat<Q>::from_ints({{7}});
  auto d = block_diag<Q>({a, b});
  EXPECT_EQ(d.rows(), 3u);
  EXPECT_EQ(d.block(2, 2, 1, 1), b);
  EXPECT_EQ(vstack(a, a).rows(), 4u);
  EXPECT_EQ(hstack(a, a).cols(), 4u);
  EXPECT_EQ(unflatten(flatten(d), 3, 3), d);
}

TEST(Matrix, RankNullityOnRandomLowRank) {
  std::mt19937 g(1);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 2 + t % 5, c = 2 + (t * 3) % 6, k = 1 + t % 3;
    auto m = low_rank(g, r, c, k);
    const auto rk = rank(m);
    EXPECT_LE(rk, k);
    auto kb = kernel_basis(m);
    EXPECT_EQ(kb.cols(), c - rk);
    EXPECT_TRUE((m * kb).is_zero());
    auto lk = left_kernel(m);
    EXPECT_EQ(lk.rows(), r - rk);
    EXPECT_TRUE((lk * m).is_zero());
  }
}

TEST(Matrix, RrefIsIdempotentAndRankPreserving) {
  std::mt19937 g(2);
  for (int t = 0; t < 20; ++t) {
    auto m = low_rank(g, 4, 5, 1 + t % 4);
    auto r1 = rref(m);
    EXPECT_EQ(rref(r1.reduced).reduced, r1.reduced);
    EXPECT_EQ(r1.pivots.size(), rank(m));
    EXPECT_EQ(r1.rank, rank(m));
  }
}

TEST(Matrix, SolveFindsSolutionsAndDetectsInconsistency) {
  std::mt19937 g(3);
  for (int t = 0; t < 30; ++t) {
    auto m = low_rank(g, 4, 4, 2 + t % 2);
    auto x = random_int_matrix(g, 4, 1).col(0);
    Vec<Q> mx(4, Q::from_int(0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) mx[i] += m(i, j) * x[j];
    auto sol = solve(m, mx);
    ASSERT_TRUE(sol.has_value());
    for (std::size_t i = 0; i < 4; ++i) {
      Q acc = Q::from_int(0);
      for (std::size_t j = 0; j < 4; ++j) acc += m(i, j) * (*sol)[j];
      EXPECT_EQ(acc, mx[i]);
    }
  }
  auto z = Mat<Q>::from_ints({{1, 1}, {2, 2}});
  EXPECT_FALSE(solve(z, Vec<Q>{Q::from_int(1), Q::from_int(0)}).has_value());
}

TEST(Matrix, InverseOfInvertible) {
  std::mt19937 g(4);
  int found = 0;
  for (int t = 0; t < 40 && found < 15; ++t) {
    auto m = random_int_matrix(g, 4, 4);
    if (rank(m) < 4) {
      EXPECT_THROW(inverse(m), DomainError);
      continue;
    }
    ++found;
    EXPECT_EQ(m * inverse(m), Mat<Q>::identity(4));
    EXPECT_EQ(inverse(m) * m, Mat<Q>::identity(4));
  }
  EXPECT_GT(found, 5);
}

TEST(Subspace, SpanContainsAndCoords) {
  std::vector<Vec<Q>> vs{{Q::from_int(1), Q::from_int(1), Q::from_int(0)},
                         {Q::from_int(0), Q::from_int(1), Q::from_int(1)},
                         {Q::from_int(1), Q::from_int(2), Q::from_int(1)}};
  auto s = Subspace<Q>::span(vs, 3);
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(vs[2]));
  EXPECT_FALSE(s.contains({Q::from_int(1), Q::from_int(0), Q::from_int(0)}));
  auto c = s.coords(vs[2]);
  Vec<Q> back(3, Q::from_int(0));
  for (std::size_t i = 0; i < c.size(); ++i) axpy(back, c[i], s.basis()[i]);
  EXPECT_EQ(back, vs[2]);
  EXPECT_FALSE(s.extend(vs[0]));
  EXPECT_TRUE(s.extend({Q::from_int(0), Q::from_int(0), Q::from_int(1)}));
  EXPECT_EQ(s.dim(), 3u);
}

TEST(Subspace, QuotientDimensionAndLift) {
  std::mt19937 g(5);
  for (int t = 0; t < 15; ++t) {
    auto m = low_rank(g, 3, 6, 1 + t % 3);
    Subspace<Q> w(m);
    QuotientSpace<Q> q(w);
    EXPECT_EQ(q.dim() + w.dim(), 6u);
    auto v = random_int_matrix(g, 1, 6).row(0);
    auto cv = q.coords(v);
    EXPECT_TRUE(w.contains(v - q.lift(cv)));
    for (const auto& b : w.basis()) EXPECT_TRUE(is_zero(q.coords(b)));
  }
}
