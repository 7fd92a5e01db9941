#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace graver;
using testing_support::V;
using testing_support::vec;

TEST(Conforms, NonMinimalThreeByThreeTable) {
  const V u = vec({1, -1, 0, -1, 1, 0, 0, 0, 0});
  const V v = vec({1, -1, 0, -1, 3, -2, 0, -2, 2});
  EXPECT_TRUE(conforms(u, v));
  EXPECT_FALSE(conforms(v, u));
}

TEST(Conforms, SmallCases) {
  EXPECT_TRUE(conforms(vec({1, 0}), vec({2, -1})));
  EXPECT_FALSE(conforms(vec({1, 1}), vec({2, -1})));
  EXPECT_TRUE(conforms(vec({0, 0}), vec({-3, 4})));
  EXPECT_FALSE(conforms(vec({-1}), vec({1})));
  EXPECT_THROW(conforms(vec({1}), vec({1, 2})), DimensionError);
}

TEST(Conforms, PartialOrderLawsOnRandomVectors) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> e(-2, 2);
  auto draw = [&] {
    V v(4);
    for (auto& x : v) x = e(rng);
    return v;
  };
  for (int trial = 0; trial < 4000; ++trial) {
    const V a = draw(), b = draw(), c = draw();
    EXPECT_TRUE(conforms(a, a));
    if (conforms(a, b) && conforms(b, a)) EXPECT_EQ(a, b);
    if (conforms(a, b) && conforms(b, c)) EXPECT_TRUE(conforms(a, c));
    EXPECT_EQ(conforms(a, b), conforms(-a, -b));
    if (conforms(a, b)) EXPECT_TRUE(conforms(b - a, b));
  }
}

TEST(PosNegSplit, TableExample) {
  const auto [pos, neg] = pos_neg_split(vec({1, -1, 0, -1, 3, -2, 0, -2, 2}));
  EXPECT_EQ(pos, vec({1, 0, 0, 0, 3, 0, 0, 0, 2}));
  EXPECT_EQ(neg, vec({0, 1, 0, 1, 0, 2, 0, 2, 0}));
}

TEST(PosNegSplit, ReconstructsAndHasDisjointSupports) {
  const V v = vec({-4, 0, 7, -1});
  const auto [pos, neg] = pos_neg_split(v);
  EXPECT_EQ(pos - neg, v);
  for (std::size_t j = 0; j < v.size(); ++j) EXPECT_EQ(pos[j] * neg[j], 0);
}

TEST(PrefixNorm, SumsLeadingAbsoluteValues) {
  EXPECT_EQ(prefix_norm(vec({1, -2, 5}), 2), 3);
  EXPECT_EQ(prefix_norm(vec({1, -2, 5}), 3), 8);
  EXPECT_THROW(prefix_norm(vec({1, 2}), 0), DimensionError);
  EXPECT_THROW(prefix_norm(vec({1, 2}), 3), DimensionError);
}

TEST(SameOrthantPrefix, IgnoresTrailingEntries) {
  EXPECT_TRUE(same_orthant_prefix(vec({1, 0, -5}), vec({2, -1, 5}), 2));
  EXPECT_FALSE(same_orthant_prefix(vec({1, 0, -5}), vec({2, -1, 5}), 3));
  EXPECT_FALSE(same_orthant_prefix(vec({1, 1}), vec({-1, 1}), 1));
}

TEST(Norms, L1AndMax) {
  EXPECT_EQ(l1_norm(vec({3, -4, 0})), 7);
  EXPECT_EQ(max_norm(vec({3, -4, 0})), 4);
  EXPECT_EQ(max_norm(V(3)), 0);
}

TEST(CanonicalSign, FlipsOnFirstNonzero) {
  EXPECT_EQ(canonical_sign(vec({1, -1})), vec({1, -1}));
  EXPECT_EQ(canonical_sign(vec({-1, 1})), vec({1, -1}));
  EXPECT_EQ(canonical_sign(vec({0, -2, 3})), vec({0, 2, -3}));
  EXPECT_EQ(canonical_sign(-vec({0, -2, 3})), canonical_sign(vec({0, -2, 3})));
  EXPECT_THROW(canonical_sign(V(2)), DomainError);
}

TEST(IntVector, ArithmeticAndOrder) {
  EXPECT_EQ(vec({1, 2}) + vec({3, -4}), vec({4, -2}));
  EXPECT_EQ(vec({1, 2}) - vec({3, -4}), vec({-2, 6}));
  EXPECT_LT(vec({0, 5}), vec({1, -5}));
  EXPECT_THROW(vec({1}) + vec({1, 2}), DimensionError);
}

TEST(IntVector, CheckedArithmeticThrowsOnOverflow) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(vec({big}) + vec({1}), OverflowError);
  EXPECT_THROW(-vec({std::numeric_limits<std::int64_t>::min()}), OverflowError);
  const IntVector<BigInt> b({BigInt(big)});
  EXPECT_EQ((b + b)[0], BigInt(big) * 2);
}

TEST(IntVector, CastBetweenScalars) {
  const IntVector<BigInt> huge({BigInt("100000000000000000000")});
  EXPECT_THROW(vector_cast<std::int64_t>(huge), OverflowError);
  EXPECT_EQ(vector_cast<std::int64_t>(IntVector<BigInt>({BigInt(-3)})), vec({-3}));
}
