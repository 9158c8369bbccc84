// Copyright 2026 The mosp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "mosp/core.hpp"
#include "test_util.hpp"

namespace mosp {
namespace {

TEST(WeaklyDominates, Examples) {
  EXPECT_TRUE(weaklyDominates(CostVector{1, 2, 3}, CostVector{1, 2, 3}));
  EXPECT_TRUE(weaklyDominates(CostVector{5, 6, 8}, CostVector{7, 8, 8}));
  EXPECT_TRUE(weaklyDominates(CostVector{9, 4}, CostVector{9, 5}));
  EXPECT_FALSE(weaklyDominates(CostVector{9, 5}, CostVector{9, 4}));
}

TEST(WeaklyDominates, LengthMismatchThrows) {
  EXPECT_THROW((weaklyDominates(CostVector{1, 2}, CostVector{1, 2, 3})), DimensionError);
  EXPECT_THROW((dominates(CostVector{1, 2}, CostVector{1, 2, 3})), DimensionError);
  EXPECT_THROW((lexCompare(CostVector{1}, CostVector{1, 2})), DimensionError);
}

TEST(Dominates, Examples) {
  EXPECT_FALSE(dominates(CostVector{1, 2}, CostVector{1, 2}));
  EXPECT_TRUE(dominates(CostVector{6, 8}, CostVector{7, 9}));
  EXPECT_FALSE(dominates(CostVector{3, 1}, CostVector{1, 3}));
  EXPECT_FALSE(dominates(CostVector{1, 3}, CostVector{3, 1}));
}

TEST(Truncate, DropsLeadingEntries) {
  const CostVector f{4, 7, 8, 8};
  const TruncatedVector once = truncate(f);
  EXPECT_EQ(once.values, (CostVector{7, 8, 8}));
  EXPECT_EQ(once.lambda, 1);
  EXPECT_EQ(once.primaryIndex(), 1u);

  const TruncatedVector twice = truncate(f, 2);
  EXPECT_EQ(twice.values, (CostVector{8, 8}));
  EXPECT_EQ(twice, truncate(once));

  const TruncatedVector thrice = truncate(f, 3);
  EXPECT_EQ(thrice.values, (CostVector{8}));
  EXPECT_EQ(thrice.size(), 1u);
  EXPECT_EQ(thrice.lambda, 3);
}

TEST(Truncate, ScalarCannotBeTruncated) {
  EXPECT_THROW((truncate(CostVector{8})), DimensionError);
  EXPECT_THROW((truncate(truncate(CostVector{1, 2}))), DimensionError);
  EXPECT_THROW((truncate(CostVector{1, 2}, 2)), DimensionError);
}

TEST(LexCompare, Examples) {
  EXPECT_EQ(lexCompare(CostVector{4, 7, 8, 8}, CostVector{5, 5, 9, 4}), std::strong_ordering::less);
  EXPECT_EQ(lexCompare(CostVector{1, 2}, CostVector{1, 2}), std::strong_ordering::equal);
  EXPECT_EQ(lexCompare(CostVector{2, 0}, CostVector{1, 9}), std::strong_ordering::greater);
}

TEST(CostVector, ArithmeticAndPrinting) {
  CostVector a{1, 2, 3};
  a += CostVector{10, 20, 30};
  EXPECT_EQ(a, (CostVector{11, 22, 33}));
  EXPECT_EQ(a.toString(), "(11,22,33)");
  EXPECT_EQ(CostVector::zeros(3), (CostVector{0, 0, 0}));
  EXPECT_THROW((a += CostVector{1, 2}), DimensionError);
}

class DominanceProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(DominanceProperties, RelationLaws) {
  const std::size_t k = GetParam();
  std::mt19937_64 rng(1000 + k);
  for (int trial = 0; trial < 3000; ++trial) {
    // small entries so that dominance and ties actually occur
    const CostVector a = testing::randomVector(rng, k, 3);
    const CostVector b = testing::randomVector(rng, k, 3);
    const CostVector c = testing::randomVector(rng, k, 3);

    EXPECT_TRUE(weaklyDominates(a, a));
    EXPECT_FALSE(dominates(a, a));
    if (dominates(a, b)) EXPECT_TRUE(weaklyDominates(a, b));
    if (weaklyDominates(a, b) && weaklyDominates(b, a)) EXPECT_EQ(a, b);
    if (weaklyDominates(a, b) && weaklyDominates(b, c)) EXPECT_TRUE(weaklyDominates(a, c));
    if (dominates(a, b) && dominates(b, c)) EXPECT_TRUE(dominates(a, c));
    // a dominator is lexicographically smaller
    if (dominates(a, b)) EXPECT_TRUE(lexLess(a, b));

    const auto ab = lexCompare(a, b);
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_EQ(ab < 0, lexCompare(b, a) > 0);
    if (lexLess(a, b) && lexLess(b, c)) EXPECT_TRUE(lexLess(a, c));
  }
}

TEST_P(DominanceProperties, TruncationLaws) {
  const std::size_t k = GetParam();
  std::mt19937_64 rng(2000 + k);
  for (int trial = 0; trial < 1000; ++trial) {
    const CostVector v = testing::randomVector(rng, k, 100);
    const CostVector w = testing::randomVector(rng, k, 100);
    for (std::size_t lambda = 1; lambda < k; ++lambda) {
      const TruncatedVector t = truncate(v, lambda);
      ASSERT_EQ(t.size(), k - lambda);
      EXPECT_EQ(t.lambda, lambda);
      for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(t[i], v[i + lambda]);
      // weak dominance survives truncation
      if (weaklyDominates(v, w)) EXPECT_TRUE(weaklyDominates(t, truncate(w, lambda)));
    }
    CostVector scratch;
    detail::truncateInto(v, scratch);
    EXPECT_EQ(scratch, truncate(v).values);
  }
}

INSTANTIATE_TEST_SUITE_P(AllWidths, DominanceProperties, ::testing::Range<std::size_t>(2, 9));

}  // namespace
}  // namespace mosp
