#include <gtest/gtest.h>

#include <bit>
#include <cstdint>

#include "hyperarena/combinatorics.hpp"
#include "test_util.hpp"

using namespace hyperarena;
using hyperarena::testing::v;

TEST(Binomial, SmallValuesAndEdges) {
  EXPECT_EQ(binomial(5, 3), 10u);
  EXPECT_EQ(binomial(6, 3), 20u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ull);
  EXPECT_EQ(factorial(4), 24u);
}

TEST(SubsetRank, Endpoints) {
  EXPECT_EQ(subset_rank(5, 3, std::vector{v(1), v(2), v(3)}), 0u);
  EXPECT_EQ(subset_rank(5, 3, std::vector{v(3), v(4), v(5)}), 9u);
  EXPECT_EQ(subset_rank(5, 3, std::vector{v(5), v(3), v(4)}), 9u);  // order-insensitive
}

// Colex order on k-subsets of [0,n) is the numeric order of their bitmasks.
TEST(SubsetRank, MatchesBitmaskOrderOracle) {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      std::uint64_t expected = 0;
      for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<VertexId> s;
        for (int b = 0; b < n; ++b)
          if (mask >> b & 1) s.push_back(VertexId(static_cast<std::uint32_t>(b)));
        ASSERT_EQ(subset_rank(n, k, s), expected);
        ASSERT_EQ(subset_unrank(n, k, expected), s);
        ++expected;
      }
      ASSERT_EQ(expected, binomial(n, k));
    }
}

TEST(SubsetRank, RoundTripSixChooseThree) {
  for (std::uint64_t r = 0; r < binomial(6, 3); ++r) EXPECT_EQ(subset_rank(6, 3, subset_unrank(6, 3, r)), r);
}

TEST(SubsetRank, Errors) {
  try {
    subset_rank(5, 3, std::vector{v(1), v(2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadSubsetSize);
  }
  try {
    subset_rank(5, 3, std::vector{v(1), v(1), v(2)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadSubsetSize);
  }
  try {
    subset_unrank(5, 3, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankOutOfRange);
  }
}

TEST(Permutations, UnrankIsLexicographic) {
  std::vector<VertexId> sorted{v(1), v(2), v(3), v(4)};
  std::vector<VertexId> expected = sorted;
  for (std::uint64_t i = 0; i < factorial(4); ++i) {
    std::vector<VertexId> out(4);
    permutation_unrank(sorted, i, out);
    EXPECT_EQ(out, expected);
    EXPECT_EQ(permutation_rank(out), i);
    std::next_permutation(expected.begin(), expected.end());
  }
}

TEST(BigCounts, CheckedPowAndDecimal) {
  EXPECT_EQ(checked_pow(6, 10), 60466176u);
  EXPECT_EQ(checked_pow(24, 5), 7962624u);
  EXPECT_FALSE(checked_pow(6, 35).has_value());
  EXPECT_EQ(pow_decimal(6, 10), "60466176");
  EXPECT_EQ(pow_decimal(2, 64), "18446744073709551616");
  EXPECT_EQ(pow_decimal(10, 20), "100000000000000000000");
}
