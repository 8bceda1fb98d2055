#include <gtest/gtest.h>

#include <set>

#include "hyperarena/hyperarena.hpp"
#include "test_util.hpp"

using namespace hyperarena;
using namespace hyperarena::testing;

namespace {

std::size_t arcs_differing(const Hypertournament& a, const Hypertournament& b) {
  std::size_t d = 0;
  for (ArcId r = 0; r < a.arc_count(); ++r)
    if (!std::equal(a.arc(r).begin(), a.arc(r).end(), b.arc(r).begin())) ++d;
  return d;
}

// Pearson statistic against the uniform distribution.
double chi_square(const std::vector<std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  double s = 0;
  for (auto c : counts) s += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  return s;
}

}  // namespace

TEST(Transitive, Arcs) {
  auto t = transitive(4, 3);
  EXPECT_EQ(t.arcs(), arcs({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}));
  EXPECT_FALSE(is_strong(t));
  EXPECT_TRUE(transitive(4, 2).tournament_mode());
  EXPECT_THROW(transitive(4, 4), Error);
  EXPECT_THROW(transitive(4, 1), Error);
}

TEST(Figures, MatchPrintedLists) {
  EXPECT_EQ(t1(5, 3, ReplacedArcOrientation::Figure), Hypertournament::build(5, 3, fixture_t1()));
  EXPECT_EQ(t2(5, 3, ReplacedArcOrientation::Figure), Hypertournament::build(5, 3, fixture_t2()));
  EXPECT_EQ(t3(5, 3), Hypertournament::build(5, 3, fixture_t3()));
  auto text = t1(5, 3);
  EXPECT_EQ(text.arc(arc_id(5, {1, 2, 5}))[0], v(5));
  EXPECT_EQ(text.arc(arc_id(5, {1, 2, 5}))[1], v(2));
  EXPECT_EQ(text.arc(arc_id(5, {1, 2, 5}))[2], v(1));
}

TEST(Figures, ReplacedArcCounts) {
  for (int n = 4; n <= 8; ++n)
    for (int k = 3; k <= n - 1; ++k) {
      auto tr = transitive(n, k);
      EXPECT_EQ(arcs_differing(tr, t1(n, k)), 1u);
      EXPECT_EQ(arcs_differing(tr, t2(n, k)), 2u);
      EXPECT_EQ(arcs_differing(tr, t1(n, k, ReplacedArcOrientation::Figure)), 1u);
      EXPECT_TRUE(is_strong(t1(n, k)));
      EXPECT_TRUE(is_strong(t2(n, k)));
      EXPECT_TRUE(is_strong(t3(n, k)));
    }
}

TEST(Figures, T3Rules) {
  auto t = t3(7, 4);
  for (ArcId a = 0; a < t.arc_count(); ++a) {
    auto s = t.arc(a);
    std::vector<VertexId> seq(s.begin(), s.end());
    auto in = [&](int l) { return std::find(seq.begin(), seq.end(), v(l)) != seq.end(); };
    std::vector<VertexId> tail;
    if (in(1) && in(2))
      tail = {v(1), v(2)};
    else if (in(1))
      tail = {v(1)};
    else if (in(2) && in(3))
      tail = {v(2), v(3)};
    else if (in(2))
      tail = {v(2)};
    const auto head_end = seq.end() - static_cast<std::ptrdiff_t>(tail.size());
    EXPECT_TRUE(std::equal(head_end, seq.end(), tail.begin()));
    EXPECT_TRUE(std::is_sorted(seq.begin(), head_end));
  }
}

TEST(Random, DeterministicPerSeed) {
  EXPECT_EQ(kRandomGeneratorName, "mt19937_64/fisher-yates/v1");
  for (std::uint64_t seed : {0ull, 1ull, 42ull, 1ull << 40}) {
    EXPECT_EQ(random_hypertournament(6, 4, seed), random_hypertournament(6, 4, seed));
  }
  EXPECT_NE(random_hypertournament(6, 4, 1), random_hypertournament(6, 4, 2));
  // Frozen from tests/oracles/random_oracle.py; catches platform or library drift.
  EXPECT_EQ(random_hypertournament(5, 3, 7).arcs(), arcs({{2, 3, 1}, {2, 4, 1}, {4, 1, 3}, {3, 4, 2}, {2, 5, 1}, {1, 5, 3}, {3, 5, 2}, {5, 4, 1}, {2, 4, 5}, {4, 5, 3}}));
}

TEST(Random, UniformAndIndependent) {
  // 10^5 draws on four vertices: each subset's order is uniform over 3! and the
  // first two subsets are jointly uniform over 36 cells. Critical values at p = 0.001.
  const int draws = 100000;
  std::vector<std::vector<std::uint64_t>> single(4, std::vector<std::uint64_t>(6));
  std::vector<std::uint64_t> joint(36);
  std::vector<std::uint64_t> quad(24);
  for (int s = 0; s < draws; ++s) {
    auto t = random_hypertournament(4, 3, static_cast<std::uint64_t>(s));
    std::uint64_t r[4];
    for (ArcId a = 0; a < 4; ++a) ++single[a][r[a] = permutation_rank(t.arc(a))];
    ++joint[r[0] * 6 + r[1]];
    ++quad[permutation_rank(random_hypertournament(5, 4, static_cast<std::uint64_t>(s) + (1ull << 32)).arc(3))];
  }
  for (const auto& c : single) EXPECT_LT(chi_square(c), 20.515);
  EXPECT_LT(chi_square(joint), 66.619);
  EXPECT_LT(chi_square(quad), 49.728);
}

TEST(Enumeration, Counts) {
  EXPECT_EQ(enumerate_all(4, 3).size(), 1296u);
  EXPECT_EQ(enumerate_all(5, 4).size(), 7962624u);
  EXPECT_EQ(enumerate_all(4, 2).size(), 64u);
  // The default budget of 10^8 admits (5,3); a tighter one rejects it with the exact count.
  try {
    enumerate_all(5, 3, 10'000'000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    EXPECT_NE(std::string(e.what()).find("60466176"), std::string::npos);
  }
  try {
    enumerate_all(7, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("1719070799748422591028658176"), std::string::npos);
  }
  EXPECT_EQ(enumerate_all(5, 3).size(), 60466176u);
  EXPECT_EQ(enumerate_all(5, 3, 60466176).size(), 60466176u);
  EXPECT_THROW(enumerate_all(5, 3, 60466175), Error);
  EXPECT_THROW(enumerate_all(6, 3), Error);
}

TEST(Enumeration, OrderAndDistinctness) {
  auto e = enumerate_all(4, 3);
  EXPECT_EQ(e.at(0), transitive(4, 3));
  EXPECT_EQ(e.at(e.size() - 1).arcs(), arcs({{3, 2, 1}, {4, 2, 1}, {4, 3, 1}, {4, 3, 2}}));
  // The last subset varies fastest.
  EXPECT_EQ(e.at(1).arcs(), arcs({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 4, 3}}));
  EXPECT_EQ(e.digits(6), (std::vector<std::uint64_t>{0, 0, 1, 0}));
  std::set<std::vector<std::vector<VertexId>>> seen;
  e.for_each([&](std::uint64_t index, const Hypertournament& t) {
    EXPECT_EQ(t, e.at(index));
    EXPECT_EQ(enumeration_index(t), index);
    seen.insert(t.arcs());
  });
  EXPECT_EQ(seen.size(), 1296u);
  EXPECT_THROW(e.at(1296), Error);
}

TEST(Enumeration, RangesAgreeWithRandomAccess) {
  auto e = enumerate_all(5, 4);
  const std::uint64_t start = 3'000'000;
  e.for_each(start, start + 500, [&](std::uint64_t index, const Hypertournament& t) { ASSERT_EQ(t, e.at(index)); });
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto t = random_hypertournament(5, 4, seed);
    EXPECT_EQ(e.at(enumeration_index(t)), t);
  }
}
