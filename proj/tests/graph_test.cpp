#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "hyperarena/hyperarena.hpp"
#include "test_util.hpp"

using namespace hyperarena;
using namespace hyperarena::testing;

TEST(SimpleGraph, Basics) {
  auto g = graph_from_edges(4, {{1, 2}, {3, 2}, {1, 4}});
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(v(2), v(3)));
  EXPECT_FALSE(g.has_edge(v(1), v(1)));
  EXPECT_EQ(g.degree(v(1)), 2);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{v(1), v(2)}, {v(1), v(4)}, {v(2), v(3)}}));
  EXPECT_THROW(g.add_edge(v(2), v(2)), Error);
  EXPECT_THROW(g.add_edge(v(1), v(5)), Error);
  EXPECT_EQ(complement(complement(g)), g);
  EXPECT_EQ(complement(SimpleGraph::complete(6)).edge_count(), 0u);
  EXPECT_EQ(SimpleGraph::complete(6).edge_count(), 15u);
}

TEST(Classify, Palette) {
  EXPECT_EQ(classify_shape(SimpleGraph::complete(5)).tag, ShapeTag::Complete);
  EXPECT_EQ(classify_shape(complete_minus(5, {{4, 5}})).tag, ShapeTag::CompleteMinusP2);
  auto p3 = classify_shape(complete_minus(5, {{2, 3}, {1, 2}}));
  EXPECT_EQ(p3.tag, ShapeTag::CompleteMinusP3);
  EXPECT_EQ(p3.missing_edges, (std::vector<Edge>{{v(1), v(2)}, {v(2), v(3)}}));
  EXPECT_EQ(classify_shape(complete_minus(5, {{1, 2}, {2, 3}, {1, 3}})).tag, ShapeTag::CompleteMinusTriangle);
  auto iso = classify_shape(complete_minus(5, {{3, 1}, {3, 2}, {3, 4}, {3, 5}}));
  EXPECT_EQ(iso.tag, ShapeTag::CliquePlusIsolated);
  EXPECT_EQ(iso.isolated_vertex, v(3));
  EXPECT_EQ(classify_shape(complete_minus(5, {{1, 2}, {3, 4}})).tag, ShapeTag::Other);
  EXPECT_EQ(classify_shape(complete_minus(5, {{1, 2}, {1, 3}, {1, 4}})).tag, ShapeTag::Other);
}

TEST(Classify, SmallOrders) {
  // Exact edge-count rules win over the isolated-vertex rule.
  EXPECT_EQ(classify_shape(SimpleGraph(2)).tag, ShapeTag::CompleteMinusP2);
  EXPECT_EQ(classify_shape(graph_from_edges(3, {{1, 2}})).tag, ShapeTag::CompleteMinusP3);
  EXPECT_EQ(classify_shape(SimpleGraph(3)).tag, ShapeTag::CompleteMinusTriangle);
  auto four = classify_shape(graph_from_edges(4, {{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(four.tag, ShapeTag::CliquePlusIsolated);
  EXPECT_EQ(four.isolated_vertex, v(4));
  EXPECT_EQ(classify_shape(SimpleGraph(1)).tag, ShapeTag::Complete);
}

TEST(Detectors, Witnesses) {
  auto g = graph_from_edges(6, {{2, 3}, {4, 5}, {1, 2}, {5, 6}});
  auto pair = has_disjoint_edge_pair(g);
  ASSERT_TRUE(pair);
  EXPECT_EQ(pair->first, (Edge{v(1), v(2)}));
  EXPECT_EQ(pair->second, (Edge{v(4), v(5)}));
  EXPECT_FALSE(has_disjoint_edge_pair(graph_from_edges(5, {{1, 2}, {1, 3}, {2, 3}})));

  EXPECT_FALSE(has_triangle(g));
  auto tri = has_triangle(graph_from_edges(6, {{6, 4}, {4, 5}, {5, 6}, {1, 2}, {2, 3}, {1, 3}}));
  ASSERT_TRUE(tri);
  EXPECT_EQ(*tri, (std::array{v(1), v(2), v(3)}));

  EXPECT_FALSE(has_claw(g));
  auto claw = has_claw(graph_from_edges(6, {{3, 6}, {3, 1}, {3, 5}, {3, 4}}));
  ASSERT_TRUE(claw);
  EXPECT_EQ(claw->center, v(3));
  EXPECT_EQ(claw->leaves, (std::array{v(1), v(4), v(5)}));
  // Not necessarily induced: K4 contains a claw.
  EXPECT_TRUE(has_claw(SimpleGraph::complete(4)));
}

// Brute-force detectors over all vertex tuples, compared on every graph of order 5.
TEST(Detectors, ExhaustiveOrderFive) {
  const int n = 5;
  std::vector<Edge> all;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) all.push_back({v(a), v(b)});
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    SimpleGraph g(n);
    for (std::size_t e = 0; e < all.size(); ++e)
      if (mask >> e & 1u) g.add_edge(all[e].u, all[e].v);
    bool pair = false, tri = false, claw = false;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (int c = 1; c <= n; ++c)
          for (int d = 1; d <= n; ++d) {
            if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
            pair = pair || (g.has_edge(v(a), v(b)) && g.has_edge(v(c), v(d)));
            claw = claw || (g.has_edge(v(a), v(b)) && g.has_edge(v(a), v(c)) && g.has_edge(v(a), v(d)));
          }
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        for (int c = b + 1; c <= n; ++c)
          tri = tri || (g.has_edge(v(a), v(b)) && g.has_edge(v(b), v(c)) && g.has_edge(v(a), v(c)));
    ASSERT_EQ(has_disjoint_edge_pair(g).has_value(), pair);
    ASSERT_EQ(has_triangle(g).has_value(), tri);
    ASSERT_EQ(has_claw(g).has_value(), claw);
  }
}

TEST(Classify, LabelInvariance) {
  std::vector<SimpleGraph> samples{SimpleGraph::complete(5), complete_minus(5, {{4, 5}}), complete_minus(5, {{1, 2}, {2, 3}}),
                                   complete_minus(5, {{1, 2}, {2, 3}, {1, 3}}), complete_minus(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}),
                                   complete_minus(5, {{1, 2}, {3, 4}})};
  std::vector<int> perm(5);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (const auto& g : samples) {
      SimpleGraph h(5);
      for (const Edge& e : g.edges()) h.add_edge(VertexId(static_cast<std::uint32_t>(perm[e.u.index])), VertexId(static_cast<std::uint32_t>(perm[e.v.index])));
      EXPECT_EQ(classify_shape(h).tag, classify_shape(g).tag);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(ShapeTag, Names) {
  for (ShapeTag t : kAllShapeTags) EXPECT_EQ(shape_tag_from_string(to_string(t)), t);
  EXPECT_FALSE(shape_tag_from_string("K5"));
}
