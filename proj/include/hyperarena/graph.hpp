#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperarena/error.hpp"
#include "hyperarena/sets.hpp"

namespace hyperarena {

// Undirected edge, normalized so that u < v.
struct Edge {
  VertexId u;
  VertexId v;

  static constexpr Edge of(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  constexpr bool touches(VertexId w) const { return u == w || v == w; }
  constexpr bool disjoint_from(const Edge& o) const { return !touches(o.u) && !touches(o.v); }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph (symmetric, irreflexive) on at most 64 vertices.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > kMaxVertices) throw Error(ErrorCode::VertexCountOutOfRange, "n=" + std::to_string(n));
  }

  static SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.adj_[static_cast<std::size_t>(i)] = VertexSet::all(n).without(VertexSet::single(VertexId(static_cast<std::uint32_t>(i))));
    return g;
  }

  int n() const { return n_; }

  bool has_edge(VertexId a, VertexId b) const { return a != b && adj_[a.index].contains(b); }

  void add_edge(VertexId a, VertexId b) {
    check(a, b);
    adj_[a.index].insert(b);
    adj_[b.index].insert(a);
  }
  void remove_edge(VertexId a, VertexId b) {
    check(a, b);
    adj_[a.index].erase(b);
    adj_[b.index].erase(a);
  }

  VertexSet neighbours(VertexId v) const { return adj_[v.index]; }
  int degree(VertexId v) const { return adj_[v.index].size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto s : adj_) twice += static_cast<std::size_t>(s.size());
    return twice / 2;
  }

  // Sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < n_; ++i) {
      const VertexId a(static_cast<std::uint32_t>(i));
      adj_[a.index].for_each([&](VertexId b) {
        if (a < b) out.push_back({a, b});
      });
    }
    return out;
  }

  bool subgraph_of(const SimpleGraph& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t i = 0; i < adj_.size(); ++i)
      if (!adj_[i].subset_of(o.adj_[i])) return false;
    return true;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check(VertexId a, VertexId b) const {
    if (static_cast<int>(a.index) >= n_ || static_cast<int>(b.index) >= n_) throw Error(ErrorCode::VertexOutOfRange, "edge endpoint");
    if (a == b) throw Error(ErrorCode::SameVertex, "self-loop at v" + std::to_string(a.label()));
  }

  int n_;
  std::vector<VertexSet> adj_;
};

inline SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph c(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) {
      const VertexId a(static_cast<std::uint32_t>(i)), b(static_cast<std::uint32_t>(j));
      if (!g.has_edge(a, b)) c.add_edge(a, b);
    }
  return c;
}

enum class ShapeTag {
  Complete,
  CompleteMinusP2,
  CompleteMinusP3,
  CompleteMinusTriangle,
  CliquePlusIsolated,
  Other,
};

inline constexpr std::array<ShapeTag, 6> kAllShapeTags = {ShapeTag::Complete,           ShapeTag::CompleteMinusP2,
                                                          ShapeTag::CompleteMinusP3,    ShapeTag::CompleteMinusTriangle,
                                                          ShapeTag::CliquePlusIsolated, ShapeTag::Other};

constexpr std::string_view to_string(ShapeTag t) {
  switch (t) {
    case ShapeTag::Complete: return "Complete";
    case ShapeTag::CompleteMinusP2: return "CompleteMinusP2";
    case ShapeTag::CompleteMinusP3: return "CompleteMinusP3";
    case ShapeTag::CompleteMinusTriangle: return "CompleteMinusTriangle";
    case ShapeTag::CliquePlusIsolated: return "CliquePlusIsolated";
    case ShapeTag::Other: return "Other";
  }
  return "Other";
}

inline std::optional<ShapeTag> shape_tag_from_string(std::string_view s) {
  for (ShapeTag t : kAllShapeTags)
    if (to_string(t) == s) return t;
  return std::nullopt;
}

struct ShapeClass {
  ShapeTag tag = ShapeTag::Other;
  std::vector<Edge> missing_edges;
  std::optional<VertexId> isolated_vertex;

  friend bool operator==(const ShapeClass&, const ShapeClass&) = default;
};

// Exact edge-count rules take precedence over the star rule, so n = 2 with one
// missing edge is CompleteMinusP2 and n = 3 with two is CompleteMinusP3.
inline ShapeClass classify_shape(const SimpleGraph& g) {
  const SimpleGraph c = complement(g);
  ShapeClass out;
  out.missing_edges = c.edges();
  const auto& m = out.missing_edges;
  if (m.empty()) {
    out.tag = ShapeTag::Complete;
  } else if (m.size() == 1) {
    out.tag = ShapeTag::CompleteMinusP2;
  } else if (m.size() == 2 && !m[0].disjoint_from(m[1])) {
    out.tag = ShapeTag::CompleteMinusP3;
  } else if (m.size() == 3 && (VertexSet{m[0].u, m[0].v, m[1].u, m[1].v, m[2].u, m[2].v}).size() == 3) {
    out.tag = ShapeTag::CompleteMinusTriangle;
  } else {
    out.tag = ShapeTag::Other;
    if (static_cast<int>(m.size()) == g.n() - 1) {
      for (int i = 0; i < g.n(); ++i) {
        const VertexId v(static_cast<std::uint32_t>(i));
        if (c.degree(v) == g.n() - 1) {
          out.tag = ShapeTag::CliquePlusIsolated;
          out.isolated_vertex = v;
          break;
        }
      }
    }
  }
  return out;
}

// Lexicographically least pair of vertex-disjoint edges.
inline std::optional<std::pair<Edge, Edge>> has_disjoint_edge_pair(const SimpleGraph& g) {
  const auto es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (es[i].disjoint_from(es[j])) return std::pair{es[i], es[j]};
  return std::nullopt;
}

// Lexicographically least triangle a < b < c.
inline std::optional<std::array<VertexId, 3>> has_triangle(const SimpleGraph& g) {
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b) {
      const VertexId va(static_cast<std::uint32_t>(a)), vb(static_cast<std::uint32_t>(b));
      if (!g.has_edge(va, vb)) continue;
      const VertexSet common = g.neighbours(va) & g.neighbours(vb);
      const std::uint64_t above = common.bits() & ~((std::uint64_t{2} << b) - 1);
      if (above) return std::array{va, vb, VertexId(static_cast<std::uint32_t>(std::countr_zero(above)))};
    }
  return std::nullopt;
}

struct Claw {
  VertexId center;
  std::array<VertexId, 3> leaves;

  friend bool operator==(const Claw&, const Claw&) = default;
};

// K_{1,3} as a (not necessarily induced) subgraph: least center, then its three least neighbours.
inline std::optional<Claw> has_claw(const SimpleGraph& g) {
  for (int i = 0; i < g.n(); ++i) {
    const VertexId c(static_cast<std::uint32_t>(i));
    if (g.degree(c) < 3) continue;
    auto nb = g.neighbours(c).to_vector();
    return Claw{c, {nb[0], nb[1], nb[2]}};
  }
  return std::nullopt;
}

}  // namespace hyperarena
