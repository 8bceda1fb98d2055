#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <optional>
#include <string>
#include <string_view>

#include "hyperarena/error.hpp"
#include "hyperarena/graph.hpp"
#include "hyperarena/hypertournament.hpp"
#include "hyperarena/paths.hpp"

namespace hyperarena {

// Why x and y fail to (1,2)-step compete, checked in this order.
enum class MissingCase {
  SinkX,     // N+(x) is empty
  SinkY,     // N+(y) is empty
  SoleOutY,  // N+(x) = {y}
  SoleOutX,  // N+(y) = {x}
  StarArc,   // A*{x,y} = {a}, N+_{T-a}(x) within {y}, N+_{T-a}(y) within {x}
  NotMissing,
};

inline constexpr std::array<MissingCase, 6> kAllMissingCases = {MissingCase::SinkX,    MissingCase::SinkY,
                                                                MissingCase::SoleOutY, MissingCase::SoleOutX,
                                                                MissingCase::StarArc,  MissingCase::NotMissing};

constexpr std::string_view to_string(MissingCase c) {
  switch (c) {
    case MissingCase::SinkX: return "SinkX";
    case MissingCase::SinkY: return "SinkY";
    case MissingCase::SoleOutY: return "SoleOutY";
    case MissingCase::SoleOutX: return "SoleOutX";
    case MissingCase::StarArc: return "StarArc";
    case MissingCase::NotMissing: return "NotMissing";
  }
  return "NotMissing";
}

struct MissingEdgeCase {
  MissingCase tag = MissingCase::NotMissing;
  std::optional<ArcId> witness_arc;

  friend bool operator==(const MissingEdgeCase&, const MissingEdgeCase&) = default;
};

// Common target z with an (x,z)-path avoiding y and a (y,z)-path avoiding x, arc-disjoint.
struct CompetitionWitness {
  VertexId target;
  HyperPath from_x;
  HyperPath from_y;
};

namespace detail {

inline void check_competitors(const Hypertournament& t, VertexId x, VertexId y) {
  if (static_cast<int>(x.index) >= t.n() || static_cast<int>(y.index) >= t.n())
    throw Error(ErrorCode::VertexOutOfRange, "competitor");
  if (x == y) throw Error(ErrorCode::SameVertex, "v" + std::to_string(x.label()));
}

inline void check_bounds(int i, int j) {
  if (i < 1 || j < 1) throw Error(ErrorCode::BadBound, "(i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")");
}

inline void require_hyper_arity(const Hypertournament& t) {
  if (t.k() < 3) throw Error(ErrorCode::ArityOutOfRange, "the missing-edge characterization needs 3 <= k <= n-1");
}

}  // namespace detail

// First witness in the order: target z ascending, then the (x,z)-path in
// for_each_path order, then the least admissible (y,z)-path.
inline std::optional<CompetitionWitness> competition_witness(const Hypertournament& t, VertexId x, VertexId y, int i, int j) {
  detail::check_competitors(t, x, y);
  detail::check_bounds(i, j);
  const int longest = std::max(i, j);
  ArcSet blocked(t.arc_count());
  std::optional<CompetitionWitness> found;
  for (int zi = 0; zi < t.n() && !found; ++zi) {
    const VertexId z(static_cast<std::uint32_t>(zi));
    if (z == x || z == y) continue;
    for_each_path(t, x, z, longest, VertexSet::single(y), nullptr, [&](const HyperPath& p) {
      const int lp = static_cast<int>(p.length());
      int q_bound = 0;
      if (lp <= i) q_bound = std::max(q_bound, j);
      if (lp <= j) q_bound = std::max(q_bound, i);
      if (q_bound < 1) return false;
      for (ArcId a : p.arcs) blocked.insert(a);
      auto q = find_path(t, y, z, q_bound, VertexSet::single(x), &blocked);
      for (ArcId a : p.arcs) blocked.erase(a);
      if (!q) return false;
      found = CompetitionWitness{z, p, std::move(*q)};
      return true;
    });
  }
  return found;
}

inline bool competes_by_definition(const Hypertournament& t, VertexId x, VertexId y, int i, int j) {
  return competition_witness(t, x, y, i, j).has_value();
}

inline MissingEdgeCase missing_edge_case_12(const Hypertournament& t, VertexId x, VertexId y) {
  detail::require_hyper_arity(t);
  detail::check_competitors(t, x, y);
  const VertexSet nx = t.out_neighbourhood(x);
  const VertexSet ny = t.out_neighbourhood(y);
  if (nx.empty()) return {MissingCase::SinkX, {}};
  if (ny.empty()) return {MissingCase::SinkY, {}};
  if (nx == VertexSet::single(y)) return {MissingCase::SoleOutY, {}};
  if (ny == VertexSet::single(x)) return {MissingCase::SoleOutX, {}};

  std::vector<std::uint64_t> star;
  t.star_words(x, y, star);
  std::optional<ArcId> only;
  for (std::size_t w = 0; w < star.size(); ++w) {
    if (!star[w]) continue;
    if (only || std::popcount(star[w]) != 1) return {MissingCase::NotMissing, {}};
    only = static_cast<ArcId>(w * 64 + static_cast<std::size_t>(std::countr_zero(star[w])));
  }
  if (only && t.out_excluding(x, *only).subset_of(VertexSet::single(y)) &&
      t.out_excluding(y, *only).subset_of(VertexSet::single(x)))
    return {MissingCase::StarArc, only};
  return {MissingCase::NotMissing, {}};
}

// C_{i,j}(T) straight from the definition.
inline SimpleGraph competition_graph(const Hypertournament& t, int i, int j) {
  detail::check_bounds(i, j);
  SimpleGraph g(t.n());
  for (int a = 0; a < t.n(); ++a)
    for (int b = a + 1; b < t.n(); ++b) {
      const VertexId x(static_cast<std::uint32_t>(a)), y(static_cast<std::uint32_t>(b));
      if (competes_by_definition(t, x, y, i, j)) g.add_edge(x, y);
    }
  return g;
}

// C_{1,2}(T) from the missing-edge characterization; requires k >= 3.
inline SimpleGraph competition_graph_12_fast(const Hypertournament& t) {
  detail::require_hyper_arity(t);
  SimpleGraph g(t.n());
  for (int a = 0; a < t.n(); ++a)
    for (int b = a + 1; b < t.n(); ++b) {
      const VertexId x(static_cast<std::uint32_t>(a)), y(static_cast<std::uint32_t>(b));
      if (missing_edge_case_12(t, x, y).tag == MissingCase::NotMissing) g.add_edge(x, y);
    }
  return g;
}

}  // namespace hyperarena
