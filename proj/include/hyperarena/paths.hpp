#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperarena/digraph.hpp"
#include "hyperarena/error.hpp"
#include "hyperarena/hypertournament.hpp"
#include "hyperarena/sets.hpp"

namespace hyperarena {

// v_1 a_1 v_2 ... a_{t-1} v_t with distinct vertices and distinct arcs.
struct HyperPath {
  std::vector<VertexId> vertices;
  std::vector<ArcId> arcs;

  std::size_t length() const { return arcs.size(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }

  friend bool operator==(const HyperPath&, const HyperPath&) = default;
};

enum class PathDefect {
  None,
  Empty,
  ArcCountMismatch,
  VertexOutOfRange,
  UnknownArc,
  RepeatedVertex,
  RepeatedArc,
  NotPreceding,
};

constexpr std::string_view to_string(PathDefect d) {
  switch (d) {
    case PathDefect::None: return "None";
    case PathDefect::Empty: return "Empty";
    case PathDefect::ArcCountMismatch: return "ArcCountMismatch";
    case PathDefect::VertexOutOfRange: return "VertexOutOfRange";
    case PathDefect::UnknownArc: return "UnknownArc";
    case PathDefect::RepeatedVertex: return "RepeatedVertex";
    case PathDefect::RepeatedArc: return "RepeatedArc";
    case PathDefect::NotPreceding: return "NotPreceding";
  }
  return "Unknown";
}

struct PathCheck {
  PathDefect defect = PathDefect::None;
  explicit operator bool() const { return defect == PathDefect::None; }
};

inline PathCheck is_valid_path(const Hypertournament& t, const HyperPath& p) {
  if (p.vertices.empty()) return {PathDefect::Empty};
  if (p.arcs.size() + 1 != p.vertices.size()) return {PathDefect::ArcCountMismatch};
  VertexSet seen;
  for (VertexId v : p.vertices) {
    if (static_cast<int>(v.index) >= t.n()) return {PathDefect::VertexOutOfRange};
    if (seen.contains(v)) return {PathDefect::RepeatedVertex};
    seen.insert(v);
  }
  std::vector<ArcId> sorted = p.arcs;
  std::sort(sorted.begin(), sorted.end());
  for (ArcId a : sorted)
    if (a >= t.arc_count()) return {PathDefect::UnknownArc};
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {PathDefect::RepeatedArc};
  for (std::size_t i = 0; i < p.arcs.size(); ++i)
    if (!t.dominated_in(p.arcs[i], p.vertices[i]).contains(p.vertices[i + 1])) return {PathDefect::NotPreceding};
  return {};
}

namespace detail {

// Enumerates (from,to)-paths of exactly `len` arcs: vertex sequences in lexicographic
// order, and for each vertex sequence the arc sequences in lexicographic order.
template <typename Visit>
class PathEnumerator {
 public:
  PathEnumerator(const Hypertournament& t, VertexId to, VertexSet forbidden_vertices, const ArcSet* forbidden_arcs,
                 std::size_t len, Visit& visit)
      : t_(t), to_(to), forbidden_(forbidden_vertices), blocked_(forbidden_arcs), len_(len), visit_(visit) {}

  bool run(VertexId from) {
    path_.vertices.assign(1, from);
    path_.arcs.clear();
    return extend(VertexSet::single(from) | forbidden_);
  }

 private:
  bool has_usable_arc(VertexId u, VertexId v) const {
    auto words = t_.precedence_words(u, v);
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint64_t bits = words[w];
      if (blocked_) bits &= ~blocked_->words()[w];
      if (bits) return true;
    }
    return false;
  }

  bool extend(VertexSet used) {
    const VertexId u = path_.vertices.back();
    const std::size_t steps = path_.vertices.size() - 1;
    if (steps + 1 == len_) {
      if (!has_usable_arc(u, to_)) return false;
      path_.vertices.push_back(to_);
      bool stop = assign_arcs(0);
      path_.vertices.pop_back();
      return stop;
    }
    for (int i = 0; i < t_.n(); ++i) {
      const VertexId v(static_cast<std::uint32_t>(i));
      if (v == to_ || used.contains(v) || !has_usable_arc(u, v)) continue;
      path_.vertices.push_back(v);
      bool stop = extend(used | VertexSet::single(v));
      path_.vertices.pop_back();
      if (stop) return true;
    }
    return false;
  }

  bool assign_arcs(std::size_t step) {
    if (step == len_) return visit_(static_cast<const HyperPath&>(path_));
    auto words = t_.precedence_words(path_.vertices[step], path_.vertices[step + 1]);
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint64_t bits = words[w];
      if (blocked_) bits &= ~blocked_->words()[w];
      for (; bits; bits &= bits - 1) {
        const auto a = static_cast<ArcId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        if (std::find(path_.arcs.begin(), path_.arcs.end(), a) != path_.arcs.end()) continue;
        path_.arcs.push_back(a);
        bool stop = assign_arcs(step + 1);
        path_.arcs.pop_back();
        if (stop) return true;
      }
    }
    return false;
  }

  const Hypertournament& t_;
  VertexId to_;
  VertexSet forbidden_;
  const ArcSet* blocked_;
  std::size_t len_;
  Visit& visit_;
  HyperPath path_;
};

inline void check_path_query(const Hypertournament& t, VertexId from, VertexId to, int max_len, VertexSet forbidden) {
  if (static_cast<int>(from.index) >= t.n() || static_cast<int>(to.index) >= t.n())
    throw Error(ErrorCode::VertexOutOfRange, "path endpoint");
  if (from == to) throw Error(ErrorCode::SameVertex, "v" + std::to_string(from.label()));
  if (max_len < 1) throw Error(ErrorCode::BadBound, "max_len=" + std::to_string(max_len));
  if (forbidden.contains(from) || forbidden.contains(to))
    throw Error(ErrorCode::SameVertex, "path endpoint is a forbidden vertex");
}

}  // namespace detail

// Visits every (from,to)-path of length <= max_len whose vertices (other than the
// endpoints) avoid `forbidden_vertices` and whose arcs avoid `forbidden_arcs`.
// Order: shorter first; equal lengths by vertex sequence, then arc sequence.
// `visit` returns true to stop early; the function returns whether it was stopped.
template <typename Visit>
bool for_each_path(const Hypertournament& t, VertexId from, VertexId to, int max_len, VertexSet forbidden_vertices,
                   const ArcSet* forbidden_arcs, Visit&& visit) {
  detail::check_path_query(t, from, to, max_len, forbidden_vertices);
  const int cap = std::min(max_len, t.n() - 1);
  for (int len = 1; len <= cap; ++len) {
    detail::PathEnumerator<std::remove_reference_t<Visit>> e(t, to, forbidden_vertices, forbidden_arcs,
                                                             static_cast<std::size_t>(len), visit);
    if (e.run(from)) return true;
  }
  return false;
}

// Least path under the for_each_path order, or nullopt. Exact for the given bound.
inline std::optional<HyperPath> find_path(const Hypertournament& t, VertexId from, VertexId to, int max_len,
                                          VertexSet forbidden_vertices = {}, const ArcSet* forbidden_arcs = nullptr) {
  std::optional<HyperPath> found;
  for_each_path(t, from, to, max_len, forbidden_vertices, forbidden_arcs, [&](const HyperPath& p) {
    found = p;
    return true;
  });
  return found;
}

inline std::optional<HyperPath> find_path(const Hypertournament& t, VertexId from, VertexId to, int max_len,
                                          VertexSet forbidden_vertices, const ArcSet& forbidden_arcs) {
  return find_path(t, from, to, max_len, forbidden_vertices, &forbidden_arcs);
}

// u -> v iff A(u,v) is nonempty.
inline SimpleDigraph dominance_digraph(const Hypertournament& t) {
  SimpleDigraph g(t.n());
  for (int i = 0; i < t.n(); ++i) g.out[static_cast<std::size_t>(i)] = t.out_neighbourhood(VertexId(static_cast<std::uint32_t>(i)));
  return g;
}

// Strong connectivity of the dominance digraph. Necessary for strongness but not
// sufficient: digraph walks may reuse an arc, hyperpaths may not.
inline bool is_dominance_strong(const Hypertournament& t) { return is_strongly_connected(dominance_digraph(t)); }

// Strongness by exhaustive distinct-arc path search for every ordered pair.
inline bool is_strong_exhaustive(const Hypertournament& t) {
  for (int x = 0; x < t.n(); ++x)
    for (int y = 0; y < t.n(); ++y)
      if (x != y && !find_path(t, VertexId(static_cast<std::uint32_t>(x)), VertexId(static_cast<std::uint32_t>(y)), t.n() - 1))
        return false;
  return true;
}

// Exact strongness: the digraph test rejects cheaply, the path search decides.
inline bool is_strong(const Hypertournament& t) { return is_dominance_strong(t) && is_strong_exhaustive(t); }

}  // namespace hyperarena
