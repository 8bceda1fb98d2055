#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperarena/combinatorics.hpp"
#include "hyperarena/error.hpp"
#include "hyperarena/sets.hpp"

namespace hyperarena {

struct BuildOptions {
  // Admit k = 2 (plain tournaments). Theorem checkers still refuse such instances.
  bool tournament_mode = false;
};

struct Diagnostic {
  ErrorCode code;
  std::string detail;
};

namespace detail {

inline std::string subset_label(std::span<const VertexId> sorted) {
  std::string s = "{";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) s += ",";
    s += "v" + std::to_string(sorted[i].label());
  }
  return s + "}";
}

inline std::string arity_problem(int n, int k, bool tournament_mode) {
  if (n < 1 || n > kMaxVertices) return {};
  const int min_k = tournament_mode ? 2 : 3;
  if (k < min_k || k > n - 1)
    return "k=" + std::to_string(k) + " outside [" + std::to_string(min_k) + "," + std::to_string(n - 1) + "]";
  return {};
}

}  // namespace detail

// A k-hypertournament on n vertices: exactly one ordered arc per k-subset.
// Immutable after construction; every query is const and thread-safe.
class Hypertournament {
 public:
  // All problems with the arc list, in scan order. Empty means build() succeeds.
  static std::vector<Diagnostic> validate(int n, int k, std::span<const std::vector<VertexId>> arcs,
                                          BuildOptions options = {}) {
    std::vector<Diagnostic> out;
    if (n < 2 || n > kMaxVertices) {
      out.push_back({ErrorCode::VertexCountOutOfRange, "n=" + std::to_string(n) + " outside [2," + std::to_string(kMaxVertices) + "]"});
      return out;
    }
    if (auto why = detail::arity_problem(n, k, options.tournament_mode); !why.empty()) {
      out.push_back({ErrorCode::ArityOutOfRange, why});
      return out;
    }
    const std::uint64_t total = binomial(n, k);
    std::vector<std::uint8_t> seen(total, 0);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const auto& arc = arcs[i];
      const std::string where = "arc #" + std::to_string(i + 1);
      if (static_cast<int>(arc.size()) != k) {
        out.push_back({ErrorCode::ArityOutOfRange, where + " has " + std::to_string(arc.size()) + " entries"});
        continue;
      }
      bool in_range = true;
      for (VertexId v : arc) {
        if (static_cast<int>(v.index) >= n) {
          out.push_back({ErrorCode::VertexOutOfRange, where + " names v" + std::to_string(static_cast<long long>(v.index) + 1)});
          in_range = false;
          break;
        }
      }
      if (!in_range) continue;
      std::vector<VertexId> sorted(arc.begin(), arc.end());
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        out.push_back({ErrorCode::RepeatedVertexInArc, where});
        continue;
      }
      const std::uint64_t r = colex_rank_sorted(sorted);
      if (seen[r]) {
        out.push_back({ErrorCode::DuplicateSubset, detail::subset_label(sorted) + " (" + where + ")"});
        continue;
      }
      seen[r] = 1;
    }
    for (std::uint64_t r = 0; r < total; ++r) {
      if (!seen[r]) {
        auto s = subset_unrank(n, k, r);
        out.push_back({ErrorCode::MissingSubset, detail::subset_label(s)});
      }
    }
    return out;
  }

  // Validates and canonicalizes: arcs end up stored at their subset ranks.
  static Hypertournament build(int n, int k, std::span<const std::vector<VertexId>> arcs, BuildOptions options = {}) {
    auto problems = validate(n, k, arcs, options);
    if (!problems.empty()) {
      std::string msg = problems.front().detail;
      for (std::size_t i = 1; i < problems.size(); ++i)
        msg += "; " + std::string(to_string(problems[i].code)) + ": " + problems[i].detail;
      throw Error(problems.front().code, msg);
    }
    std::vector<VertexId> entries(binomial(n, k) * static_cast<std::size_t>(k));
    for (const auto& arc : arcs) {
      std::vector<VertexId> sorted(arc.begin(), arc.end());
      std::sort(sorted.begin(), sorted.end());
      std::copy(arc.begin(), arc.end(), entries.begin() + static_cast<std::ptrdiff_t>(colex_rank_sorted(sorted) * k));
    }
    return Hypertournament(n, k, std::move(entries), options.tournament_mode);
  }

  // Trusted constructor for generators: `entries` holds C(n,k) arcs of k entries each,
  // arc r being an ordering of subset_unrank(n, k, r).
  static Hypertournament from_ranked_entries(int n, int k, std::vector<VertexId> entries, bool tournament_mode = false) {
    if (n < 2 || n > kMaxVertices) throw Error(ErrorCode::VertexCountOutOfRange, "n=" + std::to_string(n));
    if (auto why = detail::arity_problem(n, k, tournament_mode); !why.empty()) throw Error(ErrorCode::ArityOutOfRange, why);
    return Hypertournament(n, k, std::move(entries), tournament_mode);
  }

  int n() const { return n_; }
  int k() const { return k_; }
  bool tournament_mode() const { return tournament_mode_; }
  std::size_t arc_count() const { return arc_count_; }
  std::size_t words_per_arc_set() const { return words_; }

  std::span<const VertexId> arc(ArcId a) const {
    check_arc(a);
    return {entries_.data() + static_cast<std::size_t>(a) * k_, static_cast<std::size_t>(k_)};
  }
  VertexId last_entry(ArcId a) const { return arc(a).back(); }
  bool contains(ArcId a, VertexId v) const {
    check_arc(a);
    check_vertex(v);
    return position(a, v) >= 0;
  }

  // True iff x occurs before y in arc a.
  bool precedes(ArcId a, VertexId x, VertexId y) const {
    check_arc(a);
    check_pair(x, y);
    const int px = position(a, x);
    const int py = position(a, y);
    if (px < 0 || py < 0)
      throw Error(ErrorCode::VertexNotInArc, "arc " + std::to_string(a) + " lacks v" + std::to_string((px < 0 ? x : y).label()));
    return px < py;
  }

  // A(x,y): arcs in which x precedes y.
  ArcSet arcs_where_precedes(VertexId x, VertexId y) const {
    check_pair(x, y);
    ArcSet s(arc_count_);
    auto src = precedence_words(x, y);
    std::copy(src.begin(), src.end(), s.words().begin());
    return s;
  }

  // A{x,y}: arcs containing both x and y.
  ArcSet arcs_containing_pair(VertexId x, VertexId y) const {
    check_pair(x, y);
    ArcSet s(arc_count_);
    auto xy = precedence_words(x, y);
    auto yx = precedence_words(y, x);
    for (std::size_t w = 0; w < words_; ++w) s.words()[w] = xy[w] | yx[w];
    return s;
  }

  // A*{x,y}: arcs containing both x and y in which neither is the last entry.
  ArcSet arcs_star(VertexId x, VertexId y) const {
    check_pair(x, y);
    ArcSet s(arc_count_);
    star_words(x, y, s.words());
    return s;
  }

  // N+(x).
  VertexSet out_neighbourhood(VertexId x) const {
    check_vertex(x);
    return out_[x.index];
  }

  // N+ of x in T - a.
  VertexSet out_neighbourhood_excluding_arc(VertexId x, ArcId a) const {
    check_vertex(x);
    if (a >= arc_count_) throw Error(ErrorCode::UnknownArc, "arc id " + std::to_string(a));
    return out_excluding(x, a);
  }

  // Vertices that x precedes inside arc a (empty when x is not in a).
  VertexSet dominated_in(ArcId a, VertexId x) const { return VertexSet(after_[static_cast<std::size_t>(a) * n_ + x.index]); }

  // Raw word view of A(x,y); unchecked.
  std::span<const std::uint64_t> precedence_words(VertexId x, VertexId y) const {
    return {pair_sets_.data() + (static_cast<std::size_t>(x.index) * n_ + y.index) * words_, words_};
  }

  // Unchecked N+_{T-a}(x).
  VertexSet out_excluding(VertexId x, ArcId a) const {
    std::uint64_t bits = 0;
    for (std::size_t b = 0; b < arc_count_; ++b)
      if (b != a) bits |= after_[b * n_ + x.index];
    return VertexSet(bits);
  }

  // Unchecked A*{x,y} into `out` (resized to words_per_arc_set()).
  void star_words(VertexId x, VertexId y, std::vector<std::uint64_t>& out) const {
    out.resize(words_);
    auto xy = precedence_words(x, y);
    auto yx = precedence_words(y, x);
    const std::uint64_t* lx = last_sets_.data() + static_cast<std::size_t>(x.index) * words_;
    const std::uint64_t* ly = last_sets_.data() + static_cast<std::size_t>(y.index) * words_;
    for (std::size_t w = 0; w < words_; ++w) out[w] = (xy[w] | yx[w]) & ~lx[w] & ~ly[w];
  }

  // Arc lists as stored (rank order), suitable for build() round-trips.
  std::vector<std::vector<VertexId>> arcs() const {
    std::vector<std::vector<VertexId>> out;
    out.reserve(arc_count_);
    for (std::size_t a = 0; a < arc_count_; ++a) {
      auto s = arc(static_cast<ArcId>(a));
      out.emplace_back(s.begin(), s.end());
    }
    return out;
  }

  friend bool operator==(const Hypertournament& a, const Hypertournament& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.entries_ == b.entries_;
  }

 private:
  Hypertournament(int n, int k, std::vector<VertexId> entries, bool tournament_mode)
      : n_(n), k_(k), tournament_mode_(tournament_mode), arc_count_(binomial(n, k)), words_((arc_count_ + 63) / 64),
        entries_(std::move(entries)) {
    positions_.assign(arc_count_ * n_, -1);
    after_.assign(arc_count_ * n_, 0);
    pair_sets_.assign(static_cast<std::size_t>(n_) * n_ * words_, 0);
    last_sets_.assign(static_cast<std::size_t>(n_) * words_, 0);
    out_.assign(static_cast<std::size_t>(n_), VertexSet{});
    for (std::size_t a = 0; a < arc_count_; ++a) {
      const VertexId* e = entries_.data() + a * k_;
      const std::uint64_t bit = std::uint64_t{1} << (a & 63);
      const std::size_t word = a >> 6;
      std::uint64_t suffix = 0;
      for (int p = k_ - 1; p >= 0; --p) {
        const auto u = e[p].index;
        positions_[a * n_ + u] = static_cast<std::int8_t>(p);
        after_[a * n_ + u] = suffix;
        out_[u] |= VertexSet(suffix);
        for (std::uint64_t s = suffix; s; s &= s - 1)
          pair_sets_[(static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(std::countr_zero(s))) * words_ + word] |= bit;
        suffix |= std::uint64_t{1} << u;
      }
      last_sets_[static_cast<std::size_t>(e[k_ - 1].index) * words_ + word] |= bit;
    }
  }

  int position(ArcId a, VertexId v) const { return positions_[static_cast<std::size_t>(a) * n_ + v.index]; }

  void check_vertex(VertexId v) const {
    if (static_cast<int>(v.index) >= n_) throw Error(ErrorCode::VertexOutOfRange, "v" + std::to_string(static_cast<long long>(v.index) + 1));
  }
  void check_pair(VertexId x, VertexId y) const {
    check_vertex(x);
    check_vertex(y);
    if (x == y) throw Error(ErrorCode::SameVertex, "v" + std::to_string(x.label()));
  }
  void check_arc(ArcId a) const {
    if (a >= arc_count_) throw Error(ErrorCode::UnknownArc, "arc id " + std::to_string(a));
  }

  int n_ = 0;
  int k_ = 0;
  bool tournament_mode_ = false;
  std::size_t arc_count_ = 0;
  std::size_t words_ = 0;
  std::vector<VertexId> entries_;
  std::vector<std::int8_t> positions_;
  std::vector<std::uint64_t> after_;
  std::vector<std::uint64_t> pair_sets_;
  std::vector<std::uint64_t> last_sets_;
  std::vector<VertexSet> out_;
};

}  // namespace hyperarena
