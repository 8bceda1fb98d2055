#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hyperarena/combinatorics.hpp"
#include "hyperarena/error.hpp"
#include "hyperarena/hypertournament.hpp"

namespace hyperarena {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// Identifies the random-instance stream; bump the suffix if the sampling procedure changes.
inline constexpr std::string_view kRandomGeneratorName = "mt19937_64/fisher-yates/v1";

// Orientation of the replaced arcs in t1/t2. Text reverses the whole arc
// (..., v2, v1); Figure keeps v1 before v2 (..., v1, v2).
enum class ReplacedArcOrientation { Text, Figure };

namespace detail {

inline void check_generator_arity(int n, int k, int min_k) {
  if (n < 2 || n > kMaxVertices) throw Error(ErrorCode::VertexCountOutOfRange, "n=" + std::to_string(n));
  if (k < min_k || k > n - 1)
    throw Error(ErrorCode::ArityOutOfRange,
                "k=" + std::to_string(k) + " outside [" + std::to_string(min_k) + "," + std::to_string(n - 1) + "]");
}

// Builds an instance by asking `order` to arrange each increasing k-subset in place.
template <typename Order>
Hypertournament generate(int n, int k, Order&& order) {
  const std::uint64_t m = binomial(n, k);
  std::vector<VertexId> entries(m * static_cast<std::size_t>(k));
  for (std::uint64_t r = 0; r < m; ++r) {
    auto subset = subset_unrank(n, k, r);
    order(subset);
    std::copy(subset.begin(), subset.end(), entries.begin() + static_cast<std::ptrdiff_t>(r * k));
  }
  return Hypertournament::from_ranked_entries(n, k, std::move(entries), k == 2);
}

inline bool has(const std::vector<VertexId>& s, int label) {
  return std::find(s.begin(), s.end(), VertexId::from_label(label)) != s.end();
}

// Moves the given labels, in order, to the end of an increasing subset.
inline void move_to_back(std::vector<VertexId>& s, std::initializer_list<int> labels) {
  for (int l : labels) {
    auto it = std::find(s.begin(), s.end(), VertexId::from_label(l));
    std::rotate(it, it + 1, s.end());
  }
}

// {v1, v2} together with the labels [lo, hi].
inline std::vector<VertexId> head_pair_with_range(int lo, int hi) {
  std::vector<VertexId> s{VertexId::from_label(1), VertexId::from_label(2)};
  for (int l = lo; l <= hi; ++l) s.push_back(VertexId::from_label(l));
  return s;
}

inline void orient_replaced(std::vector<VertexId>& s, ReplacedArcOrientation o) {
  std::reverse(s.begin(), s.end());
  if (o == ReplacedArcOrientation::Figure) std::swap(s[s.size() - 2], s[s.size() - 1]);
}

}  // namespace detail

// Every arc lists its vertices in increasing label order.
inline Hypertournament transitive(int n, int k) {
  detail::check_generator_arity(n, k, 2);
  return detail::generate(n, k, [](std::vector<VertexId>&) {});
}

// Transitive with the arc on {v1, v2, v_{n-k+3}, ..., v_n} reversed.
inline Hypertournament t1(int n, int k, ReplacedArcOrientation o = ReplacedArcOrientation::Text) {
  detail::check_generator_arity(n, k, 3);
  const auto replaced = detail::head_pair_with_range(n - (k - 3), n);
  return detail::generate(n, k, [&](std::vector<VertexId>& s) {
    if (s == replaced) detail::orient_replaced(s, o);
  });
}

// t1 with the arc on {v1, v2, v_{n-k+2}, ..., v_{n-1}} reversed as well.
inline Hypertournament t2(int n, int k, ReplacedArcOrientation o = ReplacedArcOrientation::Text) {
  detail::check_generator_arity(n, k, 3);
  const auto first = detail::head_pair_with_range(n - (k - 3), n);
  const auto second = detail::head_pair_with_range(n - (k - 2), n - 1);
  return detail::generate(n, k, [&](std::vector<VertexId>& s) {
    if (s == first || s == second) detail::orient_replaced(s, o);
  });
}

// Five-rule construction whose (1,2)-step competition graph misses v1v2 and v2v3.
inline Hypertournament t3(int n, int k) {
  detail::check_generator_arity(n, k, 3);
  return detail::generate(n, k, [](std::vector<VertexId>& s) {
    const bool v1 = detail::has(s, 1), v2 = detail::has(s, 2), v3 = detail::has(s, 3);
    if (v1 && v2) {
      detail::move_to_back(s, {1, 2});
    } else if (v1) {
      detail::move_to_back(s, {1});
    } else if (v2 && !v3) {
      detail::move_to_back(s, {2});
    } else if (v2) {
      detail::move_to_back(s, {2, 3});
    }
    // otherwise: increasing order
  });
}

namespace detail {

// Unbiased integer in [0, range) by rejection.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % range;
}

}  // namespace detail

// Independent uniform ordering of every k-subset, subsets visited in colex order.
// Depends only on (n, k, seed): mt19937_64 output is fixed by the standard and the
// bounded draws do not use std::uniform_int_distribution.
inline Hypertournament random_hypertournament(int n, int k, std::uint64_t seed) {
  detail::check_generator_arity(n, k, 2);
  std::mt19937_64 rng(seed);
  return detail::generate(n, k, [&](std::vector<VertexId>& s) {
    for (std::size_t i = s.size() - 1; i > 0; --i) std::swap(s[i], s[detail::bounded(rng, i + 1)]);
  });
}

// Every labeled k-hypertournament on n vertices. Instance `index` picks, for each
// subset rank r, the permutation with lexicographic rank digit_r of the mixed-radix
// expansion index = sum_r digit_r * (k!)^(m-1-r): subset rank 0 is the most
// significant digit, the last subset varies fastest.
class Enumeration {
 public:
  Enumeration(int n, int k, std::uint64_t budget = kDefaultEnumerationBudget) : n_(n), k_(k) {
    detail::check_generator_arity(n, k, 2);
    subsets_ = binomial(n, k);
    radix_ = factorial(k);
    auto count = checked_pow(radix_, subsets_);
    if (!count || *count > budget)
      throw Error(ErrorCode::BudgetExceeded, "(k!)^C(n,k) = " + pow_decimal(radix_, subsets_) + " instances exceeds budget " +
                                                 std::to_string(budget));
    size_ = *count;
    sorted_.reserve(subsets_);
    for (std::uint64_t r = 0; r < subsets_; ++r) sorted_.push_back(subset_unrank(n, k, r));
  }

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t size() const { return size_; }

  std::vector<std::uint64_t> digits(std::uint64_t index) const {
    check_index(index);
    std::vector<std::uint64_t> d(subsets_);
    for (std::uint64_t r = subsets_; r-- > 0;) {
      d[r] = index % radix_;
      index /= radix_;
    }
    return d;
  }

  Hypertournament at(std::uint64_t index) const {
    auto d = digits(index);
    std::vector<VertexId> entries(subsets_ * static_cast<std::size_t>(k_));
    for (std::uint64_t r = 0; r < subsets_; ++r) write_arc(entries, r, d[r]);
    return Hypertournament::from_ranked_entries(n_, k_, std::move(entries), k_ == 2);
  }

  // Calls f(index, instance) for index in [begin, end), in increasing order.
  template <typename F>
  void for_each(std::uint64_t begin, std::uint64_t end, F&& f) const {
    end = std::min(end, size_);
    if (begin >= end) return;
    auto d = digits(begin);
    std::vector<VertexId> entries(subsets_ * static_cast<std::size_t>(k_));
    for (std::uint64_t r = 0; r < subsets_; ++r) write_arc(entries, r, d[r]);
    for (std::uint64_t index = begin;;) {
      f(index, Hypertournament::from_ranked_entries(n_, k_, entries, k_ == 2));
      if (++index == end) break;
      for (std::uint64_t r = subsets_; r-- > 0;) {
        d[r] = d[r] + 1 == radix_ ? 0 : d[r] + 1;
        write_arc(entries, r, d[r]);
        if (d[r] != 0) break;
      }
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for_each(0, size_, std::forward<F>(f));
  }

 private:
  void check_index(std::uint64_t index) const {
    if (index >= size_) throw Error(ErrorCode::RankOutOfRange, "instance index " + std::to_string(index));
  }

  void write_arc(std::vector<VertexId>& entries, std::uint64_t r, std::uint64_t digit) const {
    permutation_unrank(sorted_[r], digit, std::span<VertexId>(entries.data() + r * k_, static_cast<std::size_t>(k_)));
  }

  int n_;
  int k_;
  std::uint64_t subsets_ = 0;
  std::uint64_t radix_ = 1;
  std::uint64_t size_ = 0;
  std::vector<std::vector<VertexId>> sorted_;
};

inline Enumeration enumerate_all(int n, int k, std::uint64_t budget = kDefaultEnumerationBudget) { return Enumeration(n, k, budget); }

// Position of an instance in enumerate_all order.
inline std::uint64_t enumeration_index(const Hypertournament& t) {
  const std::uint64_t radix = factorial(t.k());
  std::uint64_t index = 0;
  for (std::size_t r = 0; r < t.arc_count(); ++r) index = index * radix + permutation_rank(t.arc(static_cast<ArcId>(r)));
  return index;
}

}  // namespace hyperarena
