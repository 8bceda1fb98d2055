#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperarena/error.hpp"
#include "hyperarena/sets.hpp"

namespace hyperarena {

namespace detail {

using BinomialTable = std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1>;

constexpr BinomialTable make_binomial_table() {
  BinomialTable t{};
  for (int n = 0; n <= kMaxVertices; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
  }
  return t;
}

inline constexpr BinomialTable kBinomial = make_binomial_table();

}  // namespace detail

// C(n, k) for 0 <= n <= 64; zero when k < 0 or k > n.
constexpr std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return detail::kBinomial[n][k];
}

constexpr std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Colex rank of a strictly increasing index sequence. No validation.
constexpr std::uint64_t colex_rank_sorted(std::span<const VertexId> sorted) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += binomial(static_cast<int>(sorted[i].index), static_cast<int>(i) + 1);
  return r;
}

// Colex rank of a k-subset of [0, n), given in any order.
inline std::uint64_t subset_rank(int n, int k, std::span<const VertexId> vertices) {
  if (static_cast<int>(vertices.size()) != k)
    throw Error(ErrorCode::BadSubsetSize, "expected " + std::to_string(k) + " vertices, got " + std::to_string(vertices.size()));
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::BadSubsetSize, "repeated vertex in subset");
  for (VertexId v : sorted)
    if (static_cast<int>(v.index) >= n) throw Error(ErrorCode::VertexOutOfRange, "vertex v" + std::to_string(v.label()));
  return colex_rank_sorted(sorted);
}

// Inverse of subset_rank; returns the subset in increasing order.
inline std::vector<VertexId> subset_unrank(int n, int k, std::uint64_t rank) {
  if (n < 0 || n > kMaxVertices || k < 0 || k > n) throw Error(ErrorCode::BadSubsetSize, "invalid (n, k)");
  if (rank >= binomial(n, k))
    throw Error(ErrorCode::RankOutOfRange, std::to_string(rank) + " >= C(" + std::to_string(n) + "," + std::to_string(k) + ")");
  std::vector<VertexId> out(static_cast<std::size_t>(k));
  int c = n - 1;
  for (int i = k; i >= 1; --i) {
    while (binomial(c, i) > rank) --c;
    out[static_cast<std::size_t>(i - 1)] = VertexId(static_cast<std::uint32_t>(c));
    rank -= binomial(c, i);
    --c;
  }
  return out;
}

// Writes the index-th permutation (lexicographic order) of `sorted` into `out`.
inline void permutation_unrank(std::span<const VertexId> sorted, std::uint64_t index, std::span<VertexId> out) {
  const int k = static_cast<int>(sorted.size());
  std::array<VertexId, kMaxVertices> pool{};
  std::copy(sorted.begin(), sorted.end(), pool.begin());
  int remaining = k;
  for (int i = 0; i < k; ++i) {
    std::uint64_t f = factorial(remaining - 1);
    auto pick = static_cast<int>(index / f);
    index %= f;
    out[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(pick)];
    std::copy(pool.begin() + pick + 1, pool.begin() + remaining, pool.begin() + pick);
    --remaining;
  }
}

// Lexicographic rank of a permutation of distinct vertices among permutations of the same set.
inline std::uint64_t permutation_rank(std::span<const VertexId> perm) {
  std::uint64_t r = 0;
  const std::size_t k = perm.size();
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t smaller_after = 0;
    for (std::size_t j = i + 1; j < k; ++j)
      if (perm[j] < perm[i]) ++smaller_after;
    r += smaller_after * factorial(static_cast<int>(k - 1 - i));
  }
  return r;
}

// base^exp if it fits in 64 bits.
constexpr std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

// Exact decimal expansion of base^exp.
inline std::string pow_decimal(std::uint64_t base, std::uint64_t exp) {
  std::vector<std::uint32_t> digits{1};  // little-endian, base 1e9
  for (std::uint64_t i = 0; i < exp; ++i) {
    std::uint64_t carry = 0;
    for (auto& d : digits) {
      std::uint64_t cur = static_cast<std::uint64_t>(d) * base + carry;
      d = static_cast<std::uint32_t>(cur % 1000000000u);
      carry = cur / 1000000000u;
    }
    while (carry) {
      digits.push_back(static_cast<std::uint32_t>(carry % 1000000000u));
      carry /= 1000000000u;
    }
  }
  std::string out = std::to_string(digits.back());
  for (auto it = digits.rbegin() + 1; it != digits.rend(); ++it) {
    std::string part = std::to_string(*it);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

}  // namespace hyperarena
