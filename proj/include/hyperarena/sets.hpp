#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hyperarena {

// Hard cap on vertex count; vertex sets are single 64-bit words.
inline constexpr int kMaxVertices = 64;

// 0-based vertex index. All I/O uses the 1-based label v_{index+1}.
struct VertexId {
  std::uint32_t index = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::uint32_t i) : index(i) {}

  static constexpr VertexId from_label(int label) { return VertexId(static_cast<std::uint32_t>(label - 1)); }
  constexpr int label() const { return static_cast<int>(index) + 1; }

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

// Arc identifier: the colex rank of the arc's vertex set.
using ArcId = std::uint32_t;

class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<VertexId> vs) {
    for (VertexId v : vs) insert(v);
  }

  static constexpr VertexSet single(VertexId v) { return VertexSet(std::uint64_t{1} << v.index); }
  static constexpr VertexSet all(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(VertexId v) const { return (bits_ >> v.index) & 1u; }
  constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v.index; }
  constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v.index); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet without(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(VertexId(static_cast<std::uint32_t>(std::countr_zero(b))));
  }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Dense bitset over arc ids [0, capacity).
class ArcSet {
 public:
  ArcSet() = default;
  explicit ArcSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}
  ArcSet(std::size_t capacity, std::initializer_list<ArcId> ids) : ArcSet(capacity) {
    for (ArcId a : ids) insert(a);
  }

  std::size_t capacity() const { return capacity_; }
  bool contains(ArcId a) const { return a < capacity_ && ((words_[a >> 6] >> (a & 63)) & 1u); }
  void insert(ArcId a) { words_[a >> 6] |= std::uint64_t{1} << (a & 63); }
  void erase(ArcId a) { words_[a >> 6] &= ~(std::uint64_t{1} << (a & 63)); }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  std::size_t size() const {
    std::size_t s = 0;
    for (auto w : words_) s += static_cast<std::size_t>(std::popcount(w));
    return s;
  }

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (std::uint64_t b = words_[i]; b != 0; b &= b - 1)
        f(static_cast<ArcId>(i * 64 + static_cast<std::size_t>(std::countr_zero(b))));
  }

  std::vector<ArcId> ids() const {
    std::vector<ArcId> out;
    for_each([&](ArcId a) { out.push_back(a); });
    return out;
  }

  bool subset_of(const ArcSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
      if (words_[i] & ~other) return false;
    }
    return true;
  }

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hyperarena
