#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <vector>

#include "sewkit/error.hpp"

namespace sewkit {

using VertexId = int;

inline constexpr int kMaxVertices = 64;

/// A set of vertex ids below 64 stored as a bitmask.
///
/// Iteration yields members in ascending order. The ordering operators
/// compare the ascending member lists lexicographically, so {0,1} < {0,1,2}
/// < {0,2}. All facet lists and outputs in the library are sorted with it.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr VertexId operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr VertexSet(std::initializer_list<VertexId> ids) {
    for (VertexId v : ids) insert(v);
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  template <typename Range>
  static VertexSet from_range(const Range& ids) {
    VertexSet s;
    for (auto v : ids) s.insert(static_cast<VertexId>(v));
    return s;
  }
  /// {0, 1, ..., n-1}
  static constexpr VertexSet first_n(int n) {
    return from_bits(n >= kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(VertexId v) const {
    return v >= 0 && v < kMaxVertices && ((bits_ >> v) & 1u) != 0;
  }
  constexpr void insert(VertexId v) {
    if (v < 0 || v >= kMaxVertices) {
      throw Error(ErrorCode::TooManyVertices, "vertex id " + std::to_string(v) + " outside [0,64)");
    }
    bits_ |= std::uint64_t{1} << v;
  }
  constexpr void erase(VertexId v) {
    if (v >= 0 && v < kMaxVertices) bits_ &= ~(std::uint64_t{1} << v);
  }
  constexpr VertexSet with(VertexId v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  constexpr VertexSet without(VertexId v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  /// Smallest / largest member; -1 when empty.
  constexpr VertexId front() const { return empty() ? -1 : std::countr_zero(bits_); }
  constexpr VertexId back() const { return empty() ? -1 : 63 - std::countl_zero(bits_); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<VertexId> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }

  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    const int low = std::countr_zero(diff);
    const std::uint64_t above = ~((std::uint64_t{2} << low) - 1);
    // Below `low` both lists agree. The side holding `low` is smaller unless
    // the other side has already run out of members.
    if ((a.bits_ >> low) & 1u) {
      return (b.bits_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return (a.bits_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
  }

  friend std::ostream& operator<<(std::ostream& os, VertexSet s) {
    os << '{';
    bool first = true;
    for (VertexId v : s) {
      if (!first) os << ',';
      os << v;
      first = false;
    }
    return os << '}';
  }

 private:
  std::uint64_t bits_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    // splitmix64 finalizer
    std::uint64_t x = s.bits() + 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

/// Calls `fn(subset)` for every k-element subset of `ground`, in
/// lexicographic order. Stops early if `fn` returns false.
template <typename Fn>
bool for_each_subset(VertexSet ground, int k, Fn&& fn) {
  const std::vector<VertexId> elems = ground.to_vector();
  const int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(elems[static_cast<std::size_t>(i)]);
    if (!fn(s)) return false;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace sewkit

template <>
struct std::hash<sewkit::VertexSet> : sewkit::VertexSetHash {};
