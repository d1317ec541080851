#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace raag {

// Dense vertex index into a Graph.
using Vertex = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 64;

// A subset of the vertices of a graph with at most 64 vertices, stored as a
// bitmask. Iteration yields members in increasing order.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const {
      return static_cast<Vertex>(std::countr_zero(rest_));
    }
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
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  // {0, ..., n-1}
  static constexpr VertexSet first(std::size_t n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(Vertex v) {
    return from_bits(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  // Least member; the set must be nonempty.
  constexpr Vertex least() const {
    return static_cast<Vertex>(std::countr_zero(bits_));
  }

  constexpr bool subset_of(VertexSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const {
    return from_bits(bits_ | o.bits_);
  }
  constexpr VertexSet operator&(VertexSet o) const {
    return from_bits(bits_ & o.bits_);
  }
  // set difference
  constexpr VertexSet operator-(VertexSet o) const {
    return from_bits(bits_ & ~o.bits_);
  }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the sorted member lists; this is the canonical
// order used for component lists, families and Omega blocks.
constexpr bool canonical_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int d = std::countr_zero(diff);
  const bool a_has = (a.bits() >> d) & 1U;
  const std::uint64_t above = d == 63 ? 0 : ~std::uint64_t{0} << (d + 1);
  // The set lacking bit d is a prefix of the other iff it has nothing above d.
  if (a_has) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

struct CanonicalLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const {
    return canonical_less(a, b);
  }
};

}  // namespace raag
