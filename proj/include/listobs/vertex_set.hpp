#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace listobs {

inline constexpr int kMaxVertices = 128;

// Fixed-width set of vertex indices in [0, 128), two 64-bit words.
class VertexSet {
public:
  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  static constexpr VertexSet range(int n) {
    VertexSet s;
    if (n >= 64) {
      s.w_[0] = ~std::uint64_t{0};
      s.w_[1] = n >= 128 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n - 64)) - 1);
    } else if (n > 0) {
      s.w_[0] = (std::uint64_t{1} << n) - 1;
    }
    return s;
  }

  constexpr bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
  constexpr void insert(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  constexpr void erase(int v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  constexpr int size() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }

  // Smallest element, or -1 when empty.
  constexpr int first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  // Removes and returns the smallest element; set must be non-empty.
  constexpr int pop_first() {
    int v = first();
    erase(v);
    return v;
  }

  constexpr VertexSet operator&(const VertexSet& o) const { return VertexSet(w_[0] & o.w_[0], w_[1] & o.w_[1]); }
  constexpr VertexSet operator|(const VertexSet& o) const { return VertexSet(w_[0] | o.w_[0], w_[1] | o.w_[1]); }
  constexpr VertexSet operator^(const VertexSet& o) const { return VertexSet(w_[0] ^ o.w_[0], w_[1] ^ o.w_[1]); }
  // Set difference.
  constexpr VertexSet operator-(const VertexSet& o) const { return VertexSet(w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]); }
  constexpr VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
  constexpr VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
  constexpr VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }
  constexpr bool operator==(const VertexSet&) const = default;

  constexpr bool is_subset_of(const VertexSet& o) const { return (*this - o).empty(); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  class iterator {
  public:
    constexpr iterator() = default;
    constexpr explicit iterator(std::array<std::uint64_t, 2> words) : w_(words) { advance(); }
    constexpr int operator*() const { return cur_; }
    constexpr iterator& operator++() {
      w_[cur_ >> 6] &= ~(std::uint64_t{1} << (cur_ & 63));
      advance();
      return *this;
    }
    constexpr bool operator==(const iterator& o) const { return cur_ == o.cur_; }

  private:
    constexpr void advance() {
      cur_ = w_[0] ? std::countr_zero(w_[0]) : w_[1] ? 64 + std::countr_zero(w_[1]) : -1;
    }
    std::array<std::uint64_t, 2> w_{0, 0};
    int cur_ = -1;
  };

  constexpr iterator begin() const { return iterator(w_); }
  constexpr iterator end() const { return iterator(); }

private:
  constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : w_{lo, hi} {}
  std::array<std::uint64_t, 2> w_{0, 0};
};

}  // namespace listobs
