#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "listobs/graph.hpp"

namespace listobs {

// Subset of the palette {1, 2, 3} as a 3-bit mask (bit c-1 for color c).
class ColorSet {
public:
  constexpr ColorSet() = default;
  constexpr ColorSet(std::initializer_list<int> colors) {
    for (int c : colors) insert(c);
  }
  static constexpr ColorSet from_mask(std::uint8_t mask) {
    ColorSet s;
    s.mask_ = static_cast<std::uint8_t>(mask & 7u);
    return s;
  }
  static constexpr ColorSet full() { return from_mask(7); }

  constexpr std::uint8_t mask() const { return mask_; }
  constexpr bool contains(int c) const { return c >= 1 && c <= 3 && ((mask_ >> (c - 1)) & 1u); }
  constexpr void insert(int c) { mask_ = static_cast<std::uint8_t>(mask_ | (1u << (c - 1))); }
  constexpr void erase(int c) { mask_ = static_cast<std::uint8_t>(mask_ & ~(1u << (c - 1))); }
  constexpr int size() const { return ((mask_ & 1u) != 0) + ((mask_ & 2u) != 0) + ((mask_ & 4u) != 0); }
  constexpr bool empty() const { return mask_ == 0; }
  // The unique color of a singleton list (0 otherwise).
  constexpr int only() const { return mask_ == 1 ? 1 : mask_ == 2 ? 2 : mask_ == 4 ? 3 : 0; }
  constexpr bool is_subset_of(ColorSet o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr ColorSet operator-(ColorSet o) const { return from_mask(static_cast<std::uint8_t>(mask_ & ~o.mask_)); }
  constexpr bool operator==(const ColorSet&) const = default;

  std::vector<int> colors() const {
    std::vector<int> out;
    for (int c = 1; c <= 3; ++c) {
      if (contains(c)) out.push_back(c);
    }
    return out;
  }

private:
  std::uint8_t mask_ = 0;
};

// Order-3 list system: one ColorSet per vertex.
class ListSystem {
public:
  ListSystem() = default;
  explicit ListSystem(std::vector<ColorSet> lists) : lists_(std::move(lists)) {}
  ListSystem(std::initializer_list<ColorSet> lists) : lists_(lists) {}
  static ListSystem uniform(int n, ColorSet list = ColorSet::full()) {
    return ListSystem(std::vector<ColorSet>(static_cast<std::size_t>(n), list));
  }

  int size() const { return static_cast<int>(lists_.size()); }
  ColorSet operator[](int v) const { return lists_[static_cast<std::size_t>(v)]; }
  ColorSet& operator[](int v) { return lists_[static_cast<std::size_t>(v)]; }
  std::span<const ColorSet> lists() const { return lists_; }

  // Vertices whose list has exactly k colors.
  VertexSet with_size(int k) const;
  bool is_subsystem_of(const ListSystem& o) const;
  ListSystem restricted_to(const VertexSet& xs) const;

  bool operator==(const ListSystem&) const = default;

private:
  std::vector<ColorSet> lists_;
};

// Colors per vertex: 1..3, or 0 where a partial coloring is undefined.
using Coloring = std::vector<int>;

// Proper and list-respecting on every vertex.
bool is_list_coloring(const Graph& g, const ListSystem& l, const Coloring& c);

// Exact backtracking search (fail-first ordering, eager singleton
// propagation). Returns a coloring or nullopt when (g, l) is not colorable.
std::optional<Coloring> l_colorable(const Graph& g, const ListSystem& l);
std::optional<Coloring> three_colorable(const Graph& g);

// Removes the unique color of L(w) from L(v).
ListSystem update_from(const Graph& g, const ListSystem& l, int w, int v);

enum class PathOutcome {
  kComplete,  // every path vertex ended with a singleton list
  kStalled,   // an update removed nothing, so the vertex stayed uncolored
  kWipedOut,  // an update emptied a list
};

struct PathUpdate {
  ListSystem lists;
  Coloring coloring;            // 0 for path vertices that were not colored
  std::vector<bool> colored;    // indexed by position on the path
  PathOutcome outcome = PathOutcome::kComplete;
  int stop_position = -1;       // position where a stall or wipe-out happened
};

// Gives `alpha` to path[0], then updates path[i] from path[i-1] while the
// predecessor is colored.
PathUpdate update_along_path(const Graph& g, const ListSystem& l, std::span<const int> path, int alpha);

inline constexpr int kExhaustive = -1;

struct SetUpdate {
  ListSystem lists;
  VertexSet settled;        // final X_i
  int rounds = 0;           // rounds actually performed
  bool wiped_out = false;   // the empty-list convention fired
};

// Round-based updating with respect to X, `rounds` times or until the
// fixpoint when rounds == kExhaustive. Every x in X needs |L(x)| <= 1.
SetUpdate update_wrt_set(const Graph& g, const ListSystem& l, const VertexSet& x, int rounds);

// Sets each assigned vertex's list to its color, then updates with respect to
// the assigned set.
SetUpdate precolor_and_update(const Graph& g, const ListSystem& l, std::span<const std::pair<int, int>> assignment,
                              int rounds = 3);

}  // namespace listobs
