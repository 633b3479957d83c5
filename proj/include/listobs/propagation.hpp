#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "listobs/graph.hpp"
#include "listobs/list_coloring.hpp"
#include "listobs/pattern.hpp"

namespace listobs {

// Accepted P6-free configurations on 1..25 vertices.
inline constexpr std::array<std::uint64_t, 25> kP6FreeCounts = {
    1,    2,    6,    22,   86,   350,  1220, 2656, 4208, 5360, 5864, 5604, 5686,
    5004, 4120, 3400, 2454, 1688, 1064, 516,  202,  72,   18,   2,    0};

// A propagation path under construction. Positions are 1-based as v_1..v_k:
// colors[i-1] is c(v_i), L(v_1) = {1} and L(v_i) = {c(v_i), c(v_{i-1})}.
struct PropConfig {
  std::vector<int> colors;
  // Non-path edges (i, j) with i < j - 1, sorted.
  std::vector<std::pair<int, int>> extra_edges;

  int length() const { return static_cast<int>(colors.size()); }
  int color(int i) const { return colors[static_cast<std::size_t>(i - 1)]; }
  ColorSet list(int i) const;
  // Path edges plus extra edges, vertex v_i at index i-1.
  Graph graph() const;

  bool operator==(const PropConfig&) const = default;
  auto operator<=>(const PropConfig& o) const {
    if (auto c = length() <=> o.length(); c != 0) return c;
    if (auto c = colors <=> o.colors; c != 0) return c;
    return extra_edges <=> o.extra_edges;
  }
};

// Ordered pair (c(v_i), the other color of L(v_i)) for 2 <= i <= k.
std::pair<int, int> shape(const PropConfig& cfg, int i);

// Every extra edge v_i v_j with 3 <= i <= j-2 has S(v_i) = ab and
// S(v_j) = bc for {a, b, c} = {1, 2, 3}.
bool satisfies_shape_chain(const PropConfig& cfg);

// Whether the chord v_i v_j (i < j-1) may be present: c(v_i) lies outside
// L(v_j), and the shape chain holds when i >= 3.
bool admissible_edge(const PropConfig& cfg, int i, int j);

// Re-checks every invariant of an accepted configuration from scratch.
bool validate_config(const PropConfig& cfg, std::span<const Pattern> forbidden);

// One configuration per line: "<k> <color digits> <i-j,i-j,...|->".
std::string format_config(const PropConfig& cfg);
PropConfig parse_config(std::string_view line);

using ConfigSink = std::function<void(const PropConfig&)>;

struct EnumerationOptions {
  int max_n = 25;
  int jobs = 1;
  // Subtrees rooted at this length become independent tasks.
  int split_length = 7;
  // Emitted configurations arrive sorted, whatever the schedule.
  ConfigSink sink;
  // Accepted-node budget; exceeding it throws ResourceError.
  std::uint64_t node_budget = 0;
};

struct EnumerationResult {
  // counts[k] is the number of accepted configurations on k vertices,
  // k = 1..max_n (counts[0] is unused and zero).
  std::vector<std::uint64_t> counts;
  int max_length = 0;
  std::uint64_t total = 0;
};

// Depth-first generation from c(v_1) = 1, L(v_1) = {1}: each extension picks
// c(v_{j+1}) != c(v_j) and any subset of admissible chords to earlier
// vertices; nodes containing a forbidden pattern are dropped together with
// their subtrees. max_n must be in [1, 64].
EnumerationResult enumerate_propagation_paths(std::span<const Pattern> forbidden, const EnumerationOptions& options);
EnumerationResult enumerate_propagation_paths(std::span<const Pattern> forbidden, int max_n);

// Largest length with an accepted configuration. Throws ResourceError when
// configurations survive to 128 vertices or the node budget runs out.
int max_propagation_length(std::span<const Pattern> forbidden, int jobs = 1,
                           std::uint64_t node_budget = 200'000'000);

// Vertex count of the longest propagation path of an instance whose lists
// all have at most two colors (0 for an empty graph). Exhaustive over paths.
int longest_propagation_path(const Graph& g, const ListSystem& l);

// |V(G)| <= 4 * lambda + 4, required only when lambda >= 20.
bool satisfies_size_bound(int order, int lambda);

}  // namespace listobs
