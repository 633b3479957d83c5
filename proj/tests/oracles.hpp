#pragma once

// Brute-force reference implementations used to cross-check the library.
// They share no code with the solvers they check beyond the Graph type.

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "listobs/graph.hpp"
#include "listobs/list_coloring.hpp"

namespace oracle {

using listobs::Graph;
using listobs::ListSystem;

// Tries all 3^n assignments.
bool brute_colorable(const Graph& g, const ListSystem& l);
bool brute_three_colorable(const Graph& g);
bool four_vertex_critical(const Graph& g);

// Every relabelled copy of a pattern as a packed upper triangle, so that
// containment is a lookup per vertex subset.
class LabeledCopies {
 public:
  explicit LabeledCopies(const Graph& h);
  int order() const { return m_; }
  bool matches(std::uint64_t mask) const;

 private:
  int m_;
  std::vector<bool> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

std::uint64_t induced_mask(const Graph& g, const std::vector<int>& subset);
// Tests every |V(h)|-subset of g.
bool contains(const Graph& g, const LabeledCopies& h);
bool contains(const Graph& g, const Graph& h);
// Containment of every pattern at once, one pass over the subsets of a
// graph with at most 20 vertices.
std::vector<bool> contains_each(const Graph& g, const std::vector<LabeledCopies>& hs);

// Every graph on n vertices up to isomorphism (n <= 9), built by extending
// the classes on n-1 vertices with every neighbourhood of a new vertex.
// Deduplication relies on canonical_form; callers check the class counts.
std::vector<std::vector<Graph>> iso_classes_up_to(int n);

Graph random_graph(std::mt19937_64& rng, int n, double p);
ListSystem random_lists(std::mt19937_64& rng, int n);

// Propagation configurations on exactly n vertices built from the
// definitions: all color words with c1 = 1 and all chord sets, filtered.
struct BruteConfig {
  std::vector<int> colors;
  std::vector<std::pair<int, int>> chords;  // 1-based, sorted
};
std::vector<BruteConfig> propagation_configs(int n, const std::vector<Graph>& forbidden);

}  // namespace oracle
