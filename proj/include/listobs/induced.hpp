#pragma once

#include <optional>
#include <span>
#include <vector>

#include "listobs/graph.hpp"
#include "listobs/pattern.hpp"

namespace listobs {

// An induced embedding: embedding[u] is the host vertex that pattern vertex u
// maps to.
using Embedding = std::vector<int>;

// Induced path on t vertices inside the graph given by adjacency rows.
// `through` >= 0 restricts the search to paths containing that vertex.
// Returns the path's vertices in order.
std::optional<std::vector<int>> find_induced_path(std::span<const VertexSet> rows, int t, int through = -1);

// Backtracking induced-subgraph matcher for an arbitrary pattern graph.
// `anchor` >= 0 restricts to embeddings whose image contains that vertex.
std::optional<Embedding> find_induced_generic(std::span<const VertexSet> rows, const Graph& pattern,
                                              int anchor = -1);

// Dispatches to the path search when the pattern is a path.
std::optional<Embedding> find_induced(const Graph& g, const Pattern& h);
bool contains_induced(const Graph& g, const Pattern& h);
bool contains_induced(const Graph& g, const Graph& h);

// True when g contains h through vertex `anchor`.
bool contains_induced_through(std::span<const VertexSet> rows, const Pattern& h, int anchor);

bool is_free_of(const Graph& g, std::span<const Pattern> forbidden);

}  // namespace listobs
