#pragma once

#include <span>
#include <utility>
#include <vector>

#include "listobs/vertex_set.hpp"

namespace listobs {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with one bit row per vertex.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(rows_.size()); }
  const VertexSet& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
  int degree(int v) const { return neighbors(v).size(); }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::range(order()); }
  std::span<const VertexSet> rows() const { return rows_; }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Adds the edge uv; self-loops and out-of-range endpoints throw InputError.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool operator==(const Graph&) const = default;

private:
  std::vector<VertexSet> rows_;
};

// G|X with the vertices of xs renumbered in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& xs);
Graph delete_vertex(const Graph& g, int v);
Graph complement(const Graph& g);
// Vertex v of g becomes perm[v] in the result.
Graph relabel(const Graph& g, std::span<const int> perm);
Graph disjoint_union(const Graph& a, const Graph& b);

Graph path_graph(int t);
Graph cycle_graph(int t);
Graph complete_graph(int t);
Graph edgeless_graph(int t);
Graph claw_graph();

std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> anticomponents(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);

}  // namespace listobs
