#include "listobs/graph.hpp"

#include <string>

#include "listobs/errors.hpp"

namespace listobs {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw SizeError("graph order " + std::to_string(n) + " outside [0, 128]");
  }
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  rows_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& r : rows_) twice += r.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for order " +
                     std::to_string(order()));
  }
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  rows_[static_cast<std::size_t>(u)].insert(v);
  rows_[static_cast<std::size_t>(v)].insert(u);
}

void Graph::remove_edge(int u, int v) {
  rows_[static_cast<std::size_t>(u)].erase(v);
  rows_[static_cast<std::size_t>(v)].erase(u);
}

Graph induced_subgraph(const Graph& g, const VertexSet& xs) {
  if (!xs.is_subset_of(g.vertices())) throw InputError("induced_subgraph: vertex index out of range");
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int k = 0;
  for (int v : xs) index[static_cast<std::size_t>(v)] = k++;
  Graph h(k);
  for (int u : xs) {
    for (int v : g.neighbors(u) & xs) {
      if (u < v) h.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    }
  }
  return h;
}

Graph delete_vertex(const Graph& g, int v) {
  VertexSet rest = g.vertices();
  rest.erase(v);
  return induced_subgraph(g, rest);
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) h.add_edge(u, v);
    }
  }
  return h;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InputError("relabel: permutation size mismatch");
  Graph h(g.order());
  for (auto [u, v] : g.edges()) {
    h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph h(a.order() + b.order());
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  for (auto [u, v] : b.edges()) h.add_edge(u + a.order(), v + a.order());
  return h;
}

Graph path_graph(int t) {
  Graph g(t);
  for (int i = 0; i + 1 < t; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int t) {
  if (t < 3) throw InputError("cycle needs at least 3 vertices");
  Graph g = path_graph(t);
  g.add_edge(t - 1, 0);
  return g;
}

Graph complete_graph(int t) {
  Graph g(t);
  for (int u = 0; u < t; ++u) {
    for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph edgeless_graph(int t) { return Graph(t); }

Graph claw_graph() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  while (!unseen.empty()) {
    VertexSet comp;
    VertexSet frontier;
    frontier.insert(unseen.first());
    while (!frontier.empty()) {
      int v = frontier.pop_first();
      comp.insert(v);
      unseen.erase(v);
      frontier |= g.neighbors(v) & unseen;
      frontier -= comp;
    }
    out.push_back(comp);
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

std::vector<VertexSet> anticomponents(const Graph& g) { return components(complement(g)); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_forest(const Graph& g) {
  return g.edge_count() + static_cast<int>(components(g).size()) == g.order();
}

}  // namespace listobs
