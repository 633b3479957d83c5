#pragma once

#include <optional>

#include "listobs/graph.hpp"
#include "listobs/list_coloring.hpp"

namespace listobs {

struct ExtractedObstruction {
  VertexSet vertices;  // in the input's labelling
  Graph graph;         // induced on `vertices`, renumbered ascending
  ListSystem lists;
};

struct ObstructionReport {
  bool colorable = false;
  std::optional<Coloring> coloring;
  bool minimal = false;
  VertexSet non_critical;
  std::optional<ExtractedObstruction> extracted;
};

bool is_obstruction(const Graph& g, const ListSystem& l);

// Uncolorable, and colorable after deleting any single vertex. Single-vertex
// deletions suffice: every proper induced subgraph lies inside some G - v.
bool is_minimal_obstruction(const Graph& g, const ListSystem& l);

// Vertices v of an obstruction with (G - v, L) colorable.
VertexSet critical_vertices(const Graph& g, const ListSystem& l);

// Deletes the lowest-indexed non-critical vertex until the remainder is a
// minimal obstruction.
ExtractedObstruction extract_minimal(const Graph& g, const ListSystem& l);

// L(u) is a subset of L(v) and N(v) is a subset of N(u).
bool dominates(const Graph& g, const ListSystem& l, int u, int v);

// Not 3-colorable, and every single-vertex deletion is.
bool is_4_vertex_critical(const Graph& g);

ObstructionReport analyze(const Graph& g, const ListSystem& l);

}  // namespace listobs
