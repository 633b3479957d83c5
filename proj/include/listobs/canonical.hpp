#pragma once

#include <span>
#include <string>
#include <vector>

#include "listobs/graph.hpp"

namespace listobs {

struct CanonicalLabeling {
  // order[p] is the vertex placed at canonical position p.
  std::vector<int> order;
  // Byte string: order, vertex classes in canonical order, packed upper
  // triangle of the relabelled adjacency matrix.
  std::string form;
};

// Individualisation-refinement search with automorphism pruning. Two classed
// graphs get equal forms iff a class-preserving isomorphism exists.
// `vertex_classes` must have one entry per vertex, each in [0, 65535].
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> vertex_classes);
std::string canonical_form(const Graph& g, std::span<const int> vertex_classes);
std::string canonical_form(const Graph& g);

}  // namespace listobs
