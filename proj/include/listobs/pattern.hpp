#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "listobs/graph.hpp"

namespace listobs {

// A forbidden induced subgraph, either named or given explicitly.
//
// Names are '+'-separated terms, each an optional multiplicity followed by
// one of Pt, Ct, Kt or "claw": "P6", "C5", "2P2+P1", "2P3", "P4+3P1".
class Pattern {
public:
  Pattern(std::string name, Graph graph);

  // Throws InputError on unknown names.
  static Pattern named(std::string_view name);
  static std::optional<Pattern> try_named(std::string_view name);
  static Pattern explicit_graph(Graph graph);
  // P4 plus k isolated vertices.
  static Pattern p4_plus_k_p1(int k);

  const std::string& name() const { return name_; }
  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }

  // t when the pattern graph is the path P_t, otherwise 0.
  int path_order() const { return path_order_; }

private:
  std::string name_;
  Graph graph_;
  int path_order_ = 0;
};

// Accepts a pattern name or, failing that, a graph6 string.
Pattern parse_pattern(std::string_view text);

}  // namespace listobs
