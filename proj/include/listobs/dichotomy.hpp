#pragma once

#include <optional>
#include <string>
#include <utility>

#include "listobs/induced.hpp"
#include "listobs/pattern.hpp"

namespace listobs {

enum class StructureCase {
  kContainsCycle,
  kContainsClaw,
  kContains2P2P1,
  kEquals2P3,
  kInducedInP6,
  kInducedInP4PlusKP1,
};

std::string to_string(StructureCase c);

struct DichotomyVerdict {
  StructureCase structure = StructureCase::kInducedInP6;
  // Finitely many H-free 4-vertex-critical graphs.
  bool coloring_finite = false;
  // Finitely many H-free minimal list-obstructions.
  bool list_finite = false;
  // Minimal k for the P4+kP1 case, -1 otherwise.
  int k = -1;
  // Name of the witnessing structure ("C4", "claw", "2P2+P1", "2P3", "P6",
  // "P4+2P1") and the embedding that exhibits it: for the first three cases
  // pattern -> H, for the containment cases H -> host.
  std::string witness_name;
  Embedding witness;

  std::string sentence() const;
};

// Case split: cycle, claw, 2P2+P1 (checked in that order), otherwise every
// component is a path and H is 2P3 or lies in P6 or in P4+kP1.
DichotomyVerdict classify(const Pattern& h);

// Embedding of H into P6 (host vertices 0..5 along the path), when one exists.
std::optional<Embedding> induced_subgraph_of_p6(const Graph& h);

// Smallest k with H induced in P4+kP1 (host: path 0..3, isolated 4..3+k) and
// an embedding, when H is induced in some P4+kP1.
std::optional<std::pair<int, Embedding>> induced_subgraph_of_p4_kp1(const Graph& h);

}  // namespace listobs
