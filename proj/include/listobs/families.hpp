#pragma once

#include <string>
#include <vector>

#include "listobs/graph.hpp"
#include "listobs/list_coloring.hpp"

namespace listobs {

struct PropertyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  // Vertex indices backing the verdict: an embedded pattern, a coloring, or
  // offending vertices, depending on the property.
  std::vector<int> witness;
};

struct FamilyReport {
  std::string family;
  int r = 0;
  std::vector<PropertyCheck> properties;

  bool passed() const;
};

struct ListInstance {
  Graph graph;
  ListSystem lists;
};

// v_0..v_{3r} (vertex i is v_i); v_i is adjacent to v_{i-1}, v_{i+1} and
// v_{i+3j+2} for 0 <= j < r, indices mod 3r+1.
Graph gen_gr(int r);

// v_1..v_{3r-1} (vertex i-1 is v_i): the path plus chords v_i v_j with
// i <= j-2, i = 2 mod 3, j = 1 mod 3. Ends get {1}; interior lists cycle
// {1,2}, {2,3}, {1,3} by residue 2, 0, 1 mod 3.
ListInstance gen_hr(int r);

// 4-vertex-critical, 2P2+P1-free, P7-free, and a forced (hence unique up to
// color permutation) 3-coloring of G_r - v_0 from the triangle v_1 v_2 v_3.
FamilyReport verify_gr(int r);

// Minimal list-obstruction, 2P3-free, and the two-sided path colorings of
// every single-vertex deletion.
FamilyReport verify_hr(int r);

}  // namespace listobs
