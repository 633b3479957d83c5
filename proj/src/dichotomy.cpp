#include "listobs/dichotomy.hpp"

#include <algorithm>
#include <deque>

namespace listobs {

std::string to_string(StructureCase c) {
  switch (c) {
    case StructureCase::kContainsCycle: return "contains-cycle";
    case StructureCase::kContainsClaw: return "contains-claw";
    case StructureCase::kContains2P2P1: return "contains-2P2+P1";
    case StructureCase::kEquals2P3: return "equals-2P3";
    case StructureCase::kInducedInP6: return "induced-subgraph-of-P6";
    case StructureCase::kInducedInP4PlusKP1: return "induced-subgraph-of-P4+kP1";
  }
  return "unknown";
}

std::string DichotomyVerdict::sentence() const {
  auto finite = [](bool f) { return f ? "finitely many" : "infinitely many"; };
  std::string why;
  switch (structure) {
    case StructureCase::kContainsCycle: why = "H contains the induced cycle " + witness_name; break;
    case StructureCase::kContainsClaw: why = "H contains an induced claw"; break;
    case StructureCase::kContains2P2P1: why = "H contains an induced 2P2+P1"; break;
    case StructureCase::kEquals2P3: why = "H is 2P3"; break;
    case StructureCase::kInducedInP6: why = "H is an induced subgraph of P6"; break;
    case StructureCase::kInducedInP4PlusKP1: why = "H is an induced subgraph of " + witness_name; break;
  }
  return why + ", so there are " + finite(coloring_finite) +
         " H-free 4-vertex-critical graphs (finite exactly when H is induced in P6, 2P3 or some P4+kP1) and " +
         finite(list_finite) +
         " H-free minimal list-obstructions (finite exactly when H is induced in P6 or some P4+kP1).";
}

namespace {

// Vertices of a path component in path order.
std::vector<int> path_order(const Graph& h, const VertexSet& comp) {
  int start = comp.first();
  for (int v : comp) {
    if ((h.neighbors(v) & comp).size() <= 1) {
      start = v;
      break;
    }
  }
  std::vector<int> out{start};
  int prev = -1;
  int cur = start;
  while (true) {
    VertexSet next = h.neighbors(cur) & comp;
    if (prev >= 0) next.erase(prev);
    if (next.empty()) break;
    prev = cur;
    cur = next.first();
    out.push_back(cur);
  }
  return out;
}

// Components, ordered by decreasing size, when every one induces a path.
std::optional<std::vector<std::vector<int>>> path_components(const Graph& h) {
  std::vector<std::vector<int>> out;
  for (const auto& comp : components(h)) {
    int edges = 0;
    for (int v : comp) {
      int d = (h.neighbors(v) & comp).size();
      if (d > 2) return std::nullopt;
      edges += d;
    }
    if (edges / 2 != comp.size() - 1) return std::nullopt;
    out.push_back(path_order(h, comp));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

// A shortest cycle is chordless; returns it in cyclic order.
std::optional<std::vector<int>> shortest_cycle(const Graph& h) {
  std::optional<std::vector<int>> best;
  for (auto [u, v] : h.edges()) {
    std::vector<int> parent(static_cast<std::size_t>(h.order()), -2);
    std::deque<int> queue{u};
    parent[static_cast<std::size_t>(u)] = -1;
    while (!queue.empty() && parent[static_cast<std::size_t>(v)] == -2) {
      int x = queue.front();
      queue.pop_front();
      for (int y : h.neighbors(x)) {
        if ((x == u && y == v) || parent[static_cast<std::size_t>(y)] != -2) continue;
        parent[static_cast<std::size_t>(y)] = x;
        queue.push_back(y);
      }
    }
    if (parent[static_cast<std::size_t>(v)] == -2) continue;
    std::vector<int> cyc;
    for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) cyc.push_back(x);
    if (!best || cyc.size() < best->size()) best = std::move(cyc);
  }
  return best;
}

}  // namespace

std::optional<Embedding> induced_subgraph_of_p6(const Graph& h) {
  auto comps = path_components(h);
  if (!comps) return std::nullopt;
  int need = 0;
  for (const auto& c : *comps) need += static_cast<int>(c.size());
  need += std::max(0, static_cast<int>(comps->size()) - 1);
  if (need > 6) return std::nullopt;
  Embedding e(static_cast<std::size_t>(h.order()));
  int pos = 0;
  for (const auto& c : *comps) {
    for (int v : c) e[static_cast<std::size_t>(v)] = pos++;
    ++pos;
  }
  return e;
}

std::optional<std::pair<int, Embedding>> induced_subgraph_of_p4_kp1(const Graph& h) {
  auto comps = path_components(h);
  if (!comps) return std::nullopt;
  const int big = comps->empty() ? 0 : static_cast<int>(comps->front().size());
  if (big > 4) return std::nullopt;
  if (comps->size() > 1 && (*comps)[1].size() > 1) return std::nullopt;

  // Host positions inside the P4 usable by isolated vertices, given the
  // largest component occupies the start of the path.
  std::vector<int> free_slots;
  std::size_t first_single = 0;
  Embedding e(static_cast<std::size_t>(h.order()));
  if (big >= 2) {
    const auto& c = comps->front();
    for (std::size_t p = 0; p < c.size(); ++p) e[static_cast<std::size_t>(c[p])] = static_cast<int>(p);
    if (big == 2) free_slots = {3};
    first_single = 1;
  } else {
    free_slots = {0, 2};
  }
  int k = 0;
  std::size_t slot = 0;
  for (std::size_t i = first_single; i < comps->size(); ++i) {
    int v = (*comps)[i].front();
    if (slot < free_slots.size()) {
      e[static_cast<std::size_t>(v)] = free_slots[slot++];
    } else {
      e[static_cast<std::size_t>(v)] = 4 + k++;
    }
  }
  return std::pair{k, std::move(e)};
}

DichotomyVerdict classify(const Pattern& pattern) {
  const Graph& h = pattern.graph();
  DichotomyVerdict v;
  if (auto cyc = shortest_cycle(h)) {
    v.structure = StructureCase::kContainsCycle;
    v.witness_name = "C" + std::to_string(cyc->size());
    v.witness = *cyc;
  } else if (auto claw = find_induced(h, Pattern::named("claw"))) {
    v.structure = StructureCase::kContainsClaw;
    v.witness_name = "claw";
    v.witness = *claw;
  } else if (auto hit = find_induced(h, Pattern::named("2P2+P1"))) {
    v.structure = StructureCase::kContains2P2P1;
    v.witness_name = "2P2+P1";
    v.witness = *hit;
  } else {
    auto comps = *path_components(h);
    const bool two_large = comps.size() >= 2 && comps[1].size() >= 2;
    if (two_large && comps.size() == 2 && comps[0].size() == 3 && comps[1].size() == 3) {
      v.structure = StructureCase::kEquals2P3;
      v.witness_name = "2P3";
      v.witness.resize(6);
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t p = 0; p < 3; ++p) v.witness[static_cast<std::size_t>(comps[c][p])] = static_cast<int>(3 * c + p);
      }
    } else if (two_large || (!comps.empty() && comps[0].size() >= 5)) {
      v.structure = StructureCase::kInducedInP6;
      v.witness_name = "P6";
      v.witness = *induced_subgraph_of_p6(h);
    } else {
      auto [k, e] = *induced_subgraph_of_p4_kp1(h);
      v.structure = StructureCase::kInducedInP4PlusKP1;
      v.k = k;
      v.witness_name = "P4+" + std::to_string(k) + "P1";
      v.witness = std::move(e);
    }
  }
  v.coloring_finite = v.structure == StructureCase::kEquals2P3 || v.structure == StructureCase::kInducedInP6 ||
                      v.structure == StructureCase::kInducedInP4PlusKP1;
  v.list_finite = v.structure == StructureCase::kInducedInP6 || v.structure == StructureCase::kInducedInP4PlusKP1;
  return v;
}

}  // namespace listobs
