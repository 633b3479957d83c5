#include "listobs/obstruction.hpp"

#include "listobs/errors.hpp"

namespace listobs {

namespace {

bool colorable_without(const Graph& g, const ListSystem& l, const VertexSet& keep, int v) {
  VertexSet rest = keep;
  rest.erase(v);
  return l_colorable(induced_subgraph(g, rest), l.restricted_to(rest)).has_value();
}

VertexSet non_critical_within(const Graph& g, const ListSystem& l, const VertexSet& keep) {
  VertexSet out;
  for (int v : keep) {
    if (!colorable_without(g, l, keep, v)) out.insert(v);
  }
  return out;
}

}  // namespace

bool is_obstruction(const Graph& g, const ListSystem& l) { return !l_colorable(g, l).has_value(); }

bool is_minimal_obstruction(const Graph& g, const ListSystem& l) {
  if (!is_obstruction(g, l)) return false;
  const VertexSet all = g.vertices();
  for (int v : all) {
    if (!colorable_without(g, l, all, v)) return false;
  }
  return true;
}

VertexSet critical_vertices(const Graph& g, const ListSystem& l) {
  if (!is_obstruction(g, l)) throw ContractViolation("critical_vertices: input is colorable");
  return g.vertices() - non_critical_within(g, l, g.vertices());
}

ExtractedObstruction extract_minimal(const Graph& g, const ListSystem& l) {
  if (!is_obstruction(g, l)) throw ContractViolation("extract_minimal: input is colorable");
  VertexSet keep = g.vertices();
  while (true) {
    int drop = -1;
    for (int v : keep) {
      if (!colorable_without(g, l, keep, v)) {
        drop = v;
        break;
      }
    }
    if (drop < 0) break;
    keep.erase(drop);
  }
  return {keep, induced_subgraph(g, keep), l.restricted_to(keep)};
}

bool dominates(const Graph& g, const ListSystem& l, int u, int v) {
  if (u == v) throw ContractViolation("dominates: u and v must differ");
  return l[u].is_subset_of(l[v]) && g.neighbors(v).is_subset_of(g.neighbors(u));
}

bool is_4_vertex_critical(const Graph& g) { return is_minimal_obstruction(g, ListSystem::uniform(g.order())); }

ObstructionReport analyze(const Graph& g, const ListSystem& l) {
  ObstructionReport r;
  r.coloring = l_colorable(g, l);
  r.colorable = r.coloring.has_value();
  if (r.colorable) return r;
  r.non_critical = non_critical_within(g, l, g.vertices());
  r.minimal = r.non_critical.empty();
  r.extracted = extract_minimal(g, l);
  return r;
}

}  // namespace listobs
