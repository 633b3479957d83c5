#include "listobs/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "listobs/errors.hpp"
#include "listobs/induced.hpp"
#include "listobs/obstruction.hpp"
#include "listobs/pattern.hpp"

namespace listobs {

bool FamilyReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyCheck& p) { return p.passed; });
}

Graph gen_gr(int r) {
  if (r < 1) throw InputError("G_r needs r >= 1");
  if (3L * r + 1 > kMaxVertices) throw SizeError("G_r has more than 128 vertices");
  const int n = 3 * r + 1;
  std::set<int> offsets;
  auto add_offset = [&](int d) {
    d = ((d % n) + n) % n;
    if (d != 0) offsets.insert(d);
  };
  add_offset(1);
  add_offset(-1);
  for (int j = 0; j < r; ++j) {
    add_offset(3 * j + 2);
    add_offset(-(3 * j + 2));
  }
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int d : offsets) {
      const int k = (i + d) % n;
      if (!g.adjacent(i, k)) g.add_edge(i, k);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (g.degree(i) != static_cast<int>(offsets.size())) throw std::logic_error("G_r degree self-check failed");
  }
  return g;
}

ListInstance gen_hr(int r) {
  if (r < 1) throw InputError("H_r needs r >= 1");
  if (3L * r - 1 > kMaxVertices) throw SizeError("H_r has more than 128 vertices");
  const int n = 3 * r - 1;
  Graph g = path_graph(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      if (i % 3 == 2 && j % 3 == 1) g.add_edge(i - 1, j - 1);
    }
  }
  ListSystem lists = ListSystem::uniform(n);
  for (int i = 1; i <= n; ++i) {
    ColorSet l;
    if (i == 1 || i == n) {
      l = ColorSet{1};
    } else if (i % 3 == 0) {
      l = ColorSet{2, 3};
    } else if (i % 3 == 1) {
      l = ColorSet{1, 3};
    } else {
      l = ColorSet{1, 2};
    }
    lists[i - 1] = l;
  }
  return {std::move(g), std::move(lists)};
}

namespace {

PropertyCheck pattern_free(const Graph& g, const char* name) {
  PropertyCheck p;
  p.name = std::string(name) + "-free";
  auto hit = find_induced(g, Pattern::named(name));
  p.passed = !hit.has_value();
  if (hit) {
    p.witness = *hit;
    p.detail = std::string("induced ") + name + " found";
  }
  return p;
}

PropertyCheck critical_check(const Graph& g, const ListSystem& l, const char* name) {
  PropertyCheck p;
  p.name = name;
  if (auto c = l_colorable(g, l)) {
    p.detail = "colorable";
    p.witness = *c;
    return p;
  }
  VertexSet non_critical = g.vertices() - critical_vertices(g, l);
  p.passed = non_critical.empty();
  if (!p.passed) {
    p.detail = "non-critical vertices present";
    p.witness = non_critical.to_vector();
  }
  return p;
}

}  // namespace

FamilyReport verify_gr(int r) {
  const Graph g = gen_gr(r);
  FamilyReport rep{"Gr", r, {}};
  rep.properties.push_back(critical_check(g, ListSystem::uniform(g.order()), "4-vertex-critical"));
  rep.properties.push_back(pattern_free(g, "2P2+P1"));
  rep.properties.push_back(pattern_free(g, "P7"));

  // G_r - v_0 renumbers v_i to i-1.
  PropertyCheck forced;
  forced.name = "unique-coloring-of-Gr-minus-v0";
  const Graph rest = delete_vertex(g, 0);
  const std::pair<int, int> triangle[] = {{0, 1}, {1, 2}, {2, 3}};
  auto upd = precolor_and_update(rest, ListSystem::uniform(rest.order()), triangle, kExhaustive);
  Coloring c(static_cast<std::size_t>(rest.order()), 0);
  bool all_forced = !upd.wiped_out;
  for (int v = 0; v < rest.order(); ++v) {
    if (upd.lists[v].size() != 1) {
      all_forced = false;
    } else {
      c[static_cast<std::size_t>(v)] = upd.lists[v].only();
    }
  }
  const int last = c.back();
  forced.passed = all_forced && last == 3 && is_list_coloring(rest, ListSystem::uniform(rest.order()), c);
  forced.witness = c;
  forced.detail = forced.passed ? "v_" + std::to_string(3 * r) + " forced to color " + std::to_string(last)
                                : "updating from the triangle does not force a proper coloring";
  rep.properties.push_back(std::move(forced));
  return rep;
}

FamilyReport verify_hr(int r) {
  const auto [g, l] = gen_hr(r);
  const int n = g.order();
  FamilyReport rep{"Hr", r, {}};
  rep.properties.push_back(critical_check(g, l, "minimal-list-obstruction"));
  rep.properties.push_back(pattern_free(g, "2P3"));

  // Deleting v_i: color 1 on v_1 updated forward to v_{i-1}, color 1 on
  // v_{3r-1} updated backward to v_{i+1}.
  PropertyCheck split;
  split.name = "deletion-colorings";
  split.passed = true;
  for (int del = 0; del < n && split.passed; ++del) {
    Coloring c(static_cast<std::size_t>(n), 0);
    std::vector<int> forward(static_cast<std::size_t>(del));
    std::iota(forward.begin(), forward.end(), 0);
    std::vector<int> backward(static_cast<std::size_t>(n - 1 - del));
    for (std::size_t k = 0; k < backward.size(); ++k) backward[k] = n - 1 - static_cast<int>(k);
    for (const auto* side : {&forward, &backward}) {
      if (side->empty()) continue;
      auto run = update_along_path(g, l, *side, 1);
      if (run.outcome != PathOutcome::kComplete) split.passed = false;
      for (int v : *side) c[static_cast<std::size_t>(v)] = run.coloring[static_cast<std::size_t>(v)];
    }
    VertexSet keep = g.vertices();
    keep.erase(del);
    Coloring kept;
    for (int v : keep) kept.push_back(c[static_cast<std::size_t>(v)]);
    if (!split.passed || !is_list_coloring(induced_subgraph(g, keep), l.restricted_to(keep), kept)) {
      split.passed = false;
      split.detail = "two-sided coloring fails after deleting v_" + std::to_string(del + 1);
      split.witness = {del};
    }
  }
  rep.properties.push_back(std::move(split));
  return rep;
}

}  // namespace listobs
