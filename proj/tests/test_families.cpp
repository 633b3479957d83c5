#include <doctest.h>

#include <set>

#include "listobs/canonical.hpp"
#include "listobs/errors.hpp"
#include "listobs/families.hpp"
#include "listobs/obstruction.hpp"
#include "listobs/pattern.hpp"
#include "oracles.hpp"

using namespace listobs;

namespace {

// Adjacency of G_r expanded from the index-offset rule, pairs (min, max).
std::set<Edge> gr_rule(int r) {
  const int n = 3 * r + 1;
  std::set<Edge> e;
  auto add = [&](int a, int b) {
    a = ((a % n) + n) % n;
    b = ((b % n) + n) % n;
    if (a != b) e.insert({std::min(a, b), std::max(a, b)});
  };
  for (int i = 0; i < n; ++i) {
    add(i, i - 1);
    add(i, i + 1);
    for (int j = 0; j < r; ++j) add(i, i + 3 * j + 2);
  }
  return e;
}

// H_r chords from the residue rule, 1-based.
std::set<Edge> hr_chords(int r) {
  std::set<Edge> e;
  for (int i = 1; i <= 3 * r - 1; ++i) {
    for (int j = i + 2; j <= 3 * r - 1; ++j) {
      if (i % 3 == 2 && j % 3 == 1) e.insert({i, j});
    }
  }
  return e;
}

const PropertyCheck& property(const FamilyReport& rep, const std::string& name) {
  for (const auto& p : rep.properties) {
    if (p.name == name) return p;
  }
  FAIL("missing property " << name);
  return rep.properties.front();
}

}  // namespace

TEST_CASE("G_r matches the offset rule") {
  CHECK(gen_gr(1) == complete_graph(4));
  Graph g5 = gen_gr(5);
  CHECK(g5.order() == 16);
  CHECK(g5.edge_count() == 56);
  for (int v = 0; v < 16; ++v) CHECK(g5.degree(v) == 7);
  for (int r = 1; r <= 12; ++r) {
    Graph g = gen_gr(r);
    auto edges = g.edges();
    CHECK(std::set<Edge>(edges.begin(), edges.end()) == gr_rule(r));
  }
  CHECK_THROWS_AS(gen_gr(0), InputError);
  CHECK_NOTHROW(gen_gr(42));
  CHECK_THROWS_AS(gen_gr(43), SizeError);
}

TEST_CASE("G_r is invariant under the cyclic shift") {
  for (int r = 1; r <= 10; ++r) {
    Graph g = gen_gr(r);
    const int n = g.order();
    std::vector<int> shift(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) shift[v] = (v + 1) % n;
    CHECK(relabel(g, shift) == g);
  }
}

TEST_CASE("verify_Gr passes for r = 1..6") {
  for (int r = 1; r <= 6; ++r) {
    CAPTURE(r);
    auto rep = verify_gr(r);
    CHECK(rep.family == "Gr");
    CHECK(rep.r == r);
    CHECK(rep.properties.size() == 4);
    CHECK(rep.passed());
  }
  auto rep5 = verify_gr(5);
  const auto& forced = property(rep5, "unique-coloring-of-Gr-minus-v0");
  CHECK(forced.passed);
  CHECK(forced.detail == "v_15 forced to color 3");
}

TEST_CASE("G_r pattern-freeness against brute force") {
  for (int r = 1; r <= 3; ++r) {
    Graph g = gen_gr(r);
    CHECK_FALSE(oracle::contains(g, Pattern::named("2P2+P1").graph()));
    CHECK_FALSE(oracle::contains(g, path_graph(7)));
    CHECK(oracle::four_vertex_critical(g));
  }
}

TEST_CASE("H_r matches the chord and list rules") {
  auto h1 = gen_hr(1);
  CHECK(h1.graph == path_graph(2));
  CHECK(h1.lists == ListSystem{{1}, {1}});
  auto h5 = gen_hr(5);
  CHECK(h5.graph.order() == 14);
  CHECK(h5.graph.adjacent(1, 6));       // v_2 v_7
  CHECK_FALSE(h5.graph.adjacent(1, 5)); // v_2 v_6
  for (int r = 1; r <= 10; ++r) {
    auto h = gen_hr(r);
    const int n = 3 * r - 1;
    REQUIRE(h.graph.order() == n);
    std::set<Edge> expected;
    for (int i = 1; i < n; ++i) expected.insert({i, i + 1});
    for (auto e : hr_chords(r)) expected.insert(e);
    std::set<Edge> got;
    for (auto [u, v] : h.graph.edges()) got.insert({u + 1, v + 1});
    CHECK(got == expected);
    for (int i = 1; i <= n; ++i) {
      ColorSet want = i == 1 || i == n ? ColorSet{1}
                      : i % 3 == 0     ? ColorSet{2, 3}
                      : i % 3 == 1     ? ColorSet{1, 3}
                                       : ColorSet{1, 2};
      CHECK(h.lists[i - 1] == want);
    }
  }
  CHECK_THROWS_AS(gen_hr(0), InputError);
  CHECK_NOTHROW(gen_hr(43));
  CHECK_THROWS_AS(gen_hr(44), SizeError);
}

TEST_CASE("H_r minus its first three vertices is H_{r-1}") {
  for (int r = 2; r <= 10; ++r) {
    Graph h = gen_hr(r).graph;
    VertexSet tail = h.vertices() - VertexSet{0, 1, 2};
    CHECK(canonical_form(induced_subgraph(h, tail)) == canonical_form(gen_hr(r - 1).graph));
  }
}

TEST_CASE("verify_Hr passes for r = 1..8") {
  for (int r = 1; r <= 8; ++r) {
    CAPTURE(r);
    auto rep = verify_hr(r);
    CHECK(rep.family == "Hr");
    CHECK(rep.properties.size() == 3);
    CHECK(rep.passed());
    auto h = gen_hr(r);
    CHECK(is_minimal_obstruction(h.graph, h.lists));
  }
  auto h5 = gen_hr(5);
  VertexSet keep = h5.graph.vertices() - VertexSet{6};  // delete v_7
  CHECK(l_colorable(induced_subgraph(h5.graph, keep), h5.lists.restricted_to(keep)).has_value());
}

TEST_CASE("H_r is 2P3-free by brute force") {
  for (int r = 1; r <= 4; ++r) CHECK_FALSE(oracle::contains(gen_hr(r).graph, Pattern::named("2P3").graph()));
  // 2P3 appears once the chords are removed.
  Graph bare = path_graph(11);
  CHECK(oracle::contains(bare, Pattern::named("2P3").graph()));
}

TEST_CASE("family reports are conjunctions") {
  FamilyReport rep{"Gr", 1, {{"a", true, "", {}}, {"b", false, "", {}}}};
  CHECK_FALSE(rep.passed());
  rep.properties[1].passed = true;
  CHECK(rep.passed());
}
