#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "listobs/errors.hpp"
#include "listobs/propagation.hpp"
#include "oracles.hpp"

using namespace listobs;

namespace {

PropConfig cfg(std::vector<int> colors, std::vector<std::pair<int, int>> edges = {}) {
  return PropConfig{std::move(colors), std::move(edges)};
}

std::vector<Pattern> patterns(std::initializer_list<const char*> names) {
  std::vector<Pattern> out;
  for (const char* n : names) out.push_back(Pattern::named(n));
  return out;
}

std::vector<PropConfig> collect(std::span<const Pattern> forbidden, int max_n, int jobs = 1, int split = 7) {
  std::vector<PropConfig> out;
  EnumerationOptions opt;
  opt.max_n = max_n;
  opt.jobs = jobs;
  opt.split_length = split;
  opt.sink = [&](const PropConfig& c) { out.push_back(c); };
  enumerate_propagation_paths(forbidden, opt);
  return out;
}

// Longest sequence of distinct vertices satisfying the propagation-path
// definition, by trying every sequence.
int brute_longest(const Graph& g, const ListSystem& l) {
  int best = 0;
  std::vector<int> seq;
  std::vector<int> col;
  std::function<void()> grow = [&]() {
    best = std::max(best, static_cast<int>(seq.size()));
    for (int u = 0; u < g.order(); ++u) {
      if (std::find(seq.begin(), seq.end(), u) != seq.end()) continue;
      if (!g.adjacent(seq.back(), u)) continue;
      // Updating u from the previous vertex must leave exactly one color.
      if (l[u].size() != 2 || !l[u].contains(col.back())) continue;
      const int cu = (l[u] - ColorSet{col.back()}).only();
      seq.push_back(u);
      col.push_back(cu);
      bool ok = true;
      const int j = static_cast<int>(seq.size());
      for (int i = 3; i <= j - 2 && ok; ++i) {
        if (!g.adjacent(seq[i - 1], u)) continue;
        // S(v_i) = (c_i, c_{i-1}), S(v_j) = (c_j, c_{j-1}).
        const int a = col[i - 1], b = col[i - 2], b2 = col[j - 1], c = col[j - 2];
        ok = b == b2 && a != c && b != c && a != b;
      }
      if (ok) grow();
      seq.pop_back();
      col.pop_back();
    }
  };
  for (int v = 0; v < g.order(); ++v) {
    for (int a : l[v].colors()) {
      seq = {v};
      col = {a};
      grow();
    }
  }
  return best;
}

}  // namespace

TEST_CASE("shape examples") {
  CHECK(shape(cfg({1, 2}), 2) == std::pair{2, 1});
  CHECK(shape(cfg({1, 2, 3}), 3) == std::pair{3, 2});
  CHECK(shape(cfg({1, 3, 1}), 3) == std::pair{1, 3});
  CHECK_THROWS_AS(shape(cfg({1, 2}), 1), ContractViolation);
  CHECK_THROWS_AS(shape(cfg({1, 2}), 3), ContractViolation);
  auto c = cfg({1, 2, 3, 1});
  CHECK(c.list(1) == ColorSet{1});
  CHECK(c.list(3) == ColorSet{2, 3});
  CHECK(c.list(4) == ColorSet{1, 3});
}

TEST_CASE("shape chain examples") {
  CHECK(satisfies_shape_chain(cfg({1, 2, 3, 1})));
  CHECK(satisfies_shape_chain(cfg({1, 2, 3, 1, 2}, {{3, 5}})));
  CHECK_FALSE(satisfies_shape_chain(cfg({1, 2, 3, 2, 3}, {{3, 5}})));
  // Chords at v_1 and v_2 are not subject to the shape chain.
  CHECK(satisfies_shape_chain(cfg({1, 2, 1, 2}, {{1, 4}, {2, 4}})));
}

TEST_CASE("admissible_edge examples") {
  CHECK(admissible_edge(cfg({1, 2, 3}), 1, 3));
  CHECK_FALSE(admissible_edge(cfg({1, 2, 1}), 1, 3));
  CHECK(admissible_edge(cfg({1, 2, 3, 1, 2}), 3, 5));
  CHECK_FALSE(admissible_edge(cfg({1, 2, 1, 3, 2}), 2, 5));
  // c(v_3) = 3 avoids L(v_5) = {1, 2}, but S(v_3) = 32 and S(v_5) = 12 do not chain.
  CHECK_FALSE(admissible_edge(cfg({1, 2, 3, 2, 1}), 3, 5));
  CHECK_THROWS_AS(admissible_edge(cfg({1, 2, 3}), 2, 3), ContractViolation);
}

TEST_CASE("P6-free reference counts: prefix and tail") {
  auto p6 = patterns({"P6"});
  auto small = enumerate_propagation_paths(p6, 8);
  for (int k = 1; k <= 8; ++k) CHECK(small.counts[k] == kP6FreeCounts[k - 1]);
  CHECK(small.counts[0] == 0);
  auto two = enumerate_propagation_paths(p6, 2);
  CHECK(two.counts == std::vector<std::uint64_t>{0, 1, 2});
  CHECK(two.total == 3);
}

TEST_CASE("no forbidden pattern: six configurations on three vertices") {
  auto none = oracle::propagation_configs(3, {});
  CHECK(none.size() == 6);
  auto r = enumerate_propagation_paths(std::span<const Pattern>{}, 3);
  CHECK(r.counts[3] == none.size());
}

TEST_CASE("depth-first counts and configurations match the brute-force generator") {
  const std::vector<std::vector<const char*>> sets = {
      {},     {"P6"}, {"P5"},   {"P4"},     {"P3"},       {"K2"},       {"K3"},         {"C4"},
      {"C5"}, {"claw"}, {"2P2+P1"}, {"2P3"}, {"P4+P1"}, {"P5", "C5"}, {"K3", "P5"}, {"C4", "claw", "P6"}};
  for (const auto& names : sets) {
    std::vector<Pattern> forbidden;
    std::vector<Graph> graphs;
    for (const char* n : names) {
      forbidden.push_back(Pattern::named(n));
      graphs.push_back(forbidden.back().graph());
    }
    auto emitted = collect(forbidden, 6);
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(n);
      const std::string label = names.empty() ? "none" : names[0];
      CAPTURE(label);
      std::set<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> expected;
      for (auto& b : oracle::propagation_configs(n, graphs)) expected.emplace(b.colors, b.chords);
      std::set<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>> got;
      for (const auto& c : emitted) {
        if (c.length() == n) got.emplace(c.colors, c.extra_edges);
      }
      CHECK(got.size() == expected.size());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("every emitted P6-free configuration passes the independent validator") {
  auto p6 = patterns({"P6"});
  auto all = collect(p6, 25);
  CHECK(all.size() == 49605);
  std::vector<std::uint64_t> tally(26, 0);
  for (const auto& c : all) {
    ++tally[static_cast<std::size_t>(c.length())];
    CHECK(validate_config(c, p6));
  }
  for (int k = 1; k <= 25; ++k) CHECK(tally[k] == kP6FreeCounts[k - 1]);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("validator rejects broken configurations") {
  auto p6 = patterns({"P6"});
  CHECK(validate_config(cfg({1, 2, 3}, {{1, 3}}), p6));
  CHECK_FALSE(validate_config(cfg({2, 1, 3}), p6));                   // c(v_1) must be 1
  CHECK_FALSE(validate_config(cfg({1, 1, 3}), p6));                   // consecutive colors equal
  CHECK_FALSE(validate_config(cfg({1, 2, 1}, {{1, 3}}), p6));         // c(v_1) in L(v_3)
  CHECK_FALSE(validate_config(cfg({1, 2, 3, 2, 3}, {{3, 5}}), p6));   // shapes do not chain
  CHECK_FALSE(validate_config(cfg({1, 2, 3, 1, 2, 3}), p6));          // the path is a P6
  CHECK_FALSE(validate_config(cfg({1, 2, 3}, {{1, 2}}), p6));         // not an extra edge
  CHECK_FALSE(validate_config(cfg({1, 2, 4}), p6));                   // color outside the palette
}

TEST_CASE("configuration lines round trip") {
  auto c = cfg({1, 2, 3, 1, 2}, {{1, 3}, {3, 5}});
  CHECK(format_config(c) == "5 12312 1-3,3-5");
  CHECK(parse_config(format_config(c)) == c);
  CHECK(format_config(cfg({1})) == "1 1 -");
  CHECK(parse_config("1 1 -") == cfg({1}));
  for (const auto& x : collect(patterns({"P5"}), 10)) CHECK(parse_config(format_config(x)) == x);
  CHECK_THROWS_AS(parse_config("3 12 -"), ParseError);
  CHECK_THROWS_AS(parse_config("3 123 1-x"), ParseError);
  CHECK_THROWS_AS(parse_config(""), ParseError);
}

TEST_CASE("counts and streams do not depend on the schedule") {
  auto forbidden = patterns({"P6"});
  auto base = collect(forbidden, 12, 1, 7);
  auto base_counts = enumerate_propagation_paths(forbidden, 12).counts;
  for (int jobs : {2, 3}) {
    for (int split : {2, 6, 20}) {
      EnumerationOptions opt;
      opt.max_n = 12;
      opt.jobs = jobs;
      opt.split_length = split;
      CHECK(enumerate_propagation_paths(forbidden, opt).counts == base_counts);
      CHECK(collect(forbidden, 12, jobs, split) == base);
    }
  }
}

TEST_CASE("maximum lengths") {
  // The brute-force generator finds triangles 1-2-3 and 1-3-2 closed by the
  // chord v_1 v_3 on three vertices and nothing on four.
  std::vector<Graph> p3{path_graph(3)};
  CHECK(oracle::propagation_configs(3, p3).size() == 2);
  CHECK(oracle::propagation_configs(4, p3).empty());
  CHECK(max_propagation_length(patterns({"P3"})) == 3);
  std::vector<Pattern> k2{Pattern::explicit_graph(complete_graph(2))};
  CHECK(max_propagation_length(k2) == 1);
  CHECK(max_propagation_length(patterns({"P5"})) == enumerate_propagation_paths(patterns({"P5"}), 64).max_length);
}

TEST_CASE("enumeration guards") {
  auto p6 = patterns({"P6"});
  CHECK_THROWS_AS(enumerate_propagation_paths(p6, 65), InputError);
  CHECK_THROWS_AS(enumerate_propagation_paths(p6, 0), InputError);
  EnumerationOptions bad;
  bad.jobs = 0;
  CHECK_THROWS_AS(enumerate_propagation_paths(p6, bad), InputError);
  CHECK_THROWS_AS(max_propagation_length(std::span<const Pattern>{}, 1, 100000), ResourceError);
  auto r = enumerate_propagation_paths(p6, 30);
  for (int k = r.max_length + 1; k <= 30; ++k) CHECK(r.counts[k] == 0);
  CHECK(r.max_length == 24);
}

TEST_CASE("instance-level propagation paths") {
  // Each accepted configuration is itself a propagation path of its graph.
  for (const auto& c : collect(patterns({"P6"}), 9)) {
    std::vector<ColorSet> lists;
    for (int i = 1; i <= c.length(); ++i) lists.push_back(c.list(i));
    CHECK(longest_propagation_path(c.graph(), ListSystem(lists)) >= c.length());
  }
  std::mt19937_64 rng(51);
  const std::vector<ColorSet> small{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2}, {2, 3}, {1, 3}};
  for (int t = 0; t < 400; ++t) {
    const int n = 1 + t % 8;
    Graph g = oracle::random_graph(rng, n, 0.45);
    std::vector<ColorSet> lists;
    for (int v = 0; v < n; ++v) lists.push_back(small[rng() % small.size()]);
    ListSystem l(lists);
    CHECK(longest_propagation_path(g, l) == brute_longest(g, l));
  }
  CHECK_THROWS_AS(longest_propagation_path(path_graph(2), ListSystem::uniform(2)), ContractViolation);
}
