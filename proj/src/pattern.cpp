#include "listobs/pattern.hpp"

#include <cctype>
#include <charconv>

#include "listobs/errors.hpp"
#include "listobs/graph6.hpp"

namespace listobs {

namespace {

int detect_path_order(const Graph& g) {
  if (g.order() == 0 || !is_connected(g) || g.edge_count() != g.order() - 1) return 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return 0;
  }
  return g.order();
}

std::optional<int> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::optional<Graph> parse_term(std::string_view term) {
  std::size_t i = 0;
  while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
  int count = 1;
  if (i > 0) {
    auto c = parse_int(term.substr(0, i));
    if (!c || *c < 0) return std::nullopt;
    count = *c;
  }
  std::string_view base = term.substr(i);
  Graph unit;
  if (base == "claw") {
    unit = claw_graph();
  } else if (base.size() >= 2 && (base[0] == 'P' || base[0] == 'C' || base[0] == 'K')) {
    auto t = parse_int(base.substr(1));
    if (!t || *t < 1 || *t > kMaxVertices) return std::nullopt;
    if (base[0] == 'P') {
      unit = path_graph(*t);
    } else if (base[0] == 'K') {
      unit = complete_graph(*t);
    } else {
      if (*t < 3) return std::nullopt;
      unit = cycle_graph(*t);
    }
  } else {
    return std::nullopt;
  }
  if (static_cast<long>(count) * unit.order() > kMaxVertices) return std::nullopt;
  Graph out;
  for (int c = 0; c < count; ++c) out = disjoint_union(out, unit);
  return out;
}

}  // namespace

Pattern::Pattern(std::string name, Graph graph)
    : name_(std::move(name)), graph_(std::move(graph)), path_order_(detect_path_order(graph_)) {}

std::optional<Pattern> Pattern::try_named(std::string_view name) {
  if (name.empty()) return std::nullopt;
  Graph g;
  std::size_t start = 0;
  while (true) {
    std::size_t plus = name.find('+', start);
    std::string_view term = name.substr(start, plus == std::string_view::npos ? plus : plus - start);
    auto part = parse_term(term);
    if (!part || g.order() + part->order() > kMaxVertices) return std::nullopt;
    g = disjoint_union(g, *part);
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return Pattern(std::string(name), std::move(g));
}

Pattern Pattern::named(std::string_view name) {
  auto p = try_named(name);
  if (!p) throw InputError("unknown pattern name '" + std::string(name) + "'");
  return *std::move(p);
}

Pattern Pattern::explicit_graph(Graph graph) {
  std::string name = write_graph6(graph);
  return Pattern(std::move(name), std::move(graph));
}

Pattern Pattern::p4_plus_k_p1(int k) {
  if (k < 0) throw InputError("P4+kP1 needs k >= 0");
  return Pattern("P4+" + std::to_string(k) + "P1", disjoint_union(path_graph(4), edgeless_graph(k)));
}

Pattern parse_pattern(std::string_view text) {
  if (auto p = Pattern::try_named(text)) return *std::move(p);
  try {
    return Pattern::explicit_graph(parse_graph6(text));
  } catch (const ParseError&) {
    throw InputError("'" + std::string(text) + "' is neither a pattern name nor a graph6 string");
  }
}

}  // namespace listobs
