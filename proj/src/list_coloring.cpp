#include "listobs/list_coloring.hpp"

#include <array>
#include <string>

#include "listobs/errors.hpp"

namespace listobs {

VertexSet ListSystem::with_size(int k) const {
  VertexSet out;
  for (int v = 0; v < size(); ++v) {
    if ((*this)[v].size() == k) out.insert(v);
  }
  return out;
}

bool ListSystem::is_subsystem_of(const ListSystem& o) const {
  if (size() != o.size()) return false;
  for (int v = 0; v < size(); ++v) {
    if (!(*this)[v].is_subset_of(o[v])) return false;
  }
  return true;
}

ListSystem ListSystem::restricted_to(const VertexSet& xs) const {
  std::vector<ColorSet> out;
  for (int v : xs) out.push_back((*this)[v]);
  return ListSystem(std::move(out));
}

bool is_list_coloring(const Graph& g, const ListSystem& l, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.order() || l.size() != g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!l[v].contains(c[static_cast<std::size_t>(v)])) return false;
    for (int u : g.neighbors(v)) {
      if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) return false;
    }
  }
  return true;
}

namespace {

class Solver {
public:
  Solver(const Graph& g, const ListSystem& l) : g_(g) {
    domain_.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) domain_[static_cast<std::size_t>(v)] = l[v].mask();
    color_.assign(static_cast<std::size_t>(g.order()), 0);
  }

  std::optional<Coloring> run() {
    if (search(g_.vertices())) return color_;
    return std::nullopt;
  }

private:
  static int bit_count(std::uint8_t m) { return ColorSet::from_mask(m).size(); }

  // Assigns the color of every singleton domain and removes it from the
  // unassigned neighbours; false on a wipe-out.
  bool propagate(VertexSet& open) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int v : open) {
        std::uint8_t d = domain_[static_cast<std::size_t>(v)];
        if (d == 0) return false;
        if (bit_count(d) != 1) continue;
        int c = ColorSet::from_mask(d).only();
        color_[static_cast<std::size_t>(v)] = c;
        open.erase(v);
        for (int u : g_.neighbors(v) & open) {
          auto& du = domain_[static_cast<std::size_t>(u)];
          du = static_cast<std::uint8_t>(du & ~d);
          if (du == 0) return false;
        }
        progress = true;
      }
    }
    return true;
  }

  bool search(VertexSet open) {
    auto saved = domain_;
    if (!propagate(open)) {
      domain_ = std::move(saved);
      return false;
    }
    if (open.empty()) return true;

    int pick = -1;
    int pick_size = 4;
    int pick_degree = -1;
    for (int v : open) {
      int s = bit_count(domain_[static_cast<std::size_t>(v)]);
      int deg = (g_.neighbors(v) & open).size();
      if (s < pick_size || (s == pick_size && deg > pick_degree)) {
        pick = v;
        pick_size = s;
        pick_degree = deg;
      }
    }
    const std::uint8_t d = domain_[static_cast<std::size_t>(pick)];
    for (int c = 1; c <= 3; ++c) {
      if (!((d >> (c - 1)) & 1u)) continue;
      auto before = domain_;
      domain_[static_cast<std::size_t>(pick)] = static_cast<std::uint8_t>(1u << (c - 1));
      if (search(open)) return true;
      domain_ = std::move(before);
    }
    domain_ = std::move(saved);
    return false;
  }

  const Graph& g_;
  std::vector<std::uint8_t> domain_;
  Coloring color_;
};

void check_aligned(const Graph& g, const ListSystem& l) {
  if (l.size() != g.order()) {
    throw InputError("list system has " + std::to_string(l.size()) + " lists for a graph of order " +
                     std::to_string(g.order()));
  }
}

}  // namespace

std::optional<Coloring> l_colorable(const Graph& g, const ListSystem& l) {
  check_aligned(g, l);
  auto c = Solver(g, l).run();
  if (c && !is_list_coloring(g, l, *c)) throw std::logic_error("solver returned an invalid coloring");
  return c;
}

std::optional<Coloring> three_colorable(const Graph& g) { return l_colorable(g, ListSystem::uniform(g.order())); }

ListSystem update_from(const Graph& g, const ListSystem& l, int w, int v) {
  check_aligned(g, l);
  if (l[w].size() != 1) throw ContractViolation("update_from: |L(w)| must be 1");
  if (!g.adjacent(w, v)) throw ContractViolation("update_from: v must be adjacent to w");
  ListSystem out = l;
  out[v] = l[v] - l[w];
  return out;
}

PathUpdate update_along_path(const Graph& g, const ListSystem& l, std::span<const int> path, int alpha) {
  check_aligned(g, l);
  if (path.empty()) throw ContractViolation("update_along_path: empty path");
  if (!l[path[0]].contains(alpha)) throw ContractViolation("update_along_path: alpha not in L(v1)");
  for (std::size_t i = 1; i < path.size(); ++i) {
    if (!g.adjacent(path[i - 1], path[i])) throw ContractViolation("update_along_path: consecutive vertices not adjacent");
  }

  PathUpdate r;
  r.lists = l;
  r.coloring.assign(static_cast<std::size_t>(g.order()), 0);
  r.colored.assign(path.size(), false);
  r.lists[path[0]] = ColorSet{alpha};
  r.coloring[static_cast<std::size_t>(path[0])] = alpha;
  r.colored[0] = true;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const int prev = path[i - 1];
    const int cur = path[i];
    r.lists[cur] = r.lists[cur] - r.lists[prev];
    const int size = r.lists[cur].size();
    if (size == 0) {
      r.outcome = PathOutcome::kWipedOut;
      r.stop_position = static_cast<int>(i);
      return r;
    }
    if (size != 1) {
      r.outcome = PathOutcome::kStalled;
      r.stop_position = static_cast<int>(i);
      return r;
    }
    r.colored[i] = true;
    r.coloring[static_cast<std::size_t>(cur)] = r.lists[cur].only();
  }
  return r;
}

SetUpdate update_wrt_set(const Graph& g, const ListSystem& l, const VertexSet& x, int rounds) {
  check_aligned(g, l);
  if (rounds < 0 && rounds != kExhaustive) throw InputError("update_wrt_set: rounds must be >= 0 or exhaustive");
  if (!x.is_subset_of(g.vertices())) throw InputError("update_wrt_set: vertex out of range");
  for (int v : x) {
    if (l[v].size() > 1) throw ContractViolation("update_wrt_set: every vertex of X needs |L(x)| <= 1");
  }

  SetUpdate r{l, x, 0, false};
  const VertexSet all = g.vertices();
  while (rounds == kExhaustive || r.rounds < rounds) {
    const VertexSet& settled = r.settled;
    ListSystem next = r.lists;
    bool clash = false;
    for (int v : settled) {
      const ColorSet lv = r.lists[v];
      for (int u : g.neighbors(v) & settled) {
        if (u > v && lv.size() == 1 && r.lists[u] == lv) clash = true;
      }
    }
    for (int a : all - settled) {
      ColorSet la = r.lists[a];
      for (int w : g.neighbors(a) & settled) la = la - r.lists[w];
      next[a] = la;
    }
    VertexSet grown = settled;
    bool empty_list = false;
    for (int v : all) {
      if (next[v].empty()) empty_list = true;
      if (!settled.contains(v) && next[v].size() <= 1 && r.lists[v].size() > 1) grown.insert(v);
    }
    if (clash || empty_list) {
      for (int v : all - grown) next[v] = ColorSet{};
      r.wiped_out = true;
    }
    const bool fixpoint = next == r.lists && grown == r.settled;
    r.lists = std::move(next);
    r.settled = grown;
    ++r.rounds;
    if (fixpoint && rounds == kExhaustive) break;
  }
  return r;
}

SetUpdate precolor_and_update(const Graph& g, const ListSystem& l, std::span<const std::pair<int, int>> assignment,
                              int rounds) {
  check_aligned(g, l);
  ListSystem pre = l;
  VertexSet assigned;
  for (auto [v, c] : assignment) {
    if (v < 0 || v >= g.order()) throw InputError("precolor_and_update: vertex out of range");
    if (!l[v].contains(c)) throw ContractViolation("precolor_and_update: assigned color outside the list");
    pre[v] = ColorSet{c};
    assigned.insert(v);
  }
  if (assignment.empty()) return SetUpdate{l, assigned, 0, false};
  return update_wrt_set(g, pre, assigned, rounds);
}

}  // namespace listobs
