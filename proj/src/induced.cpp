#include "listobs/induced.hpp"

#include <algorithm>

#include "listobs/errors.hpp"

namespace listobs {

namespace {

class PathSearch {
public:
  PathSearch(std::span<const VertexSet> rows, int t) : rows_(rows), t_(t) {}

  std::optional<std::vector<int>> from_endpoint() {
    for (int s = 0; s < static_cast<int>(rows_.size()); ++s) {
      start(s);
      if (grow(false)) return result();
    }
    return std::nullopt;
  }

  std::optional<std::vector<int>> through(int a) {
    start(a);
    if (grow(true)) return result();
    return std::nullopt;
  }

private:
  void start(int a) {
    right_.assign(1, a);
    left_.clear();
    members_ = VertexSet{};
    members_.insert(a);
  }

  // Extensions of end `e`: neighbours of e outside the path and outside the
  // neighbourhoods of every other path vertex.
  VertexSet candidates(int e) const {
    VertexSet blocked = members_;
    for (int v : members_) {
      if (v != e) blocked |= rows_[static_cast<std::size_t>(v)];
    }
    return rows_[static_cast<std::size_t>(e)] - blocked;
  }

  // Phase one extends the right arm; `may_switch` allows a later switch to
  // extending the left arm beyond the anchor.
  bool grow(bool may_switch) {
    if (members_.size() == t_) return true;
    for (int u : candidates(right_.back())) {
      right_.push_back(u);
      members_.insert(u);
      if (grow(may_switch)) return true;
      members_.erase(u);
      right_.pop_back();
    }
    return may_switch && right_.size() > 1 && grow_left();
  }

  bool grow_left() {
    if (members_.size() == t_) return true;
    int e = left_.empty() ? right_.front() : left_.back();
    for (int u : candidates(e)) {
      left_.push_back(u);
      members_.insert(u);
      if (grow_left()) return true;
      members_.erase(u);
      left_.pop_back();
    }
    return false;
  }

  std::vector<int> result() const {
    std::vector<int> out(left_.rbegin(), left_.rend());
    out.insert(out.end(), right_.begin(), right_.end());
    return out;
  }

  std::span<const VertexSet> rows_;
  int t_;
  std::vector<int> right_;
  std::vector<int> left_;
  VertexSet members_;
};

class GenericMatcher {
public:
  GenericMatcher(std::span<const VertexSet> rows, const Graph& h) : rows_(rows), h_(h) {
    host_degree_.reserve(rows.size());
    for (const auto& r : rows) host_degree_.push_back(r.size());
  }

  std::optional<Embedding> run(int first_pattern_vertex, VertexSet first_candidates) {
    build_order(first_pattern_vertex);
    image_.assign(order_.size(), -1);
    used_ = VertexSet{};
    if (!place(0, first_candidates)) return std::nullopt;
    Embedding out(order_.size());
    for (std::size_t p = 0; p < order_.size(); ++p) out[static_cast<std::size_t>(order_[p])] = image_[p];
    return out;
  }

private:
  // Greedy order: each next pattern vertex has the most neighbours among
  // those already placed, ties broken by degree then index.
  void build_order(int first) {
    const int k = h_.order();
    order_.clear();
    VertexSet placed;
    order_.push_back(first);
    placed.insert(first);
    while (static_cast<int>(order_.size()) < k) {
      int best = -1;
      int best_links = -1;
      int best_degree = -1;
      for (int u = 0; u < k; ++u) {
        if (placed.contains(u)) continue;
        int links = (h_.neighbors(u) & placed).size();
        int deg = h_.degree(u);
        if (links > best_links || (links == best_links && deg > best_degree)) {
          best = u;
          best_links = links;
          best_degree = deg;
        }
      }
      order_.push_back(best);
      placed.insert(best);
    }
  }

  bool place(std::size_t p, VertexSet first_candidates) {
    if (p == order_.size()) return true;
    const int u = order_[p];
    VertexSet cand = p == 0 ? first_candidates : VertexSet::range(static_cast<int>(rows_.size()));
    cand -= used_;
    for (std::size_t q = 0; q < p; ++q) {
      const auto& row = rows_[static_cast<std::size_t>(image_[q])];
      if (h_.adjacent(u, order_[q])) {
        cand &= row;
      } else {
        cand -= row;
      }
    }
    const int need = h_.degree(u);
    for (int x : cand) {
      if (host_degree_[static_cast<std::size_t>(x)] < need) continue;
      image_[p] = x;
      used_.insert(x);
      if (place(p + 1, first_candidates)) return true;
      used_.erase(x);
    }
    image_[p] = -1;
    return false;
  }

  std::span<const VertexSet> rows_;
  const Graph& h_;
  std::vector<int> host_degree_;
  std::vector<int> order_;
  std::vector<int> image_;
  VertexSet used_;
};

}  // namespace

std::optional<std::vector<int>> find_induced_path(std::span<const VertexSet> rows, int t, int through) {
  if (t < 1) throw InputError("induced path needs t >= 1");
  const int n = static_cast<int>(rows.size());
  if (t > n) return std::nullopt;
  if (through >= n) throw InputError("anchor vertex out of range");
  PathSearch search(rows, t);
  return through >= 0 ? search.through(through) : search.from_endpoint();
}

std::optional<Embedding> find_induced_generic(std::span<const VertexSet> rows, const Graph& pattern, int anchor) {
  const int n = static_cast<int>(rows.size());
  const int k = pattern.order();
  if (anchor >= n) throw InputError("anchor vertex out of range");
  if (k > n) return std::nullopt;
  if (k == 0) return anchor >= 0 ? std::nullopt : std::optional<Embedding>(Embedding{});
  GenericMatcher matcher(rows, pattern);
  if (anchor < 0) {
    // The first pattern vertex may be any vertex of maximum degree.
    int first = 0;
    for (int u = 1; u < k; ++u) {
      if (pattern.degree(u) > pattern.degree(first)) first = u;
    }
    return matcher.run(first, VertexSet::range(n));
  }
  VertexSet only;
  only.insert(anchor);
  for (int u = 0; u < k; ++u) {
    if (auto e = matcher.run(u, only)) return e;
  }
  return std::nullopt;
}

std::optional<Embedding> find_induced(const Graph& g, const Pattern& h) {
  if (h.path_order() == 0) return find_induced_generic(g.rows(), h.graph());
  auto host_path = find_induced_path(g.rows(), h.path_order());
  if (!host_path) return std::nullopt;
  // Explicit path patterns need not be labelled consecutively.
  auto own_path = find_induced_path(h.graph().rows(), h.path_order());
  Embedding out(host_path->size());
  for (std::size_t i = 0; i < out.size(); ++i) out[static_cast<std::size_t>((*own_path)[i])] = (*host_path)[i];
  return out;
}

bool contains_induced(const Graph& g, const Pattern& h) { return find_induced(g, h).has_value(); }

bool contains_induced(const Graph& g, const Graph& h) {
  return find_induced(g, Pattern("graph", h)).has_value();
}

bool contains_induced_through(std::span<const VertexSet> rows, const Pattern& h, int anchor) {
  if (h.path_order() > 0) return find_induced_path(rows, h.path_order(), anchor).has_value();
  return find_induced_generic(rows, h.graph(), anchor).has_value();
}

bool is_free_of(const Graph& g, std::span<const Pattern> forbidden) {
  return std::none_of(forbidden.begin(), forbidden.end(), [&](const Pattern& h) { return contains_induced(g, h); });
}

}  // namespace listobs
