#include "listobs/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>

#include "listobs/errors.hpp"

namespace listobs {

namespace {

// Ordered partition: vertices laid out in `lab`, each cell a contiguous
// segment starting at an entry of `starts` (ascending, first entry 0).
struct Partition {
  std::vector<int> lab;
  std::vector<int> starts;

  int cell_count() const { return static_cast<int>(starts.size()); }
  int begin(int c) const { return starts[static_cast<std::size_t>(c)]; }
  int end(int c) const {
    return c + 1 < cell_count() ? starts[static_cast<std::size_t>(c + 1)] : static_cast<int>(lab.size());
  }
  int size(int c) const { return end(c) - begin(c); }
};

// Splits cells by neighbour counts into every splitter cell until the
// partition is equitable. Only cell positions and counts drive the result, so
// the procedure commutes with relabelling.
void refine(const Graph& g, Partition& p) {
  std::array<int, kMaxVertices> count{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.cell_count() && !changed; ++s) {
      VertexSet splitter;
      for (int k = p.begin(s); k < p.end(s); ++k) splitter.insert(p.lab[static_cast<std::size_t>(k)]);
      for (int c = 0; c < p.cell_count(); ++c) {
        const int b = p.begin(c), e = p.end(c);
        if (e - b < 2) continue;
        bool uniform = true;
        for (int k = b; k < e; ++k) {
          count[static_cast<std::size_t>(k)] = (g.neighbors(p.lab[static_cast<std::size_t>(k)]) & splitter).size();
          uniform = uniform && count[static_cast<std::size_t>(k)] == count[static_cast<std::size_t>(b)];
        }
        if (uniform) continue;
        // Stable insertion sort by count: ties keep their order, so the
        // result depends only on positions and counts.
        for (int k = b + 1; k < e; ++k) {
          const int v = p.lab[static_cast<std::size_t>(k)], cv = count[static_cast<std::size_t>(k)];
          int m = k;
          while (m > b && count[static_cast<std::size_t>(m - 1)] > cv) {
            p.lab[static_cast<std::size_t>(m)] = p.lab[static_cast<std::size_t>(m - 1)];
            count[static_cast<std::size_t>(m)] = count[static_cast<std::size_t>(m - 1)];
            --m;
          }
          p.lab[static_cast<std::size_t>(m)] = v;
          count[static_cast<std::size_t>(m)] = cv;
        }
        std::vector<int> cuts;
        for (int k = b + 1; k < e; ++k) {
          if (count[static_cast<std::size_t>(k)] != count[static_cast<std::size_t>(k - 1)]) cuts.push_back(k);
        }
        p.starts.insert(p.starts.begin() + c + 1, cuts.begin(), cuts.end());
        c += static_cast<int>(cuts.size());
        changed = true;
      }
    }
  }
}

class Search {
public:
  Search(const Graph& g, std::span<const int> classes) : g_(g), classes_(classes) {}

  CanonicalLabeling run() {
    const int n = g_.order();
    Partition root;
    root.lab.resize(static_cast<std::size_t>(n));
    std::iota(root.lab.begin(), root.lab.end(), 0);
    std::stable_sort(root.lab.begin(), root.lab.end(), [&](int a, int b) {
      return classes_[static_cast<std::size_t>(a)] < classes_[static_cast<std::size_t>(b)];
    });
    for (int k = 0; k < n; ++k) {
      if (k == 0 || classes_[static_cast<std::size_t>(root.lab[static_cast<std::size_t>(k)])] !=
                        classes_[static_cast<std::size_t>(root.lab[static_cast<std::size_t>(k - 1)])]) {
        root.starts.push_back(k);
      }
    }
    visit(std::move(root), 0, true);
    return {best_order_, best_cert_};
  }

private:
  void certificate(const std::vector<int>& order, std::string& cert) const {
    const int n = g_.order();
    cert.clear();
    cert.push_back(static_cast<char>(n));
    for (int v : order) {
      int cls = classes_[static_cast<std::size_t>(v)];
      cert.push_back(static_cast<char>(cls >> 8));
      cert.push_back(static_cast<char>(cls & 0xff));
    }
    unsigned char acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
      const VertexSet& row = g_.neighbors(order[static_cast<std::size_t>(j)]);
      for (int i = 0; i < j; ++i) {
        acc = static_cast<unsigned char>((acc << 1) | (row.contains(order[static_cast<std::size_t>(i)]) ? 1 : 0));
        if (++filled == 8) {
          cert.push_back(static_cast<char>(acc));
          acc = 0;
          filled = 0;
        }
      }
    }
    if (filled > 0) cert.push_back(static_cast<char>(acc << (8 - filled)));
  }

  // Automorphism mapping leaf `from` onto leaf `to` (position-wise).
  static std::vector<int> mapping(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> gamma(from.size());
    for (std::size_t p = 0; p < from.size(); ++p) gamma[static_cast<std::size_t>(from[p])] = to[p];
    return gamma;
  }

  static std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  // Orbit representatives under the stored automorphisms that fix every
  // vertex of `prefix`.
  std::vector<int> orbit_roots(std::size_t prefix_len) const {
    std::vector<int> parent(static_cast<std::size_t>(g_.order()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (std::size_t k = 0; k < prefix_len && fixes; ++k) {
        int v = first_path_[k];
        fixes = gamma[static_cast<std::size_t>(v)] == v;
      }
      if (!fixes) continue;
      for (int v = 0; v < g_.order(); ++v) {
        int a = find(v);
        int b = find(gamma[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < g_.order(); ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  // Returns the level to resume at, or nullopt to continue normally.
  std::optional<std::size_t> visit(Partition cells, std::size_t level, bool on_first_path) {
    refine(g_, cells);
    int target = -1;
    for (int c = 0; c < cells.cell_count(); ++c) {
      if (cells.size(c) > 1 && (target < 0 || cells.size(c) < cells.size(target))) target = c;
    }
    if (target < 0) return leaf(cells);

    std::vector<int> members(cells.lab.begin() + cells.begin(target), cells.lab.begin() + cells.end(target));
    std::sort(members.begin(), members.end());
    std::vector<int> explored;
    for (int v : members) {
      if (on_first_path && !explored.empty()) {
        auto roots = orbit_roots(level);
        bool seen = std::any_of(explored.begin(), explored.end(), [&](int u) {
          return roots[static_cast<std::size_t>(u)] == roots[static_cast<std::size_t>(v)];
        });
        if (seen) continue;
      }
      bool first_child = explored.empty();
      explored.push_back(v);
      // Individualise v: move it to the front of its cell and split it off.
      Partition child = cells;
      const int b = child.begin(target);
      auto it = std::find(child.lab.begin() + b, child.lab.begin() + child.end(target), v);
      std::rotate(child.lab.begin() + b, it, it + 1);
      std::sort(child.lab.begin() + b + 1, child.lab.begin() + child.end(target));
      child.starts.insert(child.starts.begin() + target + 1, b + 1);

      path_.push_back(v);
      if (on_first_path && first_child) first_path_.push_back(v);
      auto jump = visit(std::move(child), level + 1, on_first_path && first_child);
      path_.pop_back();
      if (jump && *jump < level) return jump;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> leaf(const Partition& cells) {
    const std::vector<int>& order = cells.lab;
    certificate(order, cert_);
    const std::string& cert = cert_;
    if (!have_first_) {
      have_first_ = true;
      first_order_ = order;
      first_cert_ = cert;
      best_order_ = order;
      best_cert_ = cert;
      best_path_ = path_;
      return std::nullopt;
    }
    if (cert == first_cert_) {
      automorphisms_.push_back(mapping(first_order_, order));
      return common_prefix(path_, first_path_);
    }
    if (cert < best_cert_) {
      best_cert_ = cert;
      best_order_ = order;
      best_path_ = path_;
      return std::nullopt;
    }
    if (cert == best_cert_) {
      automorphisms_.push_back(mapping(best_order_, order));
      return common_prefix(path_, best_path_);
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::span<const int> classes_;
  std::string cert_;
  std::vector<int> path_;
  std::vector<int> first_path_;
  bool have_first_ = false;
  std::vector<int> first_order_;
  std::string first_cert_;
  std::vector<int> best_order_;
  std::vector<int> best_path_;
  std::string best_cert_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> vertex_classes) {
  if (static_cast<int>(vertex_classes.size()) != g.order()) {
    throw InputError("canonical_form: one class per vertex required");
  }
  for (int c : vertex_classes) {
    if (c < 0 || c > 0xffff) throw InputError("canonical_form: vertex class outside [0, 65535]");
  }
  return Search(g, vertex_classes).run();
}

std::string canonical_form(const Graph& g, std::span<const int> vertex_classes) {
  return canonical_labeling(g, vertex_classes).form;
}

std::string canonical_form(const Graph& g) {
  std::vector<int> uniform(static_cast<std::size_t>(g.order()), 0);
  return canonical_form(g, uniform);
}

}  // namespace listobs
