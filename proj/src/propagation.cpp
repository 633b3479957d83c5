#include "listobs/propagation.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <mutex>
#include <thread>

#include "listobs/errors.hpp"
#include "listobs/induced.hpp"

namespace listobs {

ColorSet PropConfig::list(int i) const {
  if (i == 1) return ColorSet{color(1)};
  return ColorSet{color(i), color(i - 1)};
}

Graph PropConfig::graph() const {
  Graph g = path_graph(length());
  for (auto [i, j] : extra_edges) g.add_edge(i - 1, j - 1);
  return g;
}

std::pair<int, int> shape(const PropConfig& cfg, int i) {
  if (i < 2 || i > cfg.length()) throw ContractViolation("shape: defined only for 2 <= i <= k");
  return {cfg.color(i), cfg.color(i - 1)};
}

namespace {

// Shape chain S(v_i) = ab, S(v_j) = bc with a, b, c distinct.
bool shape_chain(const PropConfig& cfg, int i, int j) {
  auto [a, b] = shape(cfg, i);
  auto [b2, c] = shape(cfg, j);
  return b == b2 && a != c;
}

}  // namespace

bool satisfies_shape_chain(const PropConfig& cfg) {
  return std::all_of(cfg.extra_edges.begin(), cfg.extra_edges.end(), [&](const auto& e) {
    auto [i, j] = e;
    return i < 3 || i > j - 2 || shape_chain(cfg, i, j);
  });
}

bool admissible_edge(const PropConfig& cfg, int i, int j) {
  if (i < 1 || j > cfg.length() || i >= j - 1) throw ContractViolation("admissible_edge: needs 1 <= i < j-1 <= k-1");
  if (cfg.list(j).contains(cfg.color(i))) return false;
  return i < 3 || shape_chain(cfg, i, j);
}

bool validate_config(const PropConfig& cfg, std::span<const Pattern> forbidden) {
  const int k = cfg.length();
  if (k < 1 || cfg.color(1) != 1) return false;
  for (int i = 1; i <= k; ++i) {
    if (cfg.color(i) < 1 || cfg.color(i) > 3) return false;
    if (i > 1 && cfg.color(i) == cfg.color(i - 1)) return false;
  }
  if (!std::is_sorted(cfg.extra_edges.begin(), cfg.extra_edges.end())) return false;
  if (std::adjacent_find(cfg.extra_edges.begin(), cfg.extra_edges.end()) != cfg.extra_edges.end()) return false;
  for (auto [i, j] : cfg.extra_edges) {
    if (i < 1 || j > k || i >= j - 1) return false;
    if (cfg.list(j).contains(cfg.color(i))) return false;
  }
  if (!satisfies_shape_chain(cfg)) return false;
  return is_free_of(cfg.graph(), forbidden);
}

std::string format_config(const PropConfig& cfg) {
  std::string out = std::to_string(cfg.length());
  out.push_back(' ');
  for (int c : cfg.colors) out.push_back(static_cast<char>('0' + c));
  out.push_back(' ');
  if (cfg.extra_edges.empty()) out.push_back('-');
  for (std::size_t e = 0; e < cfg.extra_edges.size(); ++e) {
    if (e > 0) out.push_back(',');
    out += std::to_string(cfg.extra_edges[e].first);
    out.push_back('-');
    out += std::to_string(cfg.extra_edges[e].second);
  }
  return out;
}

PropConfig parse_config(std::string_view line) {
  auto fail = [&](std::size_t at) -> PropConfig {
    throw ParseError("malformed configuration line '" + std::string(line) + "'", at);
  };
  auto sp1 = line.find(' ');
  if (sp1 == std::string_view::npos) return fail(0);
  auto sp2 = line.find(' ', sp1 + 1);
  if (sp2 == std::string_view::npos) return fail(sp1);
  int k = 0;
  auto [p, ec] = std::from_chars(line.data(), line.data() + sp1, k);
  if (ec != std::errc{} || p != line.data() + sp1) return fail(0);

  PropConfig cfg;
  for (std::size_t pos = sp1 + 1; pos < sp2; ++pos) {
    char ch = line[pos];
    if (ch < '1' || ch > '3') return fail(pos);
    cfg.colors.push_back(ch - '0');
  }
  if (cfg.length() != k) return fail(sp1 + 1);

  std::string_view edges = line.substr(sp2 + 1);
  if (edges == "-") return cfg;
  std::size_t start = 0;
  while (start <= edges.size()) {
    auto comma = edges.find(',', start);
    if (comma == std::string_view::npos) comma = edges.size();
    auto item = edges.substr(start, comma - start);
    auto dash = item.find('-');
    if (dash == std::string_view::npos) return fail(sp2 + 1 + start);
    int i = 0;
    int j = 0;
    auto r1 = std::from_chars(item.data(), item.data() + dash, i);
    auto r2 = std::from_chars(item.data() + dash + 1, item.data() + item.size(), j);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != item.data() + dash ||
        r2.ptr != item.data() + item.size()) {
      return fail(sp2 + 1 + start);
    }
    cfg.extra_edges.emplace_back(i, j);
    start = comma + 1;
  }
  return cfg;
}

namespace {

struct State {
  int length = 0;
  std::array<std::uint8_t, kMaxVertices> color{};
  std::array<VertexSet, kMaxVertices> rows{};
};

PropConfig to_config(const State& s) {
  PropConfig cfg;
  cfg.colors.assign(s.color.begin(), s.color.begin() + s.length);
  for (int j = 2; j < s.length; ++j) {
    for (int i : s.rows[static_cast<std::size_t>(j)]) {
      if (i < j - 1) cfg.extra_edges.emplace_back(i + 1, j + 1);
    }
  }
  std::sort(cfg.extra_edges.begin(), cfg.extra_edges.end());
  return cfg;
}

class Enumerator {
public:
  Enumerator(std::span<const Pattern> forbidden, int max_n, bool collect, std::uint64_t budget,
             std::atomic<std::uint64_t>& accepted)
      : forbidden_(forbidden),
        max_n_(max_n),
        collect_(collect),
        budget_(budget),
        accepted_(accepted),
        counts_(static_cast<std::size_t>(max_n) + 1, 0) {}

  // Explores below `s`; when `tasks` is set, states reaching `split` are
  // handed out instead of being extended.
  void extend(State& s, int split = 0, std::vector<State>* tasks = nullptr) {
    const int k = s.length;
    if (k >= max_n_) return;
    if (tasks && k == split) {
      tasks->push_back(s);
      return;
    }
    const int j = k;
    const int prev = k - 1;
    const std::uint8_t prev_color = s.color[static_cast<std::size_t>(prev)];
    for (std::uint8_t alpha = 1; alpha <= 3; ++alpha) {
      if (alpha == prev_color) continue;
      s.color[static_cast<std::size_t>(j)] = alpha;

      // Chords v_i v_{j+1} (0-based i <= j-2): c(v_i) outside
      // {alpha, c(v_j)}, and for 1-based i >= 3 also c(v_{i-1}) = alpha.
      std::array<int, kMaxVertices> cand{};
      int m = 0;
      for (int i = 0; i + 2 <= j; ++i) {
        const auto ci = s.color[static_cast<std::size_t>(i)];
        if (ci == alpha || ci == prev_color) continue;
        if (i >= 2 && s.color[static_cast<std::size_t>(i - 1)] != alpha) continue;
        cand[static_cast<std::size_t>(m++)] = i;
      }
      if (m >= 63) throw ResourceError("too many candidate chords");

      s.length = k + 1;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        VertexSet nb;
        nb.insert(prev);
        for (int b = 0; b < m; ++b) {
          if ((mask >> b) & 1u) nb.insert(cand[static_cast<std::size_t>(b)]);
        }
        s.rows[static_cast<std::size_t>(j)] = nb;
        for (int u : nb) s.rows[static_cast<std::size_t>(u)].insert(j);
        if (accepted_here(s, j)) {
          record(s);
          extend(s, split, tasks);
        }
        for (int u : nb) s.rows[static_cast<std::size_t>(u)].erase(j);
        s.rows[static_cast<std::size_t>(j)] = VertexSet{};
      }
      s.length = k;
    }
  }

  void record(const State& s) {
    ++counts_[static_cast<std::size_t>(s.length)];
    if (collect_) configs_.push_back(to_config(s));
    std::uint64_t total = accepted_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (budget_ && total > budget_) throw ResourceError("propagation enumeration exceeded its node budget");
  }

  std::vector<std::uint64_t>& counts() { return counts_; }
  std::vector<PropConfig>& configs() { return configs_; }

private:
  // The parent is pattern-free, so only copies through the new vertex matter.
  bool accepted_here(const State& s, int j) const {
    std::span<const VertexSet> rows(s.rows.data(), static_cast<std::size_t>(s.length));
    for (const auto& h : forbidden_) {
      if (h.order() <= s.length && contains_induced_through(rows, h, j)) return false;
    }
    return true;
  }

  std::span<const Pattern> forbidden_;
  int max_n_;
  bool collect_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& accepted_;
  std::vector<std::uint64_t> counts_;
  std::vector<PropConfig> configs_;
};

EnumerationResult run_enumeration(std::span<const Pattern> forbidden, const EnumerationOptions& opt) {
  if (opt.jobs < 1) throw InputError("job count must be >= 1");
  const bool collect = static_cast<bool>(opt.sink);
  std::atomic<std::uint64_t> accepted{0};

  EnumerationResult result;
  result.counts.assign(static_cast<std::size_t>(opt.max_n) + 1, 0);
  std::vector<PropConfig> configs;

  State root;
  root.length = 1;
  root.color[0] = 1;
  bool root_ok = true;
  for (const auto& h : forbidden) {
    if (h.order() <= 1 && contains_induced(Graph(1), h)) root_ok = false;
  }

  if (root_ok) {
    Enumerator top(forbidden, opt.max_n, collect, opt.node_budget, accepted);
    top.record(root);
    std::vector<State> tasks;
    if (opt.jobs == 1) {
      top.extend(root);
    } else {
      top.extend(root, std::max(1, opt.split_length), &tasks);
    }
    for (std::size_t k = 0; k < result.counts.size(); ++k) result.counts[k] += top.counts()[k];
    configs = std::move(top.configs());

    if (!tasks.empty()) {
      std::atomic<std::size_t> next{0};
      std::mutex merge;
      std::exception_ptr failure;
      auto worker = [&] {
        Enumerator local(forbidden, opt.max_n, collect, opt.node_budget, accepted);
        try {
          for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
            State s = tasks[t];
            local.extend(s);
          }
        } catch (...) {
          std::lock_guard lock(merge);
          if (!failure) failure = std::current_exception();
          next.store(tasks.size());
          return;
        }
        std::lock_guard lock(merge);
        for (std::size_t k = 0; k < result.counts.size(); ++k) result.counts[k] += local.counts()[k];
        auto& mine = local.configs();
        configs.insert(configs.end(), std::make_move_iterator(mine.begin()), std::make_move_iterator(mine.end()));
      };
      std::vector<std::thread> pool;
      const int n_threads = std::min<int>(opt.jobs, static_cast<int>(tasks.size()));
      for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      if (failure) std::rethrow_exception(failure);
    }
  }

  for (int k = 1; k <= opt.max_n; ++k) {
    result.total += result.counts[static_cast<std::size_t>(k)];
    if (result.counts[static_cast<std::size_t>(k)] > 0) result.max_length = k;
  }
  if (collect) {
    std::sort(configs.begin(), configs.end());
    for (const auto& c : configs) opt.sink(c);
  }
  return result;
}

}  // namespace

EnumerationResult enumerate_propagation_paths(std::span<const Pattern> forbidden, const EnumerationOptions& options) {
  if (options.max_n < 1 || options.max_n > 64) throw InputError("max_n must be in [1, 64]");
  return run_enumeration(forbidden, options);
}

EnumerationResult enumerate_propagation_paths(std::span<const Pattern> forbidden, int max_n) {
  EnumerationOptions opt;
  opt.max_n = max_n;
  return enumerate_propagation_paths(forbidden, opt);
}

int max_propagation_length(std::span<const Pattern> forbidden, int jobs, std::uint64_t node_budget) {
  EnumerationOptions opt;
  opt.max_n = kMaxVertices;
  opt.jobs = jobs;
  opt.node_budget = node_budget;
  auto r = run_enumeration(forbidden, opt);
  if (r.counts[kMaxVertices] > 0) throw ResourceError("propagation paths reach the 128-vertex guard");
  return r.max_length;
}

namespace {

class InstancePathSearch {
public:
  InstancePathSearch(const Graph& g, const ListSystem& l) : g_(g), l_(l) {}

  int run() {
    const int n = g_.order();
    for (int v = 0; v < n; ++v) {
      for (int alpha : l_[v].colors()) {
        path_.assign(1, v);
        colors_.assign(1, alpha);
        on_path_ = VertexSet{};
        on_path_.insert(v);
        best_ = std::max(best_, 1);
        grow();
      }
    }
    return best_;
  }

private:
  void grow() {
    const int last = path_.back();
    const int c_last = colors_.back();
    for (int u : g_.neighbors(last) - on_path_) {
      ColorSet lu = l_[u];
      if (lu.size() != 2 || !lu.contains(c_last)) continue;
      const int cu = (lu - ColorSet{c_last}).only();
      const int j = static_cast<int>(path_.size()) + 1;
      if (!chords_ok(u, cu, j)) continue;
      path_.push_back(u);
      colors_.push_back(cu);
      on_path_.insert(u);
      best_ = std::max(best_, j);
      grow();
      on_path_.erase(u);
      colors_.pop_back();
      path_.pop_back();
    }
  }

  // Edges from the new vertex v_j to v_i with 3 <= i <= j-2 must satisfy
  // the shape chain; chords to v_1, v_2 are unrestricted.
  bool chords_ok(int u, int cu, int j) const {
    const int c_prev = colors_.back();
    for (int i = 3; i <= j - 2; ++i) {
      if (!g_.adjacent(u, path_[static_cast<std::size_t>(i - 1)])) continue;
      const int a = colors_[static_cast<std::size_t>(i - 1)];
      const int b = colors_[static_cast<std::size_t>(i - 2)];
      if (!(cu == b && c_prev != a && c_prev != b)) return false;
    }
    return true;
  }

  const Graph& g_;
  const ListSystem& l_;
  std::vector<int> path_;
  std::vector<int> colors_;
  VertexSet on_path_;
  int best_ = 0;
};

}  // namespace

int longest_propagation_path(const Graph& g, const ListSystem& l) {
  if (l.size() != g.order()) throw InputError("list system not aligned with graph");
  for (int v = 0; v < g.order(); ++v) {
    if (l[v].size() > 2) throw ContractViolation("longest_propagation_path: lists must have at most two colors");
  }
  return InstancePathSearch(g, l).run();
}

bool satisfies_size_bound(int order, int lambda) { return lambda < 20 || order <= 4 * lambda + 4; }

}  // namespace listobs
