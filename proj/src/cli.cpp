#include "listobs/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "listobs/errors.hpp"
#include "listobs/graph6.hpp"
#include "listobs/json_io.hpp"

namespace listobs {

namespace {

struct RunConfig {
  std::vector<std::string> forbidden;
  int max_n = 25;
  int jobs = 1;
  std::string emit_path;
  std::string graph_path;
  std::string lists_path;
  std::string family;
  int r = 1;
  bool verify = false;
  std::string pattern;
  std::string format = "table";
};

std::string join_vertices(const std::vector<int>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s.push_back(' ');
    s += std::to_string(vs[i]);
  }
  return s;
}

ListSystem lists_for(const RunConfig& cfg, const Graph& g) {
  if (cfg.lists_path.empty()) return ListSystem::uniform(g.order());
  ListSystem l = read_list_system_file(cfg.lists_path);
  if (l.size() != g.order()) {
    throw InputError("list system has " + std::to_string(l.size()) + " lists but the graph has " +
                     std::to_string(g.order()) + " vertices");
  }
  return l;
}

std::vector<Graph> input_graphs(const RunConfig& cfg) {
  auto graphs = read_graph6_file(cfg.graph_path);
  if (graphs.empty()) throw InputError("no graphs in " + cfg.graph_path);
  return graphs;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<Pattern> forbidden;
  for (const auto& f : cfg.forbidden) forbidden.push_back(parse_pattern(f));

  std::vector<std::string> lines;
  EnumerationOptions opt;
  opt.max_n = cfg.max_n;
  opt.jobs = cfg.jobs;
  if (!cfg.emit_path.empty()) opt.sink = [&](const PropConfig& c) { lines.push_back(format_config(c)); };
  auto result = enumerate_propagation_paths(forbidden, opt);

  if (!cfg.emit_path.empty()) {
    std::ofstream f(cfg.emit_path);
    if (!f) throw InputError("cannot write " + cfg.emit_path);
    for (const auto& l : lines) f << l << '\n';
  }

  if (cfg.format == "json") {
    out << enumeration_to_json(result, cfg.forbidden).dump() << '\n';
  } else {
    out << "vertices count\n";
    for (std::size_t k = 1; k < result.counts.size(); ++k) out << k << ' ' << result.counts[k] << '\n';
    out << "max_length " << result.max_length << '\n';
  }

  const bool p6_only = forbidden.size() == 1 && forbidden[0].path_order() == 6;
  if (!p6_only) return kExitHolds;
  int mismatches = 0;
  for (std::size_t k = 1; k < result.counts.size(); ++k) {
    const std::uint64_t expected = k <= kP6FreeCounts.size() ? kP6FreeCounts[k - 1] : 0;
    if (result.counts[k] != expected) {
      err << "mismatch at " << k << " vertices: got " << result.counts[k] << ", expected " << expected << '\n';
      ++mismatches;
    }
  }
  if (mismatches == 0) err << "P6-free counts match the reference table\n";
  return mismatches == 0 ? kExitHolds : kExitFails;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  bool all_sat = true;
  for (const auto& g : input_graphs(cfg)) {
    auto c = l_colorable(g, lists_for(cfg, g));
    all_sat = all_sat && c.has_value();
    if (cfg.format == "json") {
      out << json{{"colorable", c.has_value()}, {"coloring", coloring_to_json(c)}}.dump() << '\n';
    } else if (c) {
      out << "SAT " << join_vertices(*c) << '\n';
    } else {
      out << "UNSAT\n";
    }
  }
  return all_sat ? kExitHolds : kExitFails;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  bool all_minimal = true;
  for (const auto& g : input_graphs(cfg)) {
    auto rep = analyze(g, lists_for(cfg, g));
    all_minimal = all_minimal && rep.minimal;
    if (cfg.format == "json") {
      out << report_to_json(rep).dump() << '\n';
    } else if (rep.colorable) {
      out << "colorable " << join_vertices(*rep.coloring) << '\n';
    } else {
      out << (rep.minimal ? "minimal-obstruction" : "obstruction") << " non-critical: ["
          << join_vertices(rep.non_critical.to_vector()) << "] extracted: ["
          << join_vertices(rep.extracted->vertices.to_vector()) << "]\n";
    }
  }
  return all_minimal ? kExitHolds : kExitFails;
}

int cmd_critical(const RunConfig& cfg, std::ostream& out) {
  bool all_critical = true;
  for (const auto& g : input_graphs(cfg)) {
    const ListSystem l = lists_for(cfg, g);
    const bool colorable = l_colorable(g, l).has_value();
    VertexSet critical = colorable ? VertexSet{} : critical_vertices(g, l);
    const bool holds = !colorable && critical == g.vertices();
    all_critical = all_critical && holds;
    if (cfg.format == "json") {
      out << json{{"colorable", colorable}, {"critical", critical.to_vector()}, {"vertex_critical", holds}}.dump()
          << '\n';
    } else {
      out << (holds ? "critical" : "not-critical") << " critical: [" << join_vertices(critical.to_vector())
          << "]\n";
    }
  }
  return all_critical ? kExitHolds : kExitFails;
}

int cmd_family(const RunConfig& cfg, std::ostream& out) {
  json doc;
  std::optional<FamilyReport> report;
  if (cfg.family == "Gr") {
    doc["graph6"] = write_graph6(gen_gr(cfg.r));
    if (cfg.verify) report = verify_gr(cfg.r);
  } else if (cfg.family == "Hr") {
    auto inst = gen_hr(cfg.r);
    doc["graph6"] = write_graph6(inst.graph);
    doc["lists"] = list_system_to_json(inst.lists);
    if (cfg.verify) report = verify_hr(cfg.r);
  } else {
    throw InputError("unknown family '" + cfg.family + "' (expected Gr or Hr)");
  }
  if (report) doc["report"] = family_report_to_json(*report);

  if (cfg.format == "json") {
    out << doc.dump() << '\n';
  } else {
    out << doc["graph6"].get<std::string>() << '\n';
    if (doc.contains("lists")) out << doc["lists"].dump() << '\n';
    if (report) {
      for (const auto& p : report->properties) {
        out << (p.passed ? "PASS " : "FAIL ") << p.name;
        if (!p.detail.empty()) out << " (" << p.detail << ")";
        out << '\n';
      }
    }
  }
  return !report || report->passed() ? kExitHolds : kExitFails;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const Pattern p = parse_pattern(cfg.pattern);
  const auto v = classify(p);
  if (cfg.format == "json") {
    out << verdict_to_json(v, p.name()).dump() << '\n';
  } else {
    out << to_string(v.structure) << " coloring:" << (v.coloring_finite ? "finite" : "infinite")
        << " list:" << (v.list_finite ? "finite" : "infinite") << '\n'
        << v.sentence() << '\n';
  }
  return kExitHolds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Minimal obstructions to list 3-colorability in H-free graphs", "listobs-cli"};
  app.require_subcommand(1);
  auto fmt = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "Count propagation-path configurations per length");
  enumerate->add_option("--forbidden", cfg.forbidden, "Forbidden induced subgraph (repeatable); default P6");
  enumerate->add_option("--max-n", cfg.max_n, "Largest path length")->check(CLI::Range(1, 64));
  enumerate->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_option("--emit", cfg.emit_path, "Write every accepted configuration to this file");
  fmt(enumerate);

  auto graph_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--graph", cfg.graph_path, "graph6 file (one graph per line)")->required();
    sub->add_option("--lists", cfg.lists_path, "List system JSON; default {1,2,3} everywhere");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    fmt(sub);
    return sub;
  };
  auto* solve = graph_command("solve", "Find a list coloring");
  auto* check = graph_command("check", "Obstruction report: colorability, minimality, extraction");
  auto* critical = graph_command("critical", "Critical vertices; exit 0 iff every vertex is critical");

  auto* family = app.add_subcommand("family", "Generate (and verify) G_r or H_r");
  family->add_option("--name", cfg.family, "Gr or Hr")->required()->check(CLI::IsMember({"Gr", "Hr"}));
  family->add_option("--r", cfg.r, "Family parameter")->check(CLI::PositiveNumber);
  family->add_flag("--verify", cfg.verify, "Check the family's claimed properties");
  fmt(family);

  auto* classify_cmd = app.add_subcommand("classify", "Finite/infinite verdicts for a pattern H");
  classify_cmd->add_option("--pattern", cfg.pattern, "Pattern name or graph6 string")->required();
  fmt(classify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }
  if (cfg.forbidden.empty()) cfg.forbidden.push_back("P6");

  try {
    if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (critical->parsed()) return cmd_critical(cfg, out);
    if (family->parsed()) return cmd_family(cfg, out);
    if (classify_cmd->parsed()) return cmd_classify(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace listobs
