#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "listobs/dichotomy.hpp"
#include "listobs/errors.hpp"
#include "listobs/families.hpp"
#include "listobs/graph6.hpp"
#include "listobs/obstruction.hpp"
#include "listobs/propagation.hpp"

namespace py = pybind11;
using namespace listobs;

namespace {

// Lists arrive as a sequence of color sequences; None means {1,2,3} everywhere.
ListSystem to_lists(const Graph& g, const std::optional<std::vector<std::vector<int>>>& lists) {
  if (!lists) return ListSystem::uniform(g.order());
  if (static_cast<int>(lists->size()) != g.order()) throw InputError("one list per vertex required");
  std::vector<ColorSet> out;
  for (const auto& colors : *lists) {
    ColorSet s;
    for (int c : colors) {
      if (c < 1 || c > 3) throw InputError("colors must lie in {1, 2, 3}");
      s.insert(c);
    }
    out.push_back(s);
  }
  return ListSystem(std::move(out));
}

std::vector<std::vector<int>> from_lists(const ListSystem& l) {
  std::vector<std::vector<int>> out;
  for (ColorSet s : l.lists()) out.push_back(s.colors());
  return out;
}

py::dict report_dict(const FamilyReport& r) {
  py::list props;
  for (const auto& p : r.properties) {
    py::dict d;
    d["name"] = p.name;
    d["passed"] = p.passed;
    d["detail"] = p.detail;
    d["witness"] = p.witness;
    props.append(d);
  }
  py::dict out;
  out["family"] = r.family;
  out["r"] = r.r;
  out["passed"] = r.passed();
  out["properties"] = props;
  return out;
}

std::vector<Pattern> to_patterns(const std::vector<std::string>& names) {
  std::vector<Pattern> out;
  for (const auto& n : names) out.push_back(parse_pattern(n));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimal obstructions to list 3-colorability";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }), py::arg("n"),
           py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("order", &Graph::order)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).to_vector(); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.order()) + ", " + std::to_string(g.edge_count()) + " edges)";
      });

  m.def("parse_graph6", [](const std::string& s) { return parse_graph6(s); });
  m.def("write_graph6", &write_graph6);

  m.def(
      "l_colorable",
      [](const Graph& g, std::optional<std::vector<std::vector<int>>> lists) { return l_colorable(g, to_lists(g, lists)); },
      py::arg("graph"), py::arg("lists") = py::none(), "A list coloring, or None when none exists.");
  m.def(
      "is_minimal_obstruction",
      [](const Graph& g, std::optional<std::vector<std::vector<int>>> lists) {
        return is_minimal_obstruction(g, to_lists(g, lists));
      },
      py::arg("graph"), py::arg("lists") = py::none());
  m.def(
      "critical_vertices",
      [](const Graph& g, std::optional<std::vector<std::vector<int>>> lists) {
        return critical_vertices(g, to_lists(g, lists)).to_vector();
      },
      py::arg("graph"), py::arg("lists") = py::none());
  m.def(
      "extract_minimal",
      [](const Graph& g, std::optional<std::vector<std::vector<int>>> lists) {
        auto e = extract_minimal(g, to_lists(g, lists));
        return py::make_tuple(e.vertices.to_vector(), e.graph, from_lists(e.lists));
      },
      py::arg("graph"), py::arg("lists") = py::none(), "(vertices, induced graph, lists) of a minimal obstruction.");
  m.def(
      "dominates",
      [](const Graph& g, std::optional<std::vector<std::vector<int>>> lists, int u, int v) {
        return dominates(g, to_lists(g, lists), u, v);
      },
      py::arg("graph"), py::arg("lists"), py::arg("u"), py::arg("v"));
  m.def("is_4_vertex_critical", &is_4_vertex_critical);

  m.def("classify", [](const std::string& pattern) {
    auto v = classify(parse_pattern(pattern));
    py::dict d;
    d["case"] = to_string(v.structure);
    d["coloring_finite"] = v.coloring_finite;
    d["list_finite"] = v.list_finite;
    d["k"] = v.k < 0 ? py::object(py::none()) : py::object(py::int_(v.k));
    d["witness_name"] = v.witness_name;
    d["sentence"] = v.sentence();
    return d;
  });

  m.def(
      "enumerate_counts",
      [](const std::vector<std::string>& forbidden, int max_n, int jobs) {
        auto patterns = to_patterns(forbidden);
        EnumerationOptions opt;
        opt.max_n = max_n;
        opt.jobs = jobs;
        EnumerationResult r;
        {
          py::gil_scoped_release release;
          r = enumerate_propagation_paths(patterns, opt);
        }
        return std::vector<std::uint64_t>(r.counts.begin() + 1, r.counts.end());
      },
      py::arg("forbidden") = std::vector<std::string>{"P6"}, py::arg("max_n") = 25, py::arg("jobs") = 1,
      "Accepted configuration counts for lengths 1..max_n.");
  m.def(
      "max_propagation_length",
      [](const std::vector<std::string>& forbidden, int jobs) {
        auto patterns = to_patterns(forbidden);
        py::gil_scoped_release release;
        return max_propagation_length(patterns, jobs);
      },
      py::arg("forbidden") = std::vector<std::string>{"P6"}, py::arg("jobs") = 1);
  m.attr("P6_FREE_COUNTS") = std::vector<std::uint64_t>(kP6FreeCounts.begin(), kP6FreeCounts.end());

  m.def("gen_gr", &gen_gr);
  m.def("gen_hr", [](int r) {
    auto h = gen_hr(r);
    return py::make_tuple(h.graph, from_lists(h.lists));
  });
  m.def("verify_gr", [](int r) { return report_dict(verify_gr(r)); });
  m.def("verify_hr", [](int r) { return report_dict(verify_hr(r)); });
}
