#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gcw/battery.hpp"
#include "gcw/cli.hpp"
#include "gcw/constructions.hpp"
#include "gcw/error.hpp"
#include "gcw/structure.hpp"
#include "gcw/symmetry.hpp"

namespace py = pybind11;
using namespace gcw;

namespace {

py::int_ to_py(BigInt v) { return py::int_(py::module_::import("builtins").attr("int")(to_string(v))); }

std::vector<std::string> labels(const Graph& g, const std::vector<Vertex>& ids) {
  std::vector<std::string> out;
  for (Vertex v : ids) out.push_back(g.label(v));
  return out;
}

Code from_labels(const std::string& graph, const std::vector<std::string>& words) {
  auto g = make_graph(graph);
  std::vector<Vertex> ids;
  for (const auto& w : words) ids.push_back(g->parse_label(w));
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return Code(g, ids);
}

py::dict symmetry_dict(const Code& c, const SymmetryReport& s) {
  py::dict d;
  d["s"] = s.s;
  d["rho"] = s.rho ? py::object(py::int_(*s.rho)) : py::object(py::none());
  d["level_sizes"] = s.level_sizes;
  d["orbit_counts"] = s.orbit_counts;
  d["s_nt"] = s.s_nt;
  d["completely_transitive"] = s.completely_transitive;
  if (s.witness) {
    d["witness"] = py::dict(py::arg("level") = s.witness->level,
                            py::arg("representative") = c.graph().label(s.witness->representative),
                            py::arg("unreached") = c.graph().label(s.witness->unreached));
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_gcw, m) {
  m.doc() = "Neighbour-transitive codes in graphs";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<ImplementationContradiction>(m, "ImplementationContradiction", PyExc_RuntimeError);

  py::class_<Code>(m, "Code")
      .def_property_readonly("name", &Code::name)
      .def_property_readonly("graph", [](const Code& c) { return c.graph().spec(); })
      .def("__len__", &Code::size)
      .def("labels", [](const Code& c) { return labels(c.graph(), c.ids()); })
      .def("__repr__", [](const Code& c) {
        return "<Code " + c.name() + " in " + c.graph().spec() + ", " + std::to_string(c.size()) + " codewords>";
      });

  py::class_<GraphGroup>(m, "Group")
      .def_property_readonly("name", &GraphGroup::name)
      .def_property_readonly("order", [](const GraphGroup& g) { return to_py(g.order()); })
      .def_property_readonly("generator_count", [](const GraphGroup& g) { return g.generators().size(); });

  m.def("classical_code", &classical_code, py::arg("name"));
  m.def("construction", [](const std::string& expr) { return make_construction(expr); }, py::arg("expr"));
  m.def("code_from_labels", &from_labels, py::arg("graph"), py::arg("codewords"));
  m.def("catalog", [] {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.name);
    return out;
  });

  m.def("min_distance", [](const Code& c) { return min_distance(c); });
  m.def("covering_radius", [](const Code& c) { return *auto_partition(c).rho(); });
  m.def("level_sizes", [](const Code& c) { return auto_partition(c).sizes(); });
  m.def("is_perfect", &is_perfect);
  m.def("is_completely_regular", [](const Code& c) { return is_completely_regular(c); });

  m.def("builtin_group", &builtin_group, py::arg("name"), py::arg("code"));
  m.def("aut", [](const Code& c, std::uint64_t budget) { return aut_bruteforce(c, nullptr, budget); }, py::arg("code"),
        py::arg("budget") = 10'000'000);
  m.def("is_s_nt", [](const Code& c, const GraphGroup& g, int s) { return symmetry_dict(c, is_s_nt(c, g, s)); },
        py::arg("code"), py::arg("group"), py::arg("s"));
  m.def("is_completely_transitive",
        [](const Code& c, const GraphGroup& g) { return symmetry_dict(c, is_completely_transitive(c, g)); });
  m.def("classify_pair", [](const Code& c, const GraphGroup& g) {
    Classification k = classify_pair(c, g);
    return py::dict(py::arg("tag") = to_string(k.tag), py::arg("kernel_order") = to_py(k.kernel_order),
                    py::arg("alphabet_order") = to_py(k.alphabet_order),
                    py::arg("alphabet_2transitive") = k.alphabet_2transitive);
  });

  m.def("neighbour_set", [](const Code& c) { return labels(c.graph(), neighbour_set(c).ids); });
  m.def("reconstruct", [](const Code& c) { return reconstruct(neighbour_set(c)); },
        "Rebuild a code from its neighbour set.");
  m.def("is_elusive", [](const Code& c) {
    ElusiveResult e = is_elusive(c);
    py::dict d(py::arg("verdict") = to_string(e.verdict), py::arg("scope") = e.scope, py::arg("reason") = e.reason);
    if (e.witness) {
      d["witness"] = e.witness->cycles();
      d["image"] = labels(c.graph(), e.image);
    }
    return d;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int rc;
    {
      py::gil_scoped_release release;
      rc = run_cli(args, out, err);
    }
    return py::make_tuple(rc, out.str(), err.str());
  });
  m.def("run_battery", [](const std::string& filter) {
    py::list out;
    for (const auto& r : run_battery(filter))
      out.append(py::dict(py::arg("criterion") = r.criterion, py::arg("name") = r.name,
                          py::arg("expected") = r.expected, py::arg("computed") = r.computed,
                          py::arg("pass") = r.pass));
    return out;
  }, py::arg("filter") = "");
}
