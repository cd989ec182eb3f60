#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cisgraphs/classify.hpp"
#include "cisgraphs/equistable.hpp"
#include "cisgraphs/errors.hpp"
#include "cisgraphs/gallery.hpp"
#include "cisgraphs/hasse.hpp"
#include "cisgraphs/json_io.hpp"
#include "cisgraphs/linegraph.hpp"

namespace py = pybind11;
using namespace cisgraphs;

namespace {

std::vector<std::vector<int>> as_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (VertexSet s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

Graph gallery_by_name(const std::string& name) {
  const auto id = parse_gallery_id(name);
  if (!id) throw std::invalid_argument("unknown gallery id: " + name);
  return gallery(*id);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "CIS graphs and related classes: recognition, certificates and the inclusion table.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<UnsupportedSize>(m, "UnsupportedSize", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def_static("parse", [](const std::string& s) { return parse_graph(s); }, "graph6 or edge list")
      .def("graph6", [](const Graph& g) { return encode_graph6(g); })
      .def("order", &Graph::order)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("add_edge", &Graph::add_edge)
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("__eq__", &Graph::operator==)
      .def("__repr__", [](const Graph& g) { return "Graph('" + encode_graph6(g) + "')"; });

  m.def("gallery", &gallery_by_name, py::arg("name"));
  m.def("gallery_names", [] {
    std::vector<std::string> out;
    for (GalleryId id : kGalleryIds) out.emplace_back(gallery_name(id));
    return out;
  });
  m.def("projective_split", &projective_split, py::arg("q"));
  m.def("random_split", &random_split, py::arg("k"), py::arg("l"), py::arg("seed"));
  m.def("is_isomorphic", [](const Graph& a, const Graph& b) { return is_isomorphic(a, b); });

  m.def("maximal_cliques", [](const Graph& g) { return as_lists(maximal_cliques(g).sets); });
  m.def("maximal_stable_sets", [](const Graph& g) { return as_lists(maximal_stable_sets(g).sets); });

  m.def(
      "holds",
      [](const Graph& g, const std::string& property) {
        Classifier c(g, {.include_lp = true});
        return c.holds(PropertyId::parse(property));
      },
      py::arg("graph"), py::arg("property"), "One property such as 'CIS', 'co-triangle' or 'cap-es'.");
  m.def(
      "classify_json",
      [](const Graph& g, const std::string& graph_id, bool include_lp) {
        return report_to_json(classify(g, graph_id, {.include_lp = include_lp})).dump();
      },
      py::arg("graph"), py::arg("graph_id") = "", py::arg("include_lp") = false);
  m.def("verify_report_json",
        [](const std::string& text) { return verify_report(report_from_json(nlohmann::json::parse(text))); });

  m.def("equistable_json", [](const Graph& g, bool strong) {
    const EquistableCertificate c = strong ? is_strongly_equistable(g) : is_equistable(g);
    return certificate_to_json(c.to_verdict().certificate).dump();
  }, py::arg("graph"), py::arg("strong") = false);
  m.def("is_equistable", [](const Graph& g) { return is_equistable(g).verdict; });
  m.def("is_strongly_equistable", [](const Graph& g) { return is_strongly_equistable(g).verdict; });

  m.def("line_graph", &line_graph, py::arg("root"));
  m.def("root_graph", [](const Graph& g) -> std::optional<Graph> { return root_graph(g).root; });
  m.def("is_cis_line_root", [](const Graph& h) { return is_cis_line_root(h).holds; });

  m.def("all_graphs", &all_graphs, py::arg("n"));
  m.def("verify_table", [] {
    const auto& props = table_properties();
    std::vector<py::dict> out;
    for (const CellResult& r : verify_table()) {
      py::dict d;
      d["row"] = table_label(props[r.row]);
      d["col"] = table_label(props[r.col]);
      d["outcome"] = std::string(outcome_name(r.outcome));
      d["detail"] = r.detail;
      out.push_back(d);
    }
    return out;
  });
  m.def(
      "scan_violations",
      [](int max_n, bool include_lp) {
        ScanOptions opts;
        opts.max_n = max_n;
        opts.lp_max_n = include_lp ? max_n : 0;
        return scan(opts).total_violations();
      },
      py::arg("max_n"), py::arg("include_lp") = false);
}
