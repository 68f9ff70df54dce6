#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wheelforge/coloring.hpp"
#include "wheelforge/corpus.hpp"
#include "wheelforge/harness.hpp"
#include "wheelforge/io.hpp"
#include "wheelforge/linkage.hpp"
#include "wheelforge/separations.hpp"
#include "wheelforge/subdivision.hpp"
#include "wheelforge/wheels.hpp"

namespace py = pybind11;
using namespace wheelforge;

namespace {

// Results cross the boundary as the same JSON the CLI prints.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

DiscEmbedding need_disc(const Graph& g, const std::vector<Vertex>& boundary) {
  auto dp = is_disc_planar(g, boundary, false);
  if (!dp.embedding) throw PreconditionError("no disc embedding with the boundary on one face");
  return *dp.embedding;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Planar separations, wheels and K5 subdivisions on small graphs";
  m.attr("SCHEMA") = kSchema;

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UnsupportedSize>(m, "UnsupportedSize", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<Infeasible>(m, "Infeasible", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("order"))
      .def(py::init<int, const std::vector<Edge>&>(), py::arg("order"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("graph6", [](const Graph& g) { return emit_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) { return g.neighbors(v).to_vector(); })
      .def("add_edge", &Graph::add_edge)
      .def("to_dict", [](const Graph& g) { return to_py(to_json(g)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + emit_graph6(g) + "')"; });

  m.def("is_planar", [](const Graph& g) { return is_planar(g).planar; });

  m.def(
      "disc_embedding",
      [](const Graph& g, const std::vector<Vertex>& boundary, bool ordered) -> py::object {
        auto r = is_disc_planar(g, boundary, ordered);
        if (!r.planar) return py::none();
        return r.embedding ? to_py(to_json(*r.embedding)) : py::dict();
      },
      py::arg("graph"), py::arg("boundary"), py::arg("ordered") = false,
      "None when no embedding puts the boundary on one face (in the given cyclic order when ordered).");

  m.def(
      "separations",
      [](const Graph& g, int k, int min_side, bool planar_side) {
        Json list = Json::array();
        if (planar_side) {
          for (const auto& p : planar_side_separations(g, k, min_side)) list.push_back(to_json(p.separation));
        } else {
          for (const auto& s : enumerate_k_separations(g, k, min_side)) list.push_back(to_json(s));
        }
        return to_py(list);
      },
      py::arg("graph"), py::arg("k"), py::arg("min_side") = 0, py::arg("planar_side") = false);

  m.def(
      "good_wheels",
      [](const Graph& g, const std::vector<Vertex>& boundary) {
        Json list = Json::array();
        for (const auto& w : find_good_wheels(need_disc(g, boundary), VertexSet::of(boundary)))
          list.push_back(to_json(w));
        return to_py(list);
      },
      py::arg("graph"), py::arg("boundary"));

  m.def(
      "extend",
      [](const Graph& g, const std::vector<Vertex>& boundary, Vertex center, const std::vector<Vertex>& mandatory) {
        auto e = need_disc(g, boundary);
        auto verdict = wheel_at(e, center);
        if (!verdict.defined()) throw PreconditionError("no wheel at " + std::to_string(center) + ": " + verdict.violation);
        auto r = is_extendable(e, *verdict.wheel, boundary, VertexSet::of(mandatory));
        Json j{{"wheel", to_json(*verdict.wheel)}, {"extendable", r.extendable()}};
        if (r.paths) {
          j["paths"] = to_json(*r.paths);
        } else {
          j["cut"] = r.cut.to_vector();
          j["max_routable"] = r.max_routable;
        }
        return to_py(j);
      },
      py::arg("graph"), py::arg("boundary"), py::arg("center"), py::arg("mandatory") = std::vector<Vertex>{});

  m.def(
      "two_linkage",
      [](const Graph& g, Vertex s1, Vertex s2, Vertex t1, Vertex t2) {
        return to_py(to_json(solve_two_linkage(g, {s1, s2, t1, t2})));
      },
      py::arg("graph"), py::arg("s1"), py::arg("s2"), py::arg("t1"), py::arg("t2"));

  m.def("find_k5_subdivision", [](const Graph& g) -> py::object {
    auto c = find_k5_subdivision(g);
    return c ? to_py(to_json(*c)) : py::none();
  });

  m.def("verify_k5_certificate", [](const Graph& g, py::object cert) {
    auto text = py::module_::import("json").attr("dumps")(cert).cast<std::string>();
    return verify_k5_certificate(g, certificate_from_json(Json::parse(text)));
  });

  m.def("four_color", [](const Graph& g) -> py::object {
    auto c = four_color(g);
    if (!c) return py::none();
    return py::cast(*c);
  });

  m.def("all_graphs", &all_graphs, py::arg("n"));
  m.def("k_connected_graphs", &k_connected_graphs, py::arg("n"), py::arg("k"));

  m.def(
      "obstructions",
      [](int max_interior, const std::string& degree, int jobs) {
        ObstructionOptions o;
        o.max_interior = max_interior;
        if (degree == "strict") {
          o.degree = DegreeFilter::strict;
        } else if (degree != "flagged") {
          throw UsageError("degree must be flagged or strict");
        }
        o.jobs = jobs;
        return to_py(catalog_to_json(enumerate_obstructions(o)));
      },
      py::arg("max_interior") = 4, py::arg("degree") = "flagged", py::arg("jobs") = 1);

  m.def(
      "verify",
      [](const std::string& lemma, int nmin, int nmax, int max_interior, int jobs) {
        VerifyOptions o;
        o.nmin = nmin;
        o.nmax = nmax;
        o.max_interior = max_interior;
        o.jobs = jobs;
        auto report = verify_lemma(lemma, default_corpus(lemma, o), o);
        return to_py(report.to_json(false));
      },
      py::arg("lemma"), py::arg("nmin") = 1, py::arg("nmax") = 7, py::arg("max_interior") = 4, py::arg("jobs") = 1);
}
