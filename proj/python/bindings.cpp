#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "tilepot/multigraph.hpp"
#include "tilepot/pot.hpp"
#include "tilepot/realization.hpp"
#include "tilepot/reductions.hpp"
#include "tilepot/scenario.hpp"
#include "tilepot/serialize.hpp"
#include "tilepot/spectrum.hpp"

namespace py = pybind11;
using namespace tilepot;
using nlohmann::json;

namespace {

MultiGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    return MultiGraph(n, edges);
}

py::object json_to_py(const json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_tilepot, m) {
    m.doc() = "Flexible-tile self-assembly design toolkit";

    py::class_<MultiGraph>(m, "MultiGraph")
        .def(py::init(&graph_from_edges), py::arg("vertex_count"), py::arg("edges"))
        .def_readonly("vertex_count", &MultiGraph::vertex_count)
        .def_readonly("edges", &MultiGraph::edges)
        .def("degree", &MultiGraph::degree)
        .def("degree_sequence", &MultiGraph::degree_sequence)
        .def("connected", &MultiGraph::connected)
        .def("__repr__", [](const MultiGraph& g) { return g.to_json().dump(); });

    py::class_<Pot>(m, "Pot")
        .def_static("parse", &Pot::parse_any)
        .def_property_readonly("tile_count", &Pot::tile_count)
        .def_property_readonly("symbol_count", &Pot::symbol_count)
        .def("render", &Pot::render)
        .def("collapse_bonds", &Pot::collapse_bonds)
        .def("__repr__", [](const Pot& p) { return p.render(); });

    m.def("generate_graph", [](const std::string& family, const std::vector<int>& dims) {
        auto f = family_from_name(family);
        if (!f) throw std::invalid_argument("unknown family: " + family);
        return generate(*f, dims);
    });
    m.def("canonical_form", &canonical_form);
    m.def("isomorphic", &isomorphic);
    m.def("t1_bounds", &t1_bounds);

    m.def("spectrum", [](const Pot& p) { return json_to_py(spectrum_to_json(p, spectrum(p))); });
    m.def(
        "min_order",
        [](const Pot& p, long max, bool fallback) {
            return json_to_py(min_order_to_json(min_order(p, max, fallback)));
        },
        py::arg("pot"), py::arg("max_order") = 32, py::arg("fallback") = false);

    m.def(
        "find_realization",
        [](const Pot& p, const MultiGraph& g, long budget) {
            RealizationResult r = find_realization(p, g, budget);
            py::dict out;
            out["status"] = r.status == SearchStatus::Found      ? "found"
                            : r.status == SearchStatus::NotFound ? "not-found"
                                                                 : "budget-exceeded";
            if (r.certificate) out["certificate"] = json_to_py(certificate_to_json(*r.certificate, g));
            return out;
        },
        py::arg("pot"), py::arg("graph"), py::arg("budget") = kDefaultBudget);

    m.def(
        "enumerate_realizable",
        [](const Pot& p, long n, bool connected_only, long budget) {
            EnumerationResult r = enumerate_realizable(p, n, connected_only, budget);
            py::list graphs;
            for (auto& e : r.entries) graphs.append(e.graph);
            py::dict out;
            out["complete"] = r.status == SearchStatus::Found;
            out["graphs"] = graphs;
            return out;
        },
        py::arg("pot"), py::arg("order"), py::arg("connected_only") = true,
        py::arg("budget") = kDefaultBudget);

    m.def(
        "check_scenario",
        [](const Pot& p, const MultiGraph& g, int level, long budget) {
            return json_to_py(scenario_report_to_json(check_scenario(p, g, level, budget), g));
        },
        py::arg("pot"), py::arg("graph"), py::arg("level"), py::arg("budget") = kDefaultBudget);

    m.def("three_colorable", &three_colorable);
    m.def("prp_pot", [](const MultiGraph& g) {
        ReductionArtifact a = prp_pot(g);
        return py::make_tuple(a.pot, a.target_order);
    });
    m.def("srp_pot", [](const MultiGraph& g) {
        ReductionArtifact a = srp_pot(g);
        return py::make_tuple(a.pot, a.target_order);
    });
    m.def("subdivided_target", [](const MultiGraph& g, const std::string& variant) {
        return subdivided_target(
            g, variant == "srp" ? ReductionVariant::Srp : ReductionVariant::Prp);
    });
}
