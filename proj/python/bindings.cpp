#include "tpfill/chordal.hpp"
#include "tpfill/min_tpc.hpp"
#include "tpfill/oracle.hpp"
#include "tpfill/slim.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tpfill;

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

Graph make_graph(std::size_t n, const EdgeList& edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [a, b] : edges) es.push_back({a, b});
    return Graph(n, es);
}

EdgeList to_pairs(const std::vector<Edge>& es) {
    EdgeList out;
    for (const Edge& e : es) out.emplace_back(e.u, e.v);
    return out;
}

// Each tree as (list of (vertex, parent or None), base).
using PyTree = std::pair<std::vector<std::pair<Vertex, std::optional<Vertex>>>, Vertex>;

std::vector<PyTree> to_py(const RootedForest& f) {
    std::vector<PyTree> out;
    for (const auto& t : f.trees) {
        PyTree pt;
        const auto& ids = t.vertices();
        const auto& par = t.parent_index();
        for (std::size_t i = 0; i < ids.size(); ++i)
            pt.first.emplace_back(ids[i], par[i] < 0 ? std::nullopt : std::optional<Vertex>(ids[par[i]]));
        pt.second = t.base();
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_tpfill, m) {
    m.doc() = "Exact trivially perfect completion for graphs one vertex away from the class";

    py::register_exception<NotOneAwayFromTP>(m, "NotOneAwayFromTP", PyExc_ValueError);
    py::register_exception<NotTriviallyPerfect>(m, "NotTriviallyPerfect", PyExc_ValueError);
    py::register_exception<InvalidSlimProblem>(m, "InvalidSlimProblem", PyExc_ValueError);
    py::register_exception<InvalidGadgetInput>(m, "InvalidGadgetInput", PyExc_ValueError);
    py::register_exception<OracleTooLarge>(m, "OracleTooLarge", PyExc_RuntimeError);
    py::register_exception<FillCapExceeded>(m, "FillCapExceeded", PyExc_RuntimeError);
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);

    m.def(
        "min_tpc",
        [](std::size_t n, const EdgeList& edges, Vertex v) {
            auto c = min_tpc(make_graph(n, edges), v);
            return to_pairs(c.fill);
        },
        py::arg("n"), py::arg("edges"), py::arg("v"), "Minimum fill edges; g - v must be trivially perfect.");

    m.def(
        "is_trivially_perfect",
        [](std::size_t n, const EdgeList& edges) { return is_trivially_perfect(make_graph(n, edges)); },
        py::arg("n"), py::arg("edges"));

    m.def(
        "to_forest", [](std::size_t n, const EdgeList& edges) { return to_py(to_forest(make_graph(n, edges))); },
        py::arg("n"), py::arg("edges"));

    m.def(
        "slim_tpc",
        [](std::size_t n, const EdgeList& edges, std::vector<Vertex> s) {
            return to_pairs(slim_tpc({make_graph(n, edges), VertexSet(std::move(s))}).fill);
        },
        py::arg("n"), py::arg("edges"), py::arg("s"));

    m.def(
        "brute_min_fill",
        [](std::size_t n, const EdgeList& edges, const std::string& target) {
            if (target != "tp" && target != "chordal") throw py::value_error("target must be 'tp' or 'chordal'");
            auto r = brute_min_fill(make_graph(n, edges),
                                    target == "tp" ? FillTarget::TriviallyPerfect : FillTarget::Chordal);
            return to_pairs(r.witness);
        },
        py::arg("n"), py::arg("edges"), py::arg("target") = "tp");

    m.def(
        "build_gadget",
        [](std::size_t n, const EdgeList& edges, std::vector<Vertex> a, std::vector<Vertex> b, std::int64_t k) {
            auto gi = build_gadget({make_graph(n, edges), VertexSet(std::move(a)), VertexSet(std::move(b)), k});
            py::dict d;
            d["n"] = gi.g.order();
            d["edges"] = to_pairs(gi.g.edges());
            d["v"] = gi.v;
            d["K"] = gi.k_big;
            d["c"] = gi.c.items();
            return d;
        },
        py::arg("n"), py::arg("edges"), py::arg("a"), py::arg("b"), py::arg("k"));

    m.def(
        "is_chordal", [](std::size_t n, const EdgeList& edges) { return is_chordal(make_graph(n, edges)); },
        py::arg("n"), py::arg("edges"));
}
