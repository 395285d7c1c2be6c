#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kfree/enumeration.hpp"
#include "kfree/generators.hpp"
#include "kfree/harness.hpp"
#include "kfree/io.hpp"
#include "kfree/verifiers.hpp"

namespace py = pybind11;
using namespace kfree;

namespace {

template <typename W>
py::tuple outcome(const SearchResult<W>& r, const std::vector<std::size_t>* payload) {
    py::object witness = py::none();
    if (payload) witness = py::cast(*payload);
    return py::make_tuple(std::string(to_string(r.status)), witness);
}

SearchBudget budget_of(std::uint64_t nodes) { return SearchBudget{nodes}; }

std::size_t exact_or_raise(SearchStatus status, std::size_t value, const char* what) {
    if (status != SearchStatus::found) throw std::runtime_error(std::string(what) + ": node budget exhausted");
    return value;
}

}  // namespace

PYBIND11_MODULE(_kfree, m) {
    m.doc() = "K_{r+1}-free graph families with exact verifiers";
    m.attr("DEFAULT_NODE_BUDGET") = kDefaultNodeBudget;

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("order") = 0)
        .def(py::init([](std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
                 return Graph::from_edges(n, edges);
             }),
             py::arg("order"), py::arg("edges"))
        .def_property_readonly("order", &Graph::order)
        .def("__len__", &Graph::order)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("adjacent", [](const Graph& g, Vertex u, Vertex v) {
            if (u >= g.order() || v >= g.order()) throw py::index_error("vertex out of range");
            return g.adjacent(u, v);
        })
        .def("degree", [](const Graph& g, Vertex u) {
            if (u >= g.order()) throw py::index_error("vertex out of range");
            return g.degree(u);
        })
        .def("degrees", &Graph::degrees)
        .def("neighbors", [](const Graph& g, Vertex u) {
            if (u >= g.order()) throw py::index_error("vertex out of range");
            return g.neighbors(u).members();
        })
        .def("graph6", [](const Graph& g) { return to_graph6(g); })
        .def("dot", [](const Graph& g) { return to_dot(g); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "<kfree.Graph order=" + std::to_string(g.order()) + " edges=" + std::to_string(g.edge_count()) + ">";
        });

    m.def("from_graph6", &from_graph6, py::arg("text"));
    m.def("to_graph6", &to_graph6, py::arg("graph"));
    m.def("generate", [](const std::string& spec) { return generate(FamilySpec::parse(spec)); }, py::arg("spec"),
          "Build a family instance from its textual spec, e.g. 'andrasfai:k=4'.");
    m.def("canonical_spec", [](const std::string& spec) { return FamilySpec::parse(spec).to_string(); });

    m.def("complete", &complete);
    m.def("cycle", &cycle);
    m.def("join", &join);
    m.def("blow_up", &blow_up);
    m.def("complement", &complement);
    m.def("turan", &turan);
    m.def("min_degree", &min_degree);
    m.def("max_degree", &max_degree);
    m.def("is_regular", &is_regular);

    m.def(
        "find_clique",
        [](const Graph& g, std::size_t s, std::uint64_t budget) {
            const auto r = find_clique(g, s, budget_of(budget));
            return outcome(r, r.witness ? &r.witness->vertices : nullptr);
        },
        py::arg("graph"), py::arg("size"), py::arg("budget") = kDefaultNodeBudget);
    m.def(
        "clique_number",
        [](const Graph& g, std::uint64_t budget) {
            const auto r = clique_number(g, budget_of(budget));
            return exact_or_raise(r.status, r.value, "clique_number");
        },
        py::arg("graph"), py::arg("budget") = kDefaultNodeBudget);
    m.def(
        "is_k_colorable",
        [](const Graph& g, std::size_t c, std::uint64_t budget) {
            const auto r = is_k_colorable(g, c, budget_of(budget));
            return outcome(r, r.witness ? &r.witness->colors : nullptr);
        },
        py::arg("graph"), py::arg("colors"), py::arg("budget") = kDefaultNodeBudget);
    m.def(
        "chromatic_number",
        [](const Graph& g, std::uint64_t budget) {
            const auto r = chromatic_number(g, budget_of(budget));
            return exact_or_raise(r.status, r.value, "chromatic_number");
        },
        py::arg("graph"), py::arg("budget") = kDefaultNodeBudget);
    m.def(
        "find_homomorphism",
        [](const Graph& source, const Graph& target, std::uint64_t budget) {
            const auto r = find_homomorphism(source, target, budget_of(budget));
            return outcome(r, r.witness ? &r.witness->map : nullptr);
        },
        py::arg("source"), py::arg("target"), py::arg("budget") = kDefaultNodeBudget);
    m.def(
        "contains_subgraph",
        [](const Graph& host, const Graph& pattern, std::uint64_t budget) {
            const auto r = contains_subgraph(host, pattern, budget_of(budget));
            return outcome(r, r.witness ? &r.witness->map : nullptr);
        },
        py::arg("host"), py::arg("pattern"), py::arg("budget") = kDefaultNodeBudget);
    m.def("lemma_vertex", [](const Graph& g) -> std::optional<Vertex> {
        if (auto u = lemma_vertex(g)) return u->vertex;
        return std::nullopt;
    });
    m.def("maximal_completion", [](const Graph& g, std::size_t q) { return maximal_completion(g, q); });

    m.def("canonical_form", &canonical_form);
    m.def("isomorphic", &isomorphic);
    m.def("iso_reduced_graphs", [](std::size_t n) { return iso_reduced_graphs(n); });
    m.def("labeled_graph_count", &labeled_graph_count);
    m.def(
        "psi",
        [](std::size_t n, std::size_t r, std::size_t h) {
            const PsiResult p = psi_oracle(n, r, h);
            py::dict out;
            out["n"] = p.n;
            out["r"] = p.r;
            out["h"] = p.h;
            out["value"] = p.value ? py::cast(*p.value) : py::none();
            out["witness"] = p.witness ? py::cast(to_graph6(*p.witness)) : py::none();
            out["status"] = std::string(to_string(p.status));
            return out;
        },
        py::arg("n"), py::arg("r"), py::arg("h"));

    // Reports cross as JSON text; the package wrapper decodes them.
    m.def(
        "_check_theorem",
        [](const std::string& id, std::size_t r, std::size_t k, std::size_t n_min, std::size_t n_max,
           const std::string& mode) {
            const auto theorem = theorem_from_name(id);
            if (!theorem) throw py::value_error("unknown theorem '" + id + "'");
            const auto scan = mode_from_name(mode);
            if (!scan) throw py::value_error("unknown mode '" + mode + "'");
            TheoremParams p;
            p.id = *theorem;
            p.r_min = p.r_max = r;
            p.k_min = p.k_max = k;
            p.n_min = n_min;
            p.n_max = n_max;
            p.mode = *scan;
            py::gil_scoped_release release;
            return check_theorem(p).to_json().dump();
        },
        py::arg("id"), py::arg("r"), py::arg("k"), py::arg("n_min"), py::arg("n_max"), py::arg("mode"));
    m.def("_audit", [](const std::string& spec) { return audit_example(FamilySpec::parse(spec)).to_json().dump(); });
    m.def("_run_suite", [](const std::string& config) {
        const auto doc = nlohmann::json::parse(config);
        py::gil_scoped_release release;
        return run_suite(doc).to_json().dump();
    });
    m.def("_default_suite_config", [] { return default_suite_config().dump(); });
    m.def("_check_certificate",
          [](const std::string& text) { return check_certificate(Certificate::from_json(nlohmann::json::parse(text))); });

    py::register_exception<nlohmann::json::exception>(m, "JsonError", PyExc_ValueError);
}
