#include <arrowing/archive.hpp>
#include <arrowing/arrowing.hpp>
#include <arrowing/enumerate.hpp>
#include <arrowing/error.hpp>
#include <arrowing/formula.hpp>
#include <arrowing/gadget.hpp>
#include <arrowing/p3k3.hpp>
#include <arrowing/reduction.hpp>
#include <arrowing/subgraph.hpp>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>

namespace py = pybind11;
using namespace arrowing;

namespace {

using EdgePairs = std::vector<std::pair<Vertex, Vertex>>;

EdgePairs to_pairs(std::span<const Edge> edges)
{
    EdgePairs out;
    for (const auto& e : edges)
        out.emplace_back(e.u, e.v);
    return out;
}

std::vector<Edge> from_pairs(const EdgePairs& pairs)
{
    std::vector<Edge> out;
    for (auto [u, v] : pairs)
        out.push_back(make_edge(u, v));
    return out;
}

py::object linkage_value(const Linkage& l)
{
    if (l.is_infinite())
        return py::float_(std::numeric_limits<double>::infinity());
    return py::int_(l.value());
}

py::object optional_bool(const std::optional<bool>& b) { return b ? py::object(py::bool_(*b)) : py::object(py::none()); }

py::dict gadget_dict(const Gadget& g)
{
    py::dict d;
    d["kind"] = std::string(gadget_kind_name(g.kind));
    d["vertices"] = g.graph.vertex_count();
    d["edges"] = g.graph.edge_count();
    d["verified"] = g.verified;
    d["copies_reconcile"] = copies_reconcile(g);
    d["construction"] = g.construction;
    d["digest"] = g.log.digest();
    d["queries"] = g.log.queries.size();
    return d;
}

const GadgetSuite& suite_for(const Graph& h, std::uint64_t budget)
{
    static std::map<std::string, GadgetSuite> cache;
    auto key = to_edge_list(canonical_graph(h));
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, forge_p3_suite(h, SearchBudget{budget})).first;
    return it->second;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Arrowing decisions, gadget forging and the (2,2)-3SAT reduction";

    py::register_exception<ArrowingError>(m, "ArrowingError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const EdgePairs& edges) { return Graph(n, from_pairs(edges)); }),
            py::arg("vertex_count"), py::arg("edges"))
        .def_static("from_shorthand", [](const std::string& s) { return graph_from_shorthand(s); })
        .def_static("from_edge_list", [](const std::string& s) { return parse_edge_list(s); })
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("edges", [](const Graph& g) { return to_pairs(g.edges()); })
        .def("to_edge_list", [](const Graph& g) { return to_edge_list(g); })
        .def(py::self == py::self)
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
                " edges)";
        });

    m.def("complete_graph", &complete_graph);
    m.def("cycle_graph", &cycle_graph);
    m.def("path_graph", &path_graph);
    m.def("star_graph", &star_graph);
    m.def("complete_minus_edge", &complete_minus_edge);
    m.def("tailed_complete", &tailed_complete);
    m.def("combine_on_edge", [](const Graph& h, std::pair<Vertex, Vertex> e) {
        return combine_on_edge(h, make_edge(e.first, e.second)).graph;
    });

    m.def("mepl", [](const Graph& g) { return linkage_value(mepl(g)); },
        "Minimum edge pair linkage; inf when every two edges share a vertex");
    m.def("epl", [](const Graph& g, std::pair<Vertex, Vertex> e, std::pair<Vertex, Vertex> f) {
        return linkage_value(epl(g, make_edge(e.first, e.second), make_edge(f.first, f.second)));
    });
    m.def("is_connected", &is_connected);
    m.def("is_k_connected", &is_k_connected);
    m.def("count_copies", [](const Graph& g, const Graph& h) { return count_copies(g, h); });
    m.def("is_isomorphic", &is_isomorphic);

    m.def("is_good", [](const Graph& g, const EdgePairs& red, const Graph& f, const Graph& h) {
        return is_good(EdgeColoring::from_red_edges(g, from_pairs(red)), f, h);
    });

    m.def(
        "arrows",
        [](const Graph& g, const Graph& f, const Graph& h, std::uint64_t budget) {
            auto r = arrows(g, f, h, SearchBudget{budget});
            py::dict d;
            d["arrows"] = optional_bool(r.result);
            d["certificate"] = r.certificate ? py::cast(to_pairs(r.certificate->red_edges())) : py::object(py::none());
            d["nodes"] = r.stats.nodes;
            return d;
        },
        py::arg("g"), py::arg("f"), py::arg("h"), py::arg("budget") = SearchBudget{}.max_nodes,
        "Exhaustive decision; 'arrows' is None when the budget runs out and 'certificate' lists red edges");

    m.def("decide_p3_k3", [](const Graph& g) {
        auto r = decide_p3_k3(g);
        py::dict d;
        d["arrows"] = r.arrows;
        d["t"] = r.triangles;
        d["matching_weight"] = r.matching_weight;
        d["matching"] = to_pairs(r.matching.edges);
        d["certificate"] = r.certificate ? py::cast(to_pairs(r.certificate->red_edges())) : py::object(py::none());
        return d;
    });

    m.def("prune_non_h_edges", [](const Graph& g, const Graph& h) {
        auto p = prune_non_h_edges(g, h);
        return py::make_tuple(p.graph, to_pairs(p.removed));
    });

    m.def(
        "check_tk_equivalence",
        [](const Graph& g, unsigned n, std::uint64_t budget) {
            auto r = check_tk_equivalence(g, n, SearchBudget{budget});
            py::dict d;
            d["tk_arrows"] = optional_bool(r.tk_arrows);
            d["k_arrows"] = optional_bool(r.k_arrows);
            d["agreement"] = r.agreement == Agreement::agree ? "agree"
                : r.agreement == Agreement::disagree         ? "disagree"
                                                             : "inconclusive";
            return d;
        },
        py::arg("g"), py::arg("n") = 3, py::arg("budget") = SearchBudget{}.max_nodes);

    m.def("parse_formula", [](const std::string& text) {
        auto phi = parse_formula(text);
        std::vector<std::vector<int>> clauses;
        for (const auto& c : phi.clauses) {
            auto& row = clauses.emplace_back();
            for (const auto& l : c)
                row.push_back(l.positive ? static_cast<int>(l.variable) + 1 : -static_cast<int>(l.variable) - 1);
        }
        return py::make_tuple(phi.variable_count, clauses);
    });
    m.def("sat_oracle", [](const std::string& text) { return sat_oracle(parse_formula(text)); },
        "Satisfying assignment of a formula given as text, or None");
    m.def("generate_formulas", [](unsigned n, std::uint64_t seed, std::size_t count) {
        std::vector<std::string> out;
        for (const auto& phi : generate_formulas(n, seed, count))
            out.push_back(formula_to_text(phi));
        return out;
    });

    m.def(
        "forge_p3_suite",
        [](const Graph& h, std::uint64_t budget) {
            const auto& s = suite_for(h, budget);
            py::dict d;
            d["enforcer"] = gadget_dict(s.enforcer);
            d["signal_extender"] = gadget_dict(s.extender);
            d["chain"] = gadget_dict(s.chain);
            d["variable_gadget"] = gadget_dict(s.variable);
            d["clause_gadget"] = gadget_dict(s.clause);
            return d;
        },
        py::arg("h"), py::arg("budget") = gadget_budget.max_nodes);

    m.def(
        "reduce",
        [](const std::string& formula_text, const Graph& h, std::optional<std::vector<bool>> assignment,
            std::uint64_t budget) {
            auto phi = parse_formula(formula_text);
            auto out = build_g_phi(phi, ReductionGadgets::from_suite(suite_for(h, budget)), SearchBudget{budget});
            py::dict d;
            d["graph"] = out.g_phi;
            d["vertex_count"] = out.g_phi.vertex_count();
            d["edge_count"] = out.g_phi.edge_count();
            d["expected_vertex_count"] = expected_vertex_count(out);
            d["copies_reconcile"] = reduction_copies_reconcile(out);
            if (assignment) {
                auto c = assignment_to_coloring(out, *assignment);
                d["certificate"] = to_pairs(c.red_edges());
                d["certificate_good"] = is_good(c, path_graph(3), h);
                d["decoded"] = coloring_to_assignment(out, c);
            }
            return d;
        },
        py::arg("formula"), py::arg("h"), py::arg("assignment") = py::none(),
        py::arg("budget") = gadget_budget.max_nodes,
        "Build G_phi; with a satisfying assignment also encode it as a good colouring and decode it back");
}
