#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mobius/acceptance.hpp"
#include "mobius/gma.hpp"
#include "mobius/graph.hpp"
#include "mobius/groebner.hpp"
#include "mobius/io.hpp"
#include "mobius/named.hpp"
#include "mobius/resolution.hpp"

namespace py = pybind11;
using namespace mobius;

namespace {

std::vector<ElementSet> to_sets(const std::vector<std::vector<int>>& xs) {
    std::vector<ElementSet> out;
    for (const auto& x : xs) out.push_back(ElementSet::from(x));
    return out;
}

py::dict betti_dict(const BettiTable& t) {
    py::dict d;
    for (const auto& [ij, b] : t.entries) d[py::make_tuple(ij.first, ij.second)] = b;
    return d;
}

}  // namespace

PYBIND11_MODULE(_mobius, m) {
    m.doc() = "Graded Moebius algebras of matroids";

    py::register_exception<AxiomViolation>(m, "AxiomViolation", PyExc_ValueError);
    py::register_exception<NotSimple>(m, "NotSimple", PyExc_ValueError);
    py::register_exception<BadArgument>(m, "BadArgument", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SizeLimit>(m, "SizeLimit", PyExc_RuntimeError);
    py::register_exception<MismatchBug>(m, "MismatchBug", PyExc_RuntimeError);

    py::class_<Matroid>(m, "Matroid")
        .def(py::init([](int n, const std::vector<std::vector<int>>& circuits) {
                 return Matroid::from_circuits(n, to_sets(circuits));
             }),
             py::arg("ground"), py::arg("circuits"))
        .def_static("uniform", &Matroid::uniform, py::arg("rank"), py::arg("n"))
        .def_static("from_json", &parse_matroid_json)
        .def("to_json", &matroid_to_json)
        .def_property_readonly("ground_size", &Matroid::ground_size)
        .def_property_readonly("circuits", [](const Matroid& x) {
            std::vector<std::vector<int>> out;
            for (ElementSet c : x.circuits()) out.push_back(c.elements());
            return out;
        })
        .def("rank", [](const Matroid& x, const std::vector<int>& s) { return x.rank(ElementSet::from(s)); })
        .def("total_rank", [](const Matroid& x) { return x.rank(); })
        .def("closure", [](const Matroid& x, const std::vector<int>& s) {
            return x.closure(ElementSet::from(s)).elements();
        })
        .def("is_simple", &Matroid::is_simple)
        .def("whitney_numbers", [](const Matroid& x) { return x.flats().whitney_numbers(); })
        .def("lattice_dot", [](const Matroid& x) { return lattice_to_dot(x.flats()); });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("vertices"), py::arg("edges"))
        .def_static("from_json", &parse_graph_json)
        .def("to_json", &graph_to_json)
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edges", &Graph::edges);

    m.def("named_matroid", [](const std::string& name) { return named_instance(name).matroid; });
    m.def("named_graph", [](const std::string& name) { return named_instance(name).graph; });
    m.def("named_instance_names", &named_instance_names);
    m.def("trampoline", &trampoline);
    m.def("broken_trampoline", &broken_trampoline);
    m.def("cycle_matroid", &cycle_matroid);

    m.def("is_chordal", [](const Graph& g) { return is_chordal(g).perfect_elimination_order; });
    m.def("is_strongly_chordal", &is_strongly_chordal);
    m.def("mat_labeling", &mat_labeling);
    m.def("verify_mat_labeling", &verify_mat_labeling);
    m.def("strong_edge_elimination_order", &strong_edge_elimination_order);
    m.def("verify_seeo", &verify_seeo, py::arg("graph"), py::arg("order"), py::arg("all_cycles") = false);

    m.def("is_quadratic", &is_quadratic);
    m.def("is_c_chordal", &is_c_chordal);
    m.def("is_t_chordal", &is_t_chordal);
    m.def("is_line_closed", [](const Matroid& x) { return is_line_closed(x); });
    m.def("presentation_text", [](const Matroid& x) { return presentation_text(presentation(x)); });

    m.def("is_strong_elimination_order", [](const Matroid& x, const std::vector<int>& order) {
        return certify_order(x, ElementOrder(order)).strong;
    });
    m.def("lex_initial_ideal_degrees", [](const Matroid& x, const std::vector<int>& order) {
        return lex_initial_ideal(x, ElementOrder(order)).degree_histogram;
    });
    m.def(
        "search_strong_elimination_order",
        [](const Matroid& x, const std::string& strategy, int threads) {
            SearchOptions so;
            so.threads = threads;
            const auto r = search_strong_elimination_order(x, parse_strategy(strategy), so);
            py::dict d;
            d["outcome"] = to_string(r.outcome);
            d["order"] = r.order ? py::cast(r.order->sequence()) : py::none();
            d["orders_examined"] = r.orders_examined;
            return d;
        },
        py::arg("matroid"), py::arg("strategy") = "dfs_pruned", py::arg("threads") = 1);

    m.def(
        "betti_table",
        [](const Matroid& x, int steps, int degree_cap, int strand_cap, std::uint32_t characteristic, int threads) {
            ResolutionOptions o;
            o.max_step = steps;
            o.degree_cap = degree_cap;
            o.strand_cap = strand_cap;
            o.characteristic = characteristic;
            o.threads = threads;
            py::gil_scoped_release release;
            auto t = resolve_residue_field(StructuredAlgebra(GmaAlgebra(x)), o).table;
            py::gil_scoped_acquire acquire;
            return betti_dict(t);
        },
        py::arg("matroid"), py::arg("steps") = 3, py::arg("degree_cap") = -1, py::arg("strand_cap") = -1,
        py::arg("characteristic") = 32003, py::arg("threads") = 1);
    m.def("betti_text", [](const Matroid& x, int steps) {
        return betti_table_of_k(StructuredAlgebra(GmaAlgebra(x)), steps, steps + 2).to_text();
    });
    m.def("hs_poincare_residual", [](const Matroid& x, int steps) {
        return check_hs_poincare_identity(StructuredAlgebra(GmaAlgebra(x)), steps).nonzero;
    });
    m.def("trampoline_functional_equation_residual", [](int n, int steps, int degree_cap) {
        return check_trampoline_functional_equation(n, steps, degree_cap).nonzero;
    });

    m.def(
        "run_acceptance",
        [](const std::vector<int>& only, int threads) {
            AcceptanceOptions o;
            o.only = {only.begin(), only.end()};
            o.threads = threads;
            py::list out;
            for (const auto& r : run_acceptance(o)) {
                py::dict d;
                d["criterion"] = r.id;
                d["title"] = r.title;
                d["passed"] = r.passed;
                d["detail"] = r.detail;
                d["seconds"] = r.seconds;
                out.append(d);
            }
            return out;
        },
        py::arg("only"), py::arg("threads") = 1);
}
