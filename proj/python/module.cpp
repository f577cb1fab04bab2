#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "walkres/cluster.hpp"
#include "walkres/families.hpp"
#include "walkres/formulas.hpp"
#include "walkres/graph.hpp"
#include "walkres/invariants.hpp"
#include "walkres/spectra.hpp"
#include "walkres/structure.hpp"
#include "walkres/symmetry.hpp"

namespace py = pybind11;
using namespace walkres;

namespace {

std::vector<std::vector<double>> matrix_rows(const Matrix& m) {
    std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

py::dict hs_dict(const HSReport& r) {
    py::dict d;
    d["verdict"] = r.verdict == HSVerdict::HighlySymmetric ? "HighlySymmetric" : "NotHS";
    d["screener_only"] = r.screener_only;
    d["max_asymmetry"] = r.max_asymmetry;
    if (r.verdict == HSVerdict::NotHS) {
        if (!r.rule.empty()) {
            d["rule"] = r.rule;
            if (r.rule_vertex >= 0) d["vertex"] = r.rule_vertex;
            if (r.rule_edge_u >= 0) d["edge"] = py::make_tuple(r.rule_edge_u, r.rule_edge_v);
        } else {
            d["witness"] = py::make_tuple(r.witness_a, r.witness_b);
            d["magnitude"] = r.witness_magnitude;
        }
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_walkres, m) {
    m.doc() = "random-walk and resistance invariants on simple connected graphs";

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("m", &Graph::num_edges)
        .def("degree", &Graph::degree)
        .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
        .def("edges", &Graph::edges)
        .def("is_connected", &Graph::is_connected)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.num_vertices() << ", m=" << g.num_edges() << ")";
            return s.str();
        });

    m.def("make_graph", &make_graph, py::arg("n"), py::arg("edges"));
    m.def("generate", &generate, py::arg("family"), py::arg("params") = std::vector<int>{});
    m.def("from_edge_list", [](const std::string& text) {
        std::istringstream in(text);
        return parse_edge_list(in);
    });
    m.def("to_edge_list", &format_edge_list);

    m.def("cluster", [](const Graph& g1, const Graph& g2, int root) {
        return cluster({g1, g2, root}).graph;
    }, py::arg("g1"), py::arg("g2"), py::arg("root") = 0);

    m.def("stationary", [](const Graph& g) { return stationary(g).pi; });
    m.def("walk_spectrum", [](const Graph& g) { return walk_spectrum(g).eigenvalues; });
    m.def("hitting_matrix", [](const Graph& g) { return matrix_rows(hitting_matrix_solve(g).h); });
    m.def("resistance_matrix", [](const Graph& g) {
        const ResistanceMatrix r = resistance_matrix(g);
        py::dict d;
        d["r"] = matrix_rows(r.r);
        d["kirchhoff"] = r.kirchhoff;
        d["row_sums"] = r.row_sums;
        return d;
    });
    m.def("kemeny", [](const Graph& g) {
        const KemenyResult k = kemeny(g);
        py::dict d;
        d["k_eigen"] = k.k_eigen;
        d["k_hitting"] = k.k_hitting;
        d["max_start_spread"] = k.max_start_spread;
        return d;
    });
    m.def("simulate_hitting", [](const Graph& g, int a, int b, long trials, std::uint64_t seed) {
        const SimulationResult r = simulate_hitting(g, a, b, trials, seed);
        py::dict d;
        d["mean"] = r.mean;
        d["stderr"] = r.stderr_;
        d["trials"] = r.trials;
        d["capped_walks"] = r.capped_walks;
        return d;
    }, py::arg("g"), py::arg("a"), py::arg("b"), py::arg("trials"), py::arg("seed") = 0);

    m.def("is_highly_symmetric", [](const Graph& g, double tol) {
        return hs_dict(is_highly_symmetric(g, tol));
    }, py::arg("g"), py::arg("tolerance") = 1e-7);
    m.def("screen_necessary_conditions", [](const Graph& g) {
        return hs_dict(screen_necessary_conditions(g));
    });
    m.def("is_walk_regular", [](const Graph& g) {
        const SymmetrySurvey s = is_walk_regular(g);
        py::dict d;
        d["walk_regular"] = s.walk_regular;
        d["failure_k"] = s.walk_regular_failure_k;
        d["regular"] = s.regular;
        d["modular_fallback"] = s.modular_fallback;
        return d;
    });
    m.def("check_return_time_identity", &check_return_time_identity);

    m.def("verify_cluster", [](const Graph& g1, const Graph& g2, int root) {
        const ClusterFormulaReport r = verify_cluster(g1, g2, root);
        py::dict d;
        d["k_exact"] = r.k_exact;
        d["r_exact"] = r.r_exact;
        d["k_closed"] = r.k_closed;
        d["k_closed_delta"] = r.k_closed_delta;
        d["k_derived"] = r.k_derived;
        d["k_derived_delta"] = r.k_derived_delta;
        d["r_closed"] = r.r_closed;
        d["r_closed_delta"] = r.r_closed_delta;
        d["self_cluster"] = r.self_cluster;
        if (r.self_cluster) {
            d["k_self_closed"] = r.k_self_closed;
            d["k_self_closed_delta"] = r.k_self_closed_delta;
            d["r_self_closed"] = r.r_self_closed;
            d["r_self_closed_delta"] = r.r_self_closed_delta;
            d["rk_self_closed"] = r.rk_self_closed;
            d["rk_self_closed_delta"] = r.rk_self_closed_delta;
            d["k_self_derived"] = r.k_self_derived;
            d["k_self_derived_delta"] = r.k_self_derived_delta;
            d["rk_self_derived"] = r.rk_self_derived;
            d["rk_self_derived_delta"] = r.rk_self_derived_delta;
        }
        return d;
    }, py::arg("g1"), py::arg("g2"), py::arg("root") = 0);

    m.def("bounds", [](const Graph& g) {
        const BoundSet b = bounds(g);
        py::dict d;
        d["k_actual"] = b.k_actual;
        d["lower_general"] = b.lower_general;
        if (b.has_bipartite) d["lower_bipartite"] = b.lower_bipartite;
        d["lower_majorization"] = b.lower_majorization;
        d["sigma"] = b.sigma;
        if (b.upper_applicable) {
            d["upper_eigen"] = b.upper_eigen;
            d["k"] = b.k_param;
            d["theta"] = b.theta;
        } else {
            d["upper_reason"] = b.upper_reason;
        }
        if (b.has_diameter_bound) d["lower_diameter"] = b.lower_diameter;
        return d;
    });
    m.def("sandwich_check", [](const Graph& g) {
        const SandwichResult s = sandwich_check(g);
        return py::make_tuple(s.lower, s.value, s.upper);
    });

    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<invalid_input>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<numeric_error>(m, "NumericError", PyExc_ArithmeticError);
}
