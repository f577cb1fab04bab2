#include <algorithm>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "walkres/cluster.hpp"
#include "walkres/families.hpp"
#include "walkres/formulas.hpp"
#include "walkres/graph.hpp"
#include "walkres/invariants.hpp"
#include "walkres/report.hpp"
#include "walkres/spectra.hpp"
#include "walkres/structure.hpp"
#include "walkres/symmetry.hpp"

namespace {

using namespace walkres;

std::string join_doubles(const std::vector<double>& v) {
    std::ostringstream out;
    out << std::setprecision(15);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ' ';
        out << v[i];
    }
    return out.str();
}

std::string matrix_row(const Matrix& m, std::size_t i) {
    std::vector<double> row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    return join_doubles(row);
}

double clamp_tolerance(double t) { return std::max(t, 1e-12); }

struct Options {
    std::string graph_path, g1_path, g2_path, out_path;
    std::string family, mode = "full";
    std::vector<int> params;
    std::vector<std::string> selectors;
    int root = 0;
    int from = 0, to = -1;
    long trials = 0;
    std::uint64_t seed = 0;
    double tolerance = 1e-7;
};

void emit_structure(Report& rep, const Graph& g) {
    const StructureReport st = structure(g);
    rep.add("structure.diameter", st.diameter);
    rep.add("structure.bipartite", st.is_bipartite);
    rep.add("structure.regular", st.is_regular);
    if (st.is_regular) rep.add("structure.degree", st.regular_degree);
    rep.add("structure.bridges", static_cast<long>(st.bridges.size()));
    for (std::size_t i = 0; i < st.bridges.size(); ++i) {
        const Bridge& b = st.bridges[i];
        std::ostringstream v;
        v << b.u << ' ' << b.v << " components " << b.mu << ' ' << b.mv;
        rep.add("structure.bridge." + std::to_string(i), v.str());
    }
    std::string arts;
    for (int v : st.articulation_points) {
        if (!arts.empty()) arts += ' ';
        arts += std::to_string(v);
    }
    rep.add("structure.articulation_points",
            st.articulation_points.empty() ? std::string("none") : arts);
}

int cmd_gen(const Options& opt, int argc, char** argv) {
    const Graph g = generate(opt.family, opt.params);
    if (opt.out_path.empty()) {
        std::cout << format_edge_list(g);
        return 0;
    }
    write_edge_list_file(g, opt.out_path);
    Report rep;
    rep.echo_command(argc, argv);
    rep.fingerprint("output", g);
    rep.add("output.path", opt.out_path);
    rep.print();
    return 0;
}

int cmd_compute(const Options& opt, int argc, char** argv) {
    const Graph g = read_edge_list_file(opt.graph_path);
    g.require_connected("compute");
    std::set<std::string> want(opt.selectors.begin(), opt.selectors.end());
    if (want.empty()) want.insert("all");
    const auto selected = [&](const char* name) {
        return want.count(name) > 0 || want.count("all") > 0;
    };
    for (const auto& s : want) {
        static const std::set<std::string> known{"kemeny",     "kirchhoff", "resistance",
                                                 "hitting",    "stationary", "spectrum",
                                                 "structure",  "all"};
        if (!known.count(s)) throw invalid_input("unknown selector \"" + s + "\"");
    }

    Report rep;
    rep.echo_command(argc, argv);
    rep.fingerprint("input", g);

    if (selected("structure")) emit_structure(rep, g);
    if (selected("stationary")) {
        const auto pi = stationary(g);
        rep.add("stationary.pi", join_doubles(pi.pi));
    }
    if (selected("spectrum")) {
        const Spectrum sp = walk_spectrum(g);
        rep.add("spectrum.eigenvalues", join_doubles(sp.eigenvalues));
        rep.add("spectrum.lambda2", sp.lambda2);
    }
    if (selected("kemeny")) {
        const KemenyResult k = kemeny(g);
        rep.add("kemeny.k_eigen", k.k_eigen);
        rep.add("kemeny.k_hitting", k.k_hitting);
        rep.add("kemeny.max_start_spread", k.max_start_spread);
    }
    if (selected("kirchhoff") || selected("resistance")) {
        const ResistanceMatrix r = resistance_matrix(g);
        rep.add("kirchhoff.pair_sum", r.kirchhoff);
        rep.add("kirchhoff.n_trace", r.kirchhoff_trace);
        if (selected("resistance")) {
            for (int i = 0; i < g.num_vertices(); ++i)
                rep.add("resistance.row." + std::to_string(i), matrix_row(r.r, i));
            rep.add("resistance.row_sums", join_doubles(r.row_sums));
        }
    }
    if (selected("hitting")) {
        const HittingMatrix solve_route = hitting_matrix_solve(g);
        const ResistanceMatrix r = resistance_matrix(g);
        const HittingMatrix res_route = hitting_matrix_resistance(g, r);
        double route_delta = 0.0;
        for (int i = 0; i < g.num_vertices(); ++i)
            for (int j = 0; j < g.num_vertices(); ++j)
                route_delta = std::max(route_delta,
                                       std::abs(solve_route.h(i, j) - res_route.h(i, j)));
        for (int i = 0; i < g.num_vertices(); ++i)
            rep.add("hitting.row." + std::to_string(i), matrix_row(solve_route.h, i));
        rep.add("hitting.route_delta", route_delta);
        if (opt.trials > 0) {
            const int to = opt.to < 0 ? g.num_vertices() - 1 : opt.to;
            const SimulationResult sim = simulate_hitting(g, opt.from, to, opt.trials, opt.seed);
            rep.add("hitting.sim.from", opt.from);
            rep.add("hitting.sim.to", to);
            rep.add("hitting.sim.trials", sim.trials);
            rep.add("hitting.sim.seed", static_cast<long>(sim.seed));
            rep.add("hitting.sim.mean", sim.mean);
            rep.add("hitting.sim.stderr", sim.stderr_);
            rep.add("hitting.sim.exact", solve_route.h(opt.from, to));
            if (sim.capped_walks > 0) rep.add("hitting.sim.capped_walks", sim.capped_walks);
        }
    }
    rep.print();
    return 0;
}

int cmd_check_hs(const Options& opt, int argc, char** argv) {
    const Graph g = read_edge_list_file(opt.graph_path);
    g.require_connected("check-hs");
    Report rep;
    rep.echo_command(argc, argv);
    rep.fingerprint("input", g);

    const HSReport screen = screen_necessary_conditions(g);
    rep.add("screen.verdict",
            screen.verdict == HSVerdict::HighlySymmetric ? "pass" : "NotHS");
    if (screen.verdict == HSVerdict::NotHS) {
        rep.add("screen.rule", screen.rule);
        if (screen.rule_vertex >= 0) rep.add("screen.vertex", screen.rule_vertex);
        if (screen.rule_edge_u >= 0)
            rep.add("screen.edge",
                    std::to_string(screen.rule_edge_u) + " " + std::to_string(screen.rule_edge_v));
    }

    if (opt.mode == "full") {
        const HSReport full = is_highly_symmetric(g, clamp_tolerance(opt.tolerance));
        rep.add("verdict",
                full.verdict == HSVerdict::HighlySymmetric ? "HighlySymmetric" : "NotHS");
        rep.add("max_asymmetry", full.max_asymmetry);
        rep.add("tolerance", full.tolerance);
        if (full.verdict == HSVerdict::NotHS) {
            rep.add("witness.a", full.witness_a);
            rep.add("witness.b", full.witness_b);
            rep.add("witness.magnitude", full.witness_magnitude);
        } else {
            rep.add("certificate.hitting_resistance_dev", full.hitting_resistance_dev);
            rep.add("certificate.row_sum_dev", full.row_sum_dev);
        }
    } else {
        rep.add("verdict", screen.verdict == HSVerdict::HighlySymmetric
                               ? "HighlySymmetric-not-excluded"
                               : "NotHS");
    }
    rep.add("survey.walk_regular_checked", opt.mode == "full");
    if (opt.mode == "full") {
        const SymmetrySurvey sv = is_walk_regular(g);
        rep.add("survey.walk_regular", sv.walk_regular);
        if (!sv.walk_regular) rep.add("survey.failure_k", sv.walk_regular_failure_k);
        rep.add("survey.regular", sv.regular);
        rep.add("survey.modular_fallback", sv.modular_fallback);
        const double ret_dev = check_return_time_identity(g);
        rep.add("survey.return_time_dev", ret_dev);
    }
    rep.print();
    return 0;
}

int cmd_cluster(const Options& opt, int argc, char** argv) {
    const Graph g1 = read_edge_list_file(opt.g1_path);
    const Graph g2 = read_edge_list_file(opt.g2_path);
    const ClusterResult built = cluster({g1, g2, opt.root});
    if (opt.out_path.empty()) throw invalid_input("cluster: --output path required");
    write_edge_list_file(built.graph, opt.out_path);

    Report rep;
    rep.echo_command(argc, argv);
    rep.fingerprint("g1", g1);
    rep.fingerprint("g2", g2);
    rep.add("root", opt.root);
    rep.fingerprint("output", built.graph);
    rep.add("output.path", opt.out_path);
    long backbone = 0;
    for (const auto& role : built.roles) backbone += role.backbone ? 1 : 0;
    rep.add("output.backbone_vertices", backbone);
    rep.print();
    return 0;
}

void require_certified(const Graph& g, const char* label) {
    if (!g.is_regular())
        throw precondition_error(std::string(label) + " is not regular");
    const HSReport hs = is_highly_symmetric(g);
    if (hs.verdict != HSVerdict::HighlySymmetric)
        throw precondition_error(std::string(label) + " is not hitting-symmetric: witness (" +
                                 std::to_string(hs.witness_a) + "," +
                                 std::to_string(hs.witness_b) + ") asymmetry " +
                                 std::to_string(hs.witness_magnitude));
}

int cmd_verify_cluster(const Options& opt, int argc, char** argv) {
    const Graph g1 = read_edge_list_file(opt.g1_path);
    const Graph g2 = read_edge_list_file(opt.g2_path);
    require_certified(g1, "g1");
    require_certified(g2, "g2");

    const ClusterFormulaReport r = verify_cluster(g1, g2, opt.root);
    const double tol = clamp_tolerance(opt.tolerance);
    const auto ok = [&](double formula, double exact) {
        return std::abs(formula - exact) <= tol * (1.0 + std::abs(exact));
    };

    Report rep;
    rep.echo_command(argc, argv);
    rep.fingerprint("g1", g1);
    rep.fingerprint("g2", g2);
    rep.add("root", opt.root);
    rep.add("n1", r.n1);
    rep.add("m1", r.m1);
    rep.add("n2", r.n2);
    rep.add("m2", r.m2);
    rep.add("k_exact", r.k_exact);
    rep.add("k_closed", r.k_closed);
    rep.add("k_closed_delta", r.k_closed_delta);
    rep.add("k_closed_ok", ok(r.k_closed, r.k_exact));
    rep.add("k_derived", r.k_derived);
    rep.add("k_derived_delta", r.k_derived_delta);
    rep.add("k_derived_ok", ok(r.k_derived, r.k_exact));
    rep.add("r_exact", r.r_exact);
    rep.add("r_closed", r.r_closed);
    rep.add("r_closed_delta", r.r_closed_delta);
    rep.add("r_closed_ok", ok(r.r_closed, r.r_exact));
    rep.add("self_cluster", r.self_cluster);
    if (r.self_cluster) {
        rep.add("k_self_closed", r.k_self_closed);
        rep.add("k_self_closed_delta", r.k_self_closed_delta);
        rep.add("r_self_closed", r.r_self_closed);
        rep.add("r_self_closed_delta", r.r_self_closed_delta);
        rep.add("rk_self_closed", r.rk_self_closed);
        rep.add("rk_self_closed_delta", r.rk_self_closed_delta);
        rep.add("k_self_derived", r.k_self_derived);
        rep.add("k_self_derived_delta", r.k_self_derived_delta);
        rep.add("rk_self_derived", r.rk_self_derived);
        rep.add("rk_self_derived_delta", r.rk_self_derived_delta);
    }
    rep.print();
    return 0;
}

int cmd_bounds(const Options& opt, int argc, char** argv) {
    const Graph g = read_edge_list_file(opt.graph_path);
    g.require_connected("bounds");
    const BoundSet b = bounds(g);
    const SandwichResult sw = sandwich_check(g);

    Report rep;
    rep.echo_command(argc, argv);
    rep.fingerprint("input", g);
    rep.add("k_actual", b.k_actual);
    rep.add("lower_general", b.lower_general);
    if (b.has_bipartite) rep.add("lower_bipartite", b.lower_bipartite);
    rep.add("lower_majorization", b.lower_majorization);
    rep.add("sigma", b.sigma);
    if (b.upper_applicable) {
        rep.add("upper_eigen", b.upper_eigen);
        rep.add("upper_eigen.k", b.k_param);
        rep.add("upper_eigen.theta", b.theta);
    } else {
        rep.add("upper_eigen", "inapplicable");
        rep.add("upper_eigen.reason", b.upper_reason);
    }
    if (b.has_diameter_bound) rep.add("lower_diameter", b.lower_diameter);
    rep.add("sandwich.lower", sw.lower);
    rep.add("sandwich.value", sw.value);
    rep.add("sandwich.upper", sw.upper);
    rep.print();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random-walk and resistance invariants on simple connected graphs"};
    app.require_subcommand(1);
    Options opt;

    auto* gen = app.add_subcommand("gen", "generate a named family as an edge list");
    gen->add_option("family", opt.family, "family name")->required();
    gen->add_option("params", opt.params, "integer parameters");
    gen->add_option("--output", opt.out_path, "write edge list here instead of stdout");

    auto* compute = app.add_subcommand("compute", "invariants of a graph");
    compute->add_option("graph", opt.graph_path, "edge-list file")->required();
    compute->add_option("selectors", opt.selectors,
                        "any of kemeny kirchhoff resistance hitting stationary spectrum structure all");
    compute->add_option("--trials", opt.trials, "Monte Carlo trials for the hitting selector");
    compute->add_option("--seed", opt.seed, "Monte Carlo seed (default 0)");
    compute->add_option("--from", opt.from, "Monte Carlo start vertex (default 0)");
    compute->add_option("--to", opt.to, "Monte Carlo target vertex (default n-1)");

    auto* checkhs = app.add_subcommand("check-hs", "hitting-symmetry classification");
    checkhs->add_option("graph", opt.graph_path, "edge-list file")->required();
    checkhs->add_option("--mode", opt.mode, "screen|full (default full)")
        ->check(CLI::IsMember({"screen", "full"}));
    checkhs->add_option("--tolerance", opt.tolerance, "relative tolerance (floor 1e-12)");

    auto* clus = app.add_subcommand("cluster", "glue a copy of g2 onto every vertex of g1");
    clus->add_option("g1", opt.g1_path, "backbone edge-list file")->required();
    clus->add_option("g2", opt.g2_path, "copy edge-list file")->required();
    clus->add_option("--root", opt.root, "g2 vertex glued onto g1 (default 0)");
    clus->add_option("--output", opt.out_path, "result edge-list path")->required();

    auto* verify = app.add_subcommand("verify-cluster", "formula-vs-oracle table for a cluster");
    verify->add_option("g1", opt.g1_path, "backbone edge-list file")->required();
    verify->add_option("g2", opt.g2_path, "copy edge-list file")->required();
    verify->add_option("--root", opt.root, "g2 vertex glued onto g1 (default 0)");
    verify->add_option("--tolerance", opt.tolerance, "relative tolerance (floor 1e-12)");

    auto* bnd = app.add_subcommand("bounds", "Kemeny bounds and the resistance sandwich");
    bnd->add_option("graph", opt.graph_path, "edge-list file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) return cmd_gen(opt, argc, argv);
        if (compute->parsed()) return cmd_compute(opt, argc, argv);
        if (checkhs->parsed()) return cmd_check_hs(opt, argc, argv);
        if (clus->parsed()) return cmd_cluster(opt, argc, argv);
        if (verify->parsed()) return cmd_verify_cluster(opt, argc, argv);
        if (bnd->parsed()) return cmd_bounds(opt, argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const numeric_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violated: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 1;
}
