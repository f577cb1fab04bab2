#include "walkres/formulas.hpp"

#include <cmath>

#include "walkres/cluster.hpp"
#include "walkres/invariants.hpp"
#include "walkres/spectra.hpp"
#include "walkres/structure.hpp"
#include "walkres/symmetry.hpp"

namespace walkres {

namespace {

void check_cluster_scalars(long n1, long m1, long m2, double k1, double k2) {
    if (n1 < 2) throw invalid_input("cluster formula: n1 >= 2 required");
    if (m1 < 1 || m2 < 1) throw invalid_input("cluster formula: m1, m2 >= 1 required");
    if (k1 <= 0.0 || k2 <= 0.0) throw invalid_input("cluster formula: k1, k2 > 0 required");
}

double rel_delta(double formula, double exact) {
    return std::abs(formula - exact) / std::abs(exact);
}

}  // namespace

double cluster_kemeny_closed(long n1, long m1, long m2, double k1, double k2) {
    check_cluster_scalars(n1, m1, m2, k1, k2);
    const double m = static_cast<double>(m1 + n1 * m2);
    return (m / m1) * k1 + n1 * (2.0 * m - m1) / m * k2;
}

double cluster_kemeny_derived(long n1, long m1, long m2, double k1, double k2) {
    check_cluster_scalars(n1, m1, m2, k1, k2);
    const double m = static_cast<double>(m1 + n1 * m2);
    return (m / m1) * k1 + n1 * (2.0 * m - m2) / m * k2;
}

double cluster_kirchhoff_closed(long n1, long n2, double r1, double r2) {
    if (n1 < 2 || n2 < 2) throw invalid_input("cluster formula: n1, n2 >= 2 required");
    if (r1 <= 0.0 || r2 <= 0.0) throw invalid_input("cluster formula: r1, r2 > 0 required");
    return static_cast<double>(n2) * n2 * r1 + (2.0 * n1 * n1 - n1) * r2;
}

namespace {

bool same_graph(const Graph& a, const Graph& b) {
    return a.num_vertices() == b.num_vertices() && a.num_edges() == b.num_edges() &&
           a.edges() == b.edges();
}

}  // namespace

ClusterFormulaReport verify_cluster(const Graph& g1, const Graph& g2, int root) {
    const ClusterResult built = cluster({g1, g2, root});

    ClusterFormulaReport rep;
    rep.n1 = g1.num_vertices();
    rep.n2 = g2.num_vertices();
    rep.m1 = g1.num_edges();
    rep.m2 = g2.num_edges();
    rep.root = root;

    const double k1 = kemeny(g1).k_eigen;
    const double k2 = kemeny(g2).k_eigen;
    const double r1 = resistance_matrix(g1).kirchhoff;
    const double r2 = resistance_matrix(g2).kirchhoff;

    rep.k_exact = kemeny(built.graph).k_eigen;
    rep.r_exact = resistance_matrix(built.graph).kirchhoff;

    rep.k_closed = cluster_kemeny_closed(rep.n1, rep.m1, rep.m2, k1, k2);
    rep.k_closed_delta = rel_delta(rep.k_closed, rep.k_exact);
    rep.k_derived = cluster_kemeny_derived(rep.n1, rep.m1, rep.m2, k1, k2);
    rep.k_derived_delta = rel_delta(rep.k_derived, rep.k_exact);
    rep.r_closed = cluster_kirchhoff_closed(rep.n1, rep.n2, r1, r2);
    rep.r_closed_delta = rel_delta(rep.r_closed, rep.r_exact);

    if (same_graph(g1, g2) && g1.is_regular()) {
        rep.self_cluster = true;
        const double n = static_cast<double>(rep.n1);
        const double d = static_cast<double>(g1.degree(0));

        rep.k_self_closed = (3.0 * n + 1.0) * k1;
        rep.k_self_closed_delta = rel_delta(rep.k_self_closed, rep.k_exact);
        rep.r_self_closed = n * (3.0 * n - 1.0) * r1;
        rep.r_self_closed_delta = rel_delta(rep.r_self_closed, rep.r_exact);
        rep.rk_self_closed = n * n * (3.0 * n - 1.0) / ((3.0 * n + 1.0) * d) * rep.k_exact;
        rep.rk_self_closed_delta = rel_delta(rep.rk_self_closed, rep.r_exact);

        const double poly = 3.0 * n * n + 3.0 * n + 1.0;
        rep.k_self_derived = poly / (n + 1.0) * k1;
        rep.k_self_derived_delta = rel_delta(rep.k_self_derived, rep.k_exact);
        rep.rk_self_derived = n * n * (3.0 * n - 1.0) * (n + 1.0) / (poly * d) * rep.k_exact;
        rep.rk_self_derived_delta = rel_delta(rep.rk_self_derived, rep.r_exact);
    }
    return rep;
}

ClusterFormulaReport self_cluster_report(const Graph& g1) {
    g1.require_connected("self_cluster_report");
    if (!g1.is_regular()) throw precondition_error("self_cluster_report: g1 must be regular");
    const HSReport hs = is_highly_symmetric(g1);
    if (hs.verdict != HSVerdict::HighlySymmetric)
        throw precondition_error(
            "self_cluster_report: g1 not hitting-symmetric, witness (" +
            std::to_string(hs.witness_a) + "," + std::to_string(hs.witness_b) +
            ") asymmetry " + std::to_string(hs.witness_magnitude));
    return verify_cluster(g1, g1, 0);
}

BoundSet bounds(const Graph& g) {
    g.require_connected("bounds");
    const int n = g.num_vertices();
    const Spectrum spec = walk_spectrum(g);
    const StructureReport st = structure(g);

    BoundSet out;
    out.k_actual = kemeny(g).k_eigen;
    out.lower_general = static_cast<double>(n - 1) * (n - 1) / n;

    out.has_bipartite = st.is_bipartite;
    if (st.is_bipartite) out.lower_bipartite = (2.0 * n - 3.0) / 2.0;

    double sq = 0.0;
    for (int i = 1; i < n; ++i) sq += spec.eigenvalues[i] * spec.eigenvalues[i];
    const double sigma2 = (1.0 + sq) / n;
    out.sigma = std::sqrt(sigma2);
    const double s = out.sigma / std::sqrt(static_cast<double>(n - 1));
    // (n-2)^2 vanishes at n = 2 while the denominator hits 0; the limit is 0.
    const double second = n == 2 ? 0.0 : (n - 2.0) * (n - 2.0) / (n - 1.0 - s);
    out.lower_majorization = 1.0 / (1.0 + s) + second;

    const double l2 = spec.lambda2;
    if (l2 <= -1.0 + 1e-12) {
        out.upper_applicable = false;
        out.upper_reason = "k undefined (lambda2 = -1)";
    } else {
        // The floor argument is >= 0 exactly but can land at -eps in floating
        // point (K4 hits 0); the nudge keeps k from dropping to -1.
        const double x = (l2 * (n - 1) + 1.0) / (l2 + 1.0);
        out.k_param = static_cast<long>(std::floor(x + 1e-12));
        const long nk2 = n - out.k_param - 2;
        out.theta = l2 * nk2 - out.k_param + 2.0;
        if (nk2 <= 0) {
            out.upper_applicable = false;
            out.upper_reason = "n - k - 2 <= 0";
        } else if (out.theta <= 0.0) {
            out.upper_applicable = false;
            out.upper_reason = "theta <= 0";
        } else {
            out.upper_applicable = true;
            out.upper_eigen = nk2 / (1.0 - l2) + out.k_param / 2.0 + 1.0 / out.theta;
        }
    }

    if (st.is_regular) {
        out.has_diameter_bound = true;
        const double d = st.regular_degree;
        const double t = 2.0 * st.diameter / (d * (st.diameter + 1.0));
        const double second_d = n == 2 ? 0.0 : (n - 2.0) * (n - 2.0) / (n - 1.0 - t);
        out.lower_diameter = 1.0 / (1.0 + t) + second_d;
    }
    return out;
}

SandwichResult sandwich_check(const Graph& g) {
    g.require_connected("sandwich_check");
    const double k = kemeny(g).k_eigen;
    const double r = resistance_matrix(g).kirchhoff;
    const double n = g.num_vertices();
    SandwichResult out;
    out.lower = n / g.max_degree() * k;
    out.value = r;
    out.upper = n / g.min_degree() * k;
    const double envelope = 1e-8 * (1.0 + std::abs(r));
    if (out.lower > r + envelope || r > out.upper + envelope)
        throw invariant_violation("sandwich_check: (n/max_deg) K <= R(G) <= (n/min_deg) K violated");
    return out;
}

}  // namespace walkres
