#include "walkres/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "walkres/structure.hpp"

namespace walkres {

HSReport is_highly_symmetric(const Graph& g, double tolerance) {
    g.require_connected("is_highly_symmetric");
    const int n = g.num_vertices();
    const HittingMatrix hm = hitting_matrix_solve(g);

    HSReport rep;
    double max_entry = 0.0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            max_entry = std::max({max_entry, hm.h(a, b), hm.h(b, a)});
            const double asym = std::abs(hm.h(a, b) - hm.h(b, a));
            if (asym > rep.max_asymmetry) {
                rep.max_asymmetry = asym;
                rep.witness_a = a;
                rep.witness_b = b;
            }
        }
    rep.tolerance = tolerance * (1.0 + max_entry);
    if (rep.max_asymmetry > rep.tolerance) {
        rep.verdict = HSVerdict::NotHS;
        rep.witness_magnitude = rep.max_asymmetry;
        return rep;
    }

    rep.verdict = HSVerdict::HighlySymmetric;
    rep.witness_a = rep.witness_b = -1;

    // Certificate extras, both theorems for hitting-symmetric graphs:
    // h(a,b) = m r(a,b), and R(i) constant across i.
    const ResistanceMatrix rm = resistance_matrix(g);
    const double m = static_cast<double>(g.num_edges());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            const double expect = m * rm.r(a, b);
            const double rel = std::abs(hm.h(a, b) - expect) / (1.0 + std::abs(expect));
            rep.hitting_resistance_dev = std::max(rep.hitting_resistance_dev, rel);
        }
    double mean_row = 0.0;
    for (double s : rm.row_sums) mean_row += s;
    mean_row /= n;
    for (double s : rm.row_sums)
        rep.row_sum_dev = std::max(rep.row_sum_dev, std::abs(s - mean_row) / (1.0 + std::abs(mean_row)));

    if (rep.hitting_resistance_dev > 1e-7)
        throw invariant_violation("is_highly_symmetric: certified graph fails h = m r");
    if (rep.row_sum_dev > 1e-8)
        throw invariant_violation("is_highly_symmetric: certified graph has non-constant R(i)");
    return rep;
}

namespace {

using Row = std::vector<std::int64_t>;
struct OverflowTag {};

// cur <- cur * A in exact int64; throws OverflowTag when a product or sum
// would leave the representable range.
void mul_adjacency_checked(std::vector<Row>& cur, const Graph& g) {
    const int n = g.num_vertices();
    std::vector<Row> next(n, Row(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (int w : g.neighbors(j)) {  // A(w, j) = 1
                if (__builtin_add_overflow(acc, cur[i][w], &acc)) throw OverflowTag{};
            }
            next[i][j] = acc;
        }
    cur = std::move(next);
}

void mul_adjacency_mod(std::vector<Row>& cur, const Graph& g, std::int64_t p) {
    const int n = g.num_vertices();
    std::vector<Row> next(n, Row(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t acc = 0;
            for (int w : g.neighbors(j)) acc = (acc + cur[i][w]) % p;
            next[i][j] = acc;
        }
    cur = std::move(next);
}

bool diag_constant(const std::vector<Row>& m) {
    for (std::size_t i = 1; i < m.size(); ++i)
        if (m[i][i] != m[0][0]) return false;
    return true;
}

}  // namespace

SymmetrySurvey is_walk_regular(const Graph& g) {
    g.require_connected("is_walk_regular");
    const int n = g.num_vertices();
    SymmetrySurvey survey;
    survey.regular = g.is_regular();

    auto identity = [n]() {
        std::vector<Row> m(n, Row(n, 0));
        for (int i = 0; i < n; ++i) m[i][i] = 1;
        return m;
    };

    // Powers beyond n add nothing: A^k for k >= n is a linear combination of
    // A^0..A^(n-1) with vertex-independent coefficients (characteristic
    // polynomial), so constant diagonals propagate.
    try {
        std::vector<Row> cur = identity();
        mul_adjacency_checked(cur, g);  // A^1
        for (int k = 2; k <= n; ++k) {
            mul_adjacency_checked(cur, g);
            if (!diag_constant(cur)) {
                survey.walk_regular = false;
                survey.walk_regular_failure_k = k;
                return survey;
            }
        }
        survey.walk_regular = true;
        return survey;
    } catch (OverflowTag) {
        // Exact path left int64; redo everything as residues mod two primes.
    }

    survey.modular_fallback = true;
    survey.fallback_primes = {2147483647LL, 2147483629LL};
    std::vector<std::vector<Row>> cur(2, identity());
    for (int pi = 0; pi < 2; ++pi) mul_adjacency_mod(cur[pi], g, survey.fallback_primes[pi]);
    for (int k = 2; k <= n; ++k) {
        for (int pi = 0; pi < 2; ++pi) {
            mul_adjacency_mod(cur[pi], g, survey.fallback_primes[pi]);
            if (!diag_constant(cur[pi])) {
                survey.walk_regular = false;
                survey.walk_regular_failure_k = k;
                return survey;
            }
        }
    }
    survey.walk_regular = true;
    return survey;
}

std::vector<int> resistance_regular_vertices(const Graph& g, const ResistanceMatrix& r) {
    std::vector<int> out;
    for (int i = 0; i < g.num_vertices(); ++i) {
        const auto& nb = g.neighbors(i);
        bool regular = true;
        for (std::size_t t = 1; t < nb.size() && regular; ++t)
            if (std::abs(r.r(i, nb[t]) - r.r(i, nb[0])) > 1e-9) regular = false;
        if (regular) out.push_back(i);
    }
    return out;
}

HSReport screen_necessary_conditions(const Graph& g) {
    g.require_connected("screen_necessary_conditions");
    const StructureReport st = structure(g);

    HSReport rep;
    rep.screener_only = true;

    if (st.bridges.size() >= 2) {
        rep.verdict = HSVerdict::NotHS;
        rep.rule = "iv";
        rep.rule_edge_u = st.bridges[1].u;  // the second cut-edge witnesses the pair
        rep.rule_edge_v = st.bridges[1].v;
        return rep;
    }
    for (const Bridge& b : st.bridges)
        if (b.mu != b.mv) {
            rep.verdict = HSVerdict::NotHS;
            rep.rule = "iii";
            rep.rule_edge_u = b.u;
            rep.rule_edge_v = b.v;
            return rep;
        }
    if (!st.articulation_points.empty()) {
        const ResistanceMatrix rm = resistance_matrix(g);
        const auto rr = resistance_regular_vertices(g, rm);
        for (int v : st.articulation_points)
            if (std::binary_search(rr.begin(), rr.end(), v)) {
                rep.verdict = HSVerdict::NotHS;
                rep.rule = "ii";
                rep.rule_vertex = v;
                return rep;
            }
    }
    rep.verdict = HSVerdict::HighlySymmetric;  // "not excluded", never a certificate
    return rep;
}

double check_return_time_identity(const Graph& g) {
    g.require_connected("check_return_time_identity");
    const int n = g.num_vertices();
    const HittingMatrix hm = hitting_matrix_solve(g);
    const double two_m = 2.0 * static_cast<double>(g.num_edges());
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j : g.neighbors(i)) acc += hm.h(j, i);
        const double ret = 1.0 + acc / g.degree(i);
        const double expect = two_m / g.degree(i);
        worst = std::max(worst, std::abs(ret - expect) / (1.0 + expect));
    }
    return worst;
}

}  // namespace walkres
