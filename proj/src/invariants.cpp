#include "walkres/invariants.hpp"

#include <cmath>
#include <string>

#include "walkres/rng.hpp"
#include "walkres/spectra.hpp"

namespace walkres {

StationaryDistribution stationary(const Graph& g) {
    g.require_connected("stationary");
    const int n = g.num_vertices();
    const double two_m = 2.0 * static_cast<double>(g.num_edges());
    StationaryDistribution out;
    out.pi.resize(n);
    for (int v = 0; v < n; ++v) out.pi[v] = g.degree(v) / two_m;

    // (pi P)_j = sum_{i ~ j} pi_i / deg(i); must reproduce pi_j.
    for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int i : g.neighbors(j)) acc += out.pi[i] / g.degree(i);
        if (std::abs(acc - out.pi[j]) > 1e-12)
            throw invariant_violation("stationary: pi P != pi at vertex " + std::to_string(j));
    }
    return out;
}

HittingMatrix hitting_matrix_solve(const Graph& g) {
    g.require_connected("hitting_matrix_solve");
    const int n = g.num_vertices();
    HittingMatrix out;
    out.h = Matrix(n, n, 0.0);

    // One first-step system per target: h(b)=0, h(a) = 1 + mean_{w~a} h(w).
    std::vector<int> row_of(n);
    for (int b = 0; b < n; ++b) {
        std::vector<int> verts;
        verts.reserve(n - 1);
        for (int v = 0; v < n; ++v)
            if (v != b) {
                row_of[v] = static_cast<int>(verts.size());
                verts.push_back(v);
            }
        const int k = n - 1;
        Matrix a(k, k, 0.0);
        std::vector<double> rhs(k, 1.0);
        for (int idx = 0; idx < k; ++idx) {
            const int v = verts[idx];
            a(idx, idx) = 1.0;
            const double inv_deg = 1.0 / g.degree(v);
            for (int w : g.neighbors(v))
                if (w != b) a(idx, row_of[w]) -= inv_deg;
        }
        const auto h = solve_linear(a, rhs, "hitting system, target " + std::to_string(b));
        for (int idx = 0; idx < k; ++idx) out.h(verts[idx], b) = h[idx];
    }
    return out;
}

HittingMatrix hitting_matrix_resistance(const Graph& g, const ResistanceMatrix& r) {
    const int n = g.num_vertices();
    HittingMatrix out;
    out.h = Matrix(n, n, 0.0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            double acc = 0.0;
            for (int v = 0; v < n; ++v)
                acc += g.degree(v) * (r.r(a, b) + r.r(v, b) - r.r(v, a));
            out.h(a, b) = 0.5 * acc;
        }
    return out;
}

ResistanceMatrix resistance_matrix(const Graph& g) {
    g.require_connected("resistance_matrix");
    const int n = g.num_vertices();
    const Matrix pinv = laplacian_pinv(g);

    ResistanceMatrix out;
    out.r = Matrix(n, n, 0.0);
    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += pinv(i, i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) out.r(i, j) = pinv(i, i) + pinv(j, j) - 2.0 * pinv(i, j);

    out.row_sums.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) out.row_sums[i] += out.r(i, j);
        if (i > 0)
            for (int j = 0; j < i; ++j) out.kirchhoff += out.r(j, i);
    }
    out.kirchhoff_trace = n * trace;
    if (std::abs(out.kirchhoff - out.kirchhoff_trace) > 1e-8 * (1.0 + std::abs(out.kirchhoff_trace)))
        throw invariant_violation("resistance_matrix: pair sum vs n*trace(L+) disagree");
    return out;
}

KemenyResult kemeny(const Graph& g) {
    g.require_connected("kemeny");
    const int n = g.num_vertices();

    const Spectrum spec = walk_spectrum(g);
    KemenyResult out;
    for (int j = 1; j < n; ++j) out.k_eigen += 1.0 / (1.0 - spec.eigenvalues[j]);

    const StationaryDistribution pi = stationary(g);
    const HittingMatrix hm = hitting_matrix_solve(g);
    std::vector<double> per_start(n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) per_start[i] += pi.pi[j] * hm.h(i, j);
        out.k_hitting += per_start[i];
    }
    out.k_hitting /= n;
    for (int i = 0; i < n; ++i)
        out.max_start_spread = std::max(out.max_start_spread, std::abs(per_start[i] - out.k_hitting));

    if (std::abs(out.k_eigen - out.k_hitting) > 1e-8 * (1.0 + std::abs(out.k_eigen)))
        throw invariant_violation("kemeny: eigenvalue and hitting routes disagree");
    if (out.max_start_spread > 1e-8 * (1.0 + std::abs(out.k_hitting)))
        throw invariant_violation("kemeny: start-vertex spread too large");
    return out;
}

SimulationResult simulate_hitting(const Graph& g, int a, int b, long trials, std::uint64_t seed) {
    g.require_connected("simulate_hitting");
    const int n = g.num_vertices();
    if (a < 0 || a >= n || b < 0 || b >= n) throw invalid_input("simulate_hitting: vertex out of range");
    if (a == b) throw invalid_input("simulate_hitting: start equals target");
    if (trials < 1) throw invalid_input("simulate_hitting: trials >= 1 required");

    constexpr long kStepCap = 1000000000L;
    SplitMix64 master(seed);
    SimulationResult out;
    out.trials = trials;
    out.seed = seed;

    double mean = 0.0, m2 = 0.0;
    for (long t = 0; t < trials; ++t) {
        SplitMix64 walk_rng = master.split();
        int cur = a;
        long steps = 0;
        while (cur != b && steps < kStepCap) {
            const auto& nb = g.neighbors(cur);
            cur = nb[walk_rng.uniform_below(nb.size())];
            ++steps;
        }
        if (cur != b) ++out.capped_walks;
        const double x = static_cast<double>(steps);
        const double delta = x - mean;
        mean += delta / static_cast<double>(t + 1);
        m2 += delta * (x - mean);
    }
    out.mean = mean;
    if (trials > 1) out.stderr_ = std::sqrt(m2 / static_cast<double>(trials - 1) / static_cast<double>(trials));
    return out;
}

}  // namespace walkres
