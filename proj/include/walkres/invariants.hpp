#pragma once

#include <cstdint>
#include <vector>

#include "walkres/graph.hpp"
#include "walkres/matrix.hpp"

namespace walkres {

struct StationaryDistribution {
    std::vector<double> pi;  // pi_i = deg(i) / 2m
};

struct HittingMatrix {
    Matrix h;  // h(a,b) = expected steps from a to first visit of b; zero diagonal
};

struct ResistanceMatrix {
    Matrix r;                      // effective resistances, unit resistors
    double kirchhoff = 0.0;        // sum over unordered pairs
    double kirchhoff_trace = 0.0;  // independent route: n * trace(L+)
    std::vector<double> row_sums;  // R(i) = sum_j r(i,j)
};

struct KemenyResult {
    double k_eigen = 0.0;          // sum_{j>=2} 1/(1 - lambda_j)
    double k_hitting = 0.0;        // mean over starts of sum_j pi_j h(i,j)
    double max_start_spread = 0.0; // max_i |per-start value - k_hitting|
};

struct SimulationResult {
    double mean = 0.0;
    double stderr_ = 0.0;   // sample stddev / sqrt(trials)
    long trials = 0;
    std::uint64_t seed = 0;
    long capped_walks = 0;  // walks stopped at the step cap (diagnostic; 0 normally)
};

// pi_i = deg(i)/2m; verifies pi P = pi within 1e-12 before returning.
StationaryDistribution stationary(const Graph& g);

// First-step linear system per target column: h(b,b) = 0,
// h(a,b) = 1 + mean over neighbors of a. Residual checked per column.
HittingMatrix hitting_matrix_solve(const Graph& g);

// Independent route through the potential identity
// h(a,b) = 1/2 sum_v deg(v) (r(a,b) + r(v,b) - r(v,a)).
HittingMatrix hitting_matrix_resistance(const Graph& g, const ResistanceMatrix& r);

// r(i,j) = L+_ii + L+_jj - 2 L+_ij. Cross-checks kirchhoff against
// n * trace(L+) within 1e-8 relative.
ResistanceMatrix resistance_matrix(const Graph& g);

// Both routes; throws invariant_violation if they disagree beyond
// 1e-8 (1 + K) or the start-vertex spread exceeds the same envelope.
KemenyResult kemeny(const Graph& g);

// Monte Carlo estimate of h(a,b): `trials` independent walks, SplitMix64
// substream per walk, sequential accumulation. Walks hitting the 1e9 step
// cap are recorded in capped_walks rather than looping forever.
SimulationResult simulate_hitting(const Graph& g, int a, int b, long trials,
                                  std::uint64_t seed);

}  // namespace walkres
