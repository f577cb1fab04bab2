#pragma once

#include <string>

#include "walkres/graph.hpp"

namespace walkres {

// Closed-form composition rules for the cluster G1{G2} evaluated from
// scalars, so they unit-test independently of graph construction.
//
// The Kemeny rule exists in two variants differing in a single term:
// "closed" is K = (m/m1) k1 + n1 (2m - m1)/m k2, "derived" carries the
// excursion argument through as K = (m/m1) k1 + n1 (2m - m2)/m k2.
// Measurement against the exact oracle shows the closed form drifts
// whenever m1 != m2 while the derived form tracks everywhere. Reports
// surface both with their oracle deltas; nothing downstream assumes either.
double cluster_kemeny_closed(long n1, long m1, long m2, double k1, double k2);
double cluster_kemeny_derived(long n1, long m1, long m2, double k1, double k2);

// Kirchhoff composition R = n2^2 r1 + (2 n1^2 - n1) r2.
double cluster_kirchhoff_closed(long n1, long n2, double r1, double r2);

// Formula-vs-oracle table for one cluster. Deltas are always relative to
// the oracle value, never formula-vs-formula.
struct ClusterFormulaReport {
    long n1 = 0, n2 = 0, m1 = 0, m2 = 0;
    int root = 0;

    double k_exact = 0.0, r_exact = 0.0;

    double k_closed = 0.0, k_closed_delta = 0.0;
    double k_derived = 0.0, k_derived_delta = 0.0;
    double r_closed = 0.0, r_closed_delta = 0.0;

    // Self-cluster rows (g1 == g2, root 0): specializations with n = n1.
    bool self_cluster = false;
    double k_self_closed = 0.0, k_self_closed_delta = 0.0;    // (3n+1) k1
    double r_self_closed = 0.0, r_self_closed_delta = 0.0;    // n (3n-1) r1
    double rk_self_closed = 0.0, rk_self_closed_delta = 0.0;  // n^2(3n-1)/((3n+1)d) K
    double k_self_derived = 0.0, k_self_derived_delta = 0.0;  // (3n^2+3n+1)/(n+1) k1
    double rk_self_derived = 0.0, rk_self_derived_delta = 0.0;
};

// Builds the cluster, runs the exact oracles, fills every applicable row.
// Preconditions (connectivity, n2 >= 2) are the cluster() ones; callers
// wanting the certified-HS gate run is_highly_symmetric themselves.
ClusterFormulaReport verify_cluster(const Graph& g1, const Graph& g2, int root);

// Self-cluster table for g = g1{g1} with root 0. Rejects non-regular or
// non-HS g1 (the specializations assume both).
ClusterFormulaReport self_cluster_report(const Graph& g1);

// Bounds on Kemeny's constant from the spectrum and the diameter.
struct BoundSet {
    double k_actual = 0.0;

    double lower_general = 0.0;          // (n-1)^2 / n
    bool has_bipartite = false;
    double lower_bipartite = 0.0;        // (2n-3)/2, bipartite graphs only
    double lower_majorization = 0.0;     // uses sigma^2 = (1 + sum lambda_i^2)/n
    double sigma = 0.0;

    bool upper_applicable = false;
    double upper_eigen = 0.0;
    long k_param = 0;                    // k = floor((lambda2(n-1)+1)/(lambda2+1))
    double theta = 0.0;                  // lambda2(n-k-2) - k + 2
    std::string upper_reason;            // guard name when inapplicable

    bool has_diameter_bound = false;     // regular graphs only
    double lower_diameter = 0.0;
};

BoundSet bounds(const Graph& g);

struct SandwichResult {
    double lower = 0.0;  // (n/max_deg) K
    double value = 0.0;  // R(G)
    double upper = 0.0;  // (n/min_deg) K
};

// Asserts lower <= R(G) <= upper within 1e-8 relative; throws
// invariant_violation otherwise (that identity holding is a theorem).
SandwichResult sandwich_check(const Graph& g);

}  // namespace walkres
