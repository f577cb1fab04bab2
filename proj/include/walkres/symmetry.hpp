#pragma once

#include <string>
#include <vector>

#include "walkres/graph.hpp"
#include "walkres/invariants.hpp"

namespace walkres {

enum class HSVerdict { HighlySymmetric, NotHS };

// Verdict of the hitting-symmetry test or the necessary-condition screener.
// screener_only = true means the expensive direct test never ran, so a
// HighlySymmetric verdict only says "not excluded".
struct HSReport {
    HSVerdict verdict = HSVerdict::NotHS;
    bool screener_only = false;

    // Populated on NotHS from the direct test: the maximizing pair.
    int witness_a = -1, witness_b = -1;
    double witness_magnitude = 0.0;  // |h(a,b) - h(b,a)|

    // Populated on NotHS from the screener: rule id "ii", "iii" or "iv"
    // plus the offending vertex or edge.
    std::string rule;
    int rule_vertex = -1;
    int rule_edge_u = -1, rule_edge_v = -1;

    // Diagnostics from the direct test.
    double max_asymmetry = 0.0;  // max |h(a,b) - h(b,a)| over pairs
    double tolerance = 0.0;      // threshold the verdict used
    // Certificate extras, filled when certified HighlySymmetric:
    // max relative deviations of h(a,b) = m r(a,b) and of R(i) constancy.
    double hitting_resistance_dev = 0.0;
    double row_sum_dev = 0.0;
};

struct SymmetrySurvey {
    bool walk_regular = false;
    int walk_regular_failure_k = 0;  // smallest k with non-constant diag(A^k); 0 if none
    bool regular = false;
    bool modular_fallback = false;   // diagonal comparison done mod two primes
    std::vector<long long> fallback_primes;
};

// Direct test: HighlySymmetric iff max |h(a,b) - h(b,a)| <= tol (1 + max h).
// Certified graphs additionally get the hitting = m*resistance identity
// (1e-7 relative) and R(i) constancy (1e-8 relative) asserted.
HSReport is_highly_symmetric(const Graph& g, double tolerance = 1e-7);

// diag(A^k) constant across vertices for k = 2..n, exact integers; switches
// to arithmetic mod two primes > 2^30 when int64 would overflow.
SymmetrySurvey is_walk_regular(const Graph& g);

// Vertices whose resistances to all their neighbors agree within 1e-9.
// Degree-1 vertices qualify vacuously.
std::vector<int> resistance_regular_vertices(const Graph& g, const ResistanceMatrix& r);

// Cheap necessary conditions, checked in order:
//   iv: two or more cut-edges;
//   iii: a cut-edge whose components have unequal edge counts;
//   ii: a resistance-regular cut-vertex.
// Pass means "not excluded", never a certificate.
HSReport screen_necessary_conditions(const Graph& g);

// Max over i of the relative deviation of 1 + mean_{j~i} h(j,i)
// from 2m/deg(i). Classical identity; expected <= 1e-8 everywhere.
double check_return_time_identity(const Graph& g);

}  // namespace walkres
