#pragma once

#include <vector>

#include "walkres/graph.hpp"

namespace walkres {

struct ClusterSpec {
    Graph g1;
    Graph g2;
    int root = 0;  // vertex of g2 identified with each vertex of g1
};

// Role of a vertex in the assembled cluster. Backbone vertices keep g1's
// labels 0..n1-1; copy c's interior vertices occupy the contiguous block
// n1 + c*(n2-1) .. n1 + (c+1)*(n2-1) - 1, in g2 label order (root skipped).
struct VertexRole {
    bool backbone = false;
    int copy = -1;     // which copy (= backbone label of its contact) for interior vertices
    int contact = -1;  // backbone vertex the walk must pass through; self for backbone
    int g2_label = -1; // original g2 label for interior vertices
};

struct ClusterResult {
    Graph graph;
    std::vector<VertexRole> roles;  // size n1*n2
};

// Glue one copy of g2, at `root`, onto every vertex of g1.
// Result has n1*n2 vertices and m1 + n1*m2 edges.
ClusterResult cluster(const ClusterSpec& spec);

}  // namespace walkres
