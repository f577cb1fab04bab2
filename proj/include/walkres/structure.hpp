#pragma once

#include <vector>

#include "walkres/graph.hpp"

namespace walkres {

struct Bridge {
    int u, v;
    // Edge counts of the two components left after removing the bridge;
    // mu is the side containing u. mu + mv + 1 == m always.
    long mu, mv;
};

struct StructureReport {
    std::vector<Bridge> bridges;
    std::vector<int> articulation_points;
    int diameter = 0;  // max shortest-path distance
    bool is_bipartite = false;
    bool is_regular = false;
    int regular_degree = -1;  // common degree when regular
};

// Bridges + articulation points by iterative DFS low-link, diameter by
// all-pairs BFS, bipartiteness by 2-coloring. Requires a connected graph.
StructureReport structure(const Graph& g);

// BFS distances from src (hops). -1 never appears for connected graphs.
std::vector<int> bfs_distances(const Graph& g, int src);

}  // namespace walkres
