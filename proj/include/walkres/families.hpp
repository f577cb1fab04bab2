#pragma once

#include <string>
#include <vector>

#include "walkres/graph.hpp"

namespace walkres {

Graph complete(int n);                       // K_n, n >= 2
Graph complete_bipartite(int a, int b);      // K_{a,b}; parts {0..a-1}, {a..a+b-1}
Graph path(int n);                           // P_n, n >= 2 vertices
Graph cycle(int n);                          // C_n, n >= 3
Graph star(int leaves);                      // K_{1,leaves}, center 0
Graph barbell(int a, int b, int c);          // K_a -- path of b edges -- K_c
Graph conjoined_polygons(int k, int n);      // k n-gons sharing vertex 0
Graph friendship(int k);                     // k triangles sharing vertex 0
Graph hypercube(int d);                      // Q_d, 2^d vertices
Graph petersen();

// Dispatch by family name; params as the generators above expect
// ("petersen" takes none). Unknown family or bad params -> invalid_input.
Graph generate(const std::string& family, const std::vector<int>& params);

// Families accepted by generate(), for usage messages.
std::vector<std::string> family_names();

}  // namespace walkres
