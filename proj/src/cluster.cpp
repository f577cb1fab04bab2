#include "walkres/cluster.hpp"

namespace walkres {

ClusterResult cluster(const ClusterSpec& spec) {
    const Graph& g1 = spec.g1;
    const Graph& g2 = spec.g2;
    const int n1 = g1.num_vertices();
    const int n2 = g2.num_vertices();
    if (n2 < 2) throw invalid_input("cluster: g2 needs >= 2 vertices (gluing a point is a no-op)");
    if (spec.root < 0 || spec.root >= n2)
        throw invalid_input("cluster: root " + std::to_string(spec.root) + " not a vertex of g2");
    g1.require_connected("cluster(g1)");
    g2.require_connected("cluster(g2)");

    // Interior labels of copy c fill the block n1 + c(n2-1), in g2 order
    // with the root skipped.
    std::vector<int> interior_index(n2, -1);
    int next = 0;
    for (int v = 0; v < n2; ++v)
        if (v != spec.root) interior_index[v] = next++;

    auto map_vertex = [&](int copy, int v) {
        return v == spec.root ? copy : n1 + copy * (n2 - 1) + interior_index[v];
    };

    std::vector<std::pair<int, int>> edges = g1.edges();
    const auto g2_edges = g2.edges();
    for (int c = 0; c < n1; ++c)
        for (auto [u, v] : g2_edges)
            edges.emplace_back(map_vertex(c, u), map_vertex(c, v));

    ClusterResult out;
    out.graph = make_graph(n1 * n2, edges);
    if (out.graph.num_edges() != g1.num_edges() + static_cast<long>(n1) * g2.num_edges())
        throw invariant_violation("cluster: edge count mismatch");

    out.roles.resize(static_cast<std::size_t>(n1) * n2);
    for (int b = 0; b < n1; ++b) out.roles[b] = VertexRole{true, -1, b, spec.root};
    for (int c = 0; c < n1; ++c)
        for (int v = 0; v < n2; ++v)
            if (v != spec.root) out.roles[map_vertex(c, v)] = VertexRole{false, c, c, v};
    return out;
}

}  // namespace walkres
