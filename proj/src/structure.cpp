#include "walkres/structure.hpp"

#include <algorithm>

namespace walkres {

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

namespace {

struct Frame {
    int v, parent;
    std::size_t idx = 0;
    bool parent_skipped = false;  // simple graph: exactly one edge back to parent
    int children = 0;
};

// Component edge count on u's side once the bridge (u,v) is cut.
long component_edges(const Graph& g, int u, int v) {
    std::vector<char> seen(g.num_vertices(), 0);
    std::vector<int> queue{u};
    seen[u] = 1;
    long degsum = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int x = queue[head];
        degsum += g.degree(x);
        for (int w : g.neighbors(x)) {
            if (x == u && w == v) continue;  // the cut edge
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return (degsum - 1) / 2;  // u's endpoint of the bridge is the odd one out
}

}  // namespace

StructureReport structure(const Graph& g) {
    g.require_connected("structure");
    const int n = g.num_vertices();
    StructureReport rep;
    rep.is_regular = g.is_regular();
    rep.regular_degree = rep.is_regular ? g.degree(0) : -1;

    // Bridges + articulation points: iterative DFS low-link.
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_art(n, 0);
    int timer = 0;
    std::vector<Frame> stack;
    stack.push_back({0, -1});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (disc[f.v] < 0) disc[f.v] = low[f.v] = timer++;
        if (f.idx < g.neighbors(f.v).size()) {
            const int w = g.neighbors(f.v)[f.idx++];
            if (w == f.parent && !f.parent_skipped) {
                f.parent_skipped = true;
                continue;
            }
            if (disc[w] >= 0) {
                low[f.v] = std::min(low[f.v], disc[w]);
                continue;
            }
            stack.push_back({w, f.v});
        } else {
            const Frame done = f;
            stack.pop_back();
            if (done.parent < 0) {
                if (done.children >= 2) is_art[done.v] = 1;
                continue;
            }
            Frame& p = stack.back();
            ++p.children;
            low[p.v] = std::min(low[p.v], low[done.v]);
            if (low[done.v] > disc[p.v])
                rep.bridges.push_back({std::min(p.v, done.v), std::max(p.v, done.v), 0, 0});
            if (p.parent >= 0 && low[done.v] >= disc[p.v]) is_art[p.v] = 1;
        }
    }
    std::sort(rep.bridges.begin(), rep.bridges.end(),
              [](const Bridge& a, const Bridge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (Bridge& b : rep.bridges) {
        b.mu = component_edges(g, b.u, b.v);
        b.mv = g.num_edges() - 1 - b.mu;
    }
    for (int v = 0; v < n; ++v)
        if (is_art[v]) rep.articulation_points.push_back(v);

    // Diameter: all-pairs BFS. Bipartite: 2-coloring off the same sweep.
    int diameter = 0;
    for (int s = 0; s < n; ++s) {
        const auto dist = bfs_distances(g, s);
        diameter = std::max(diameter, *std::max_element(dist.begin(), dist.end()));
    }
    rep.diameter = diameter;

    const auto dist0 = bfs_distances(g, 0);
    bool bipartite = true;
    for (int u = 0; u < n && bipartite; ++u)
        for (int w : g.neighbors(u))
            if (((dist0[u] ^ dist0[w]) & 1) == 0) {
                bipartite = false;
                break;
            }
    rep.is_bipartite = bipartite;
    return rep;
}

}  // namespace walkres
