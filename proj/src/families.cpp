#include "walkres/families.hpp"

#include <utility>

namespace walkres {

namespace {
using EdgeList = std::vector<std::pair<int, int>>;

void need(bool ok, const std::string& msg) {
    if (!ok) throw invalid_input(msg);
}
}  // namespace

Graph complete(int n) {
    need(n >= 2, "complete: n >= 2 required");
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return make_graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    need(a >= 1 && b >= 1, "complete_bipartite: both parts need >= 1 vertex");
    EdgeList e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return make_graph(a + b, e);
}

Graph path(int n) {
    need(n >= 2, "path: n >= 2 required");
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make_graph(n, e);
}

Graph cycle(int n) {
    need(n >= 3, "cycle: n >= 3 required");
    EdgeList e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make_graph(n, e);
}

Graph star(int leaves) {
    need(leaves >= 1, "star: at least one leaf");
    EdgeList e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return make_graph(leaves + 1, e);
}

Graph barbell(int a, int b, int c) {
    need(a >= 2 && c >= 2, "barbell: both cliques need >= 2 vertices");
    need(b >= 1, "barbell: connecting path needs >= 1 edge");
    // Vertices: clique A = 0..a-1, path interior = a..a+b-2, clique C after.
    const int n = a + (b - 1) + c;
    EdgeList e;
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) e.emplace_back(i, j);
    int prev = a - 1;  // path leaves the last vertex of A
    for (int s = 0; s < b - 1; ++s) {
        e.emplace_back(prev, a + s);
        prev = a + s;
    }
    const int cbase = a + b - 1;
    e.emplace_back(prev, cbase);  // path enters the first vertex of C
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) e.emplace_back(cbase + i, cbase + j);
    return make_graph(n, e);
}

Graph conjoined_polygons(int k, int n) {
    need(k >= 1, "conjoined_polygons: at least one polygon");
    need(n >= 3, "conjoined_polygons: polygons need >= 3 sides");
    // Shared vertex is 0; polygon p uses vertices 1 + p(n-1) .. (p+1)(n-1).
    EdgeList e;
    for (int p = 0; p < k; ++p) {
        const int base = 1 + p * (n - 1);
        e.emplace_back(0, base);
        for (int s = 0; s + 1 < n - 1; ++s) e.emplace_back(base + s, base + s + 1);
        e.emplace_back(base + n - 2, 0);
    }
    return make_graph(1 + k * (n - 1), e);
}

Graph friendship(int k) {
    need(k >= 1, "friendship: at least one triangle");
    EdgeList e;
    for (int t = 0; t < k; ++t) {
        const int a = 1 + 2 * t, b = 2 + 2 * t;
        e.emplace_back(0, a);
        e.emplace_back(0, b);
        e.emplace_back(a, b);
    }
    return make_graph(1 + 2 * k, e);
}

Graph hypercube(int d) {
    need(d >= 1 && d <= 20, "hypercube: dimension in [1, 20]");
    const int n = 1 << d;
    EdgeList e;
    for (int v = 0; v < n; ++v)
        for (int bit = 0; bit < d; ++bit) {
            const int w = v ^ (1 << bit);
            if (v < w) e.emplace_back(v, w);
        }
    return make_graph(n, e);
}

Graph petersen() {
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);      // outer pentagon
        e.emplace_back(i, 5 + i);            // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return make_graph(10, e);
}

Graph generate(const std::string& family, const std::vector<int>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw invalid_input(family + ": expected " + std::to_string(k) +
                                " parameter(s), got " + std::to_string(params.size()));
    };
    if (family == "complete") { want(1); return complete(params[0]); }
    if (family == "complete_bipartite") { want(2); return complete_bipartite(params[0], params[1]); }
    if (family == "path") { want(1); return path(params[0]); }
    if (family == "cycle") { want(1); return cycle(params[0]); }
    if (family == "star") { want(1); return star(params[0]); }
    if (family == "barbell") { want(3); return barbell(params[0], params[1], params[2]); }
    if (family == "conjoined_polygons") { want(2); return conjoined_polygons(params[0], params[1]); }
    if (family == "friendship") { want(1); return friendship(params[0]); }
    if (family == "hypercube") { want(1); return hypercube(params[0]); }
    if (family == "petersen") { want(0); return petersen(); }
    throw invalid_input("unknown family \"" + family + "\"");
}

std::vector<std::string> family_names() {
    return {"complete", "complete_bipartite", "path", "cycle", "star",
            "barbell", "conjoined_polygons", "friendship", "hypercube", "petersen"};
}

}  // namespace walkres
