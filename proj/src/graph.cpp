#include "walkres/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace walkres {

namespace {

bool connected_by_bfs(int n, const std::vector<std::vector<int>>& adj) {
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int w : adj[queue[head]]) {
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
        }
    }
    return static_cast<int>(queue.size()) == n;
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 0) throw invalid_input("graph needs at least one vertex");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw invalid_input("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for n=" + std::to_string(n));
        if (u == v) throw invalid_input("self-loop at vertex " + std::to_string(u));
        const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second) continue;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.m_ = static_cast<long>(seen.size());
    g.connected_ = connected_by_bfs(n, g.adj_);
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::min_degree() const {
    int d = n_ > 0 ? degree(0) : 0;
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = n_ > 0 ? degree(0) : 0;
    for (int v = 1; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edges(n, edges);
}

namespace {

bool comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;  // blank
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    long lineno = 0;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        if (comment_or_blank(line)) continue;
        std::istringstream ls(line);
        if (n < 0) {
            long a, b;
            if (!(ls >> a >> b)) throw parse_error("expected header \"n m\"", lineno);
            std::string extra;
            if (ls >> extra) throw parse_error("trailing content after header", lineno);
            if (a < 1) throw parse_error("vertex count must be positive", lineno);
            if (b < 0) throw parse_error("edge count must be nonnegative", lineno);
            n = a;
            m = b;
            continue;
        }
        long u, v;
        if (!(ls >> u >> v)) throw parse_error("expected edge \"u v\"", lineno);
        std::string extra;
        if (ls >> extra) throw parse_error("trailing content after edge", lineno);
        if (static_cast<long>(edges.size()) == m)
            throw parse_error("more than the declared " + std::to_string(m) + " edges", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("vertex id out of range [0, " + std::to_string(n - 1) + "]", lineno);
        if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u), lineno);
        const std::pair<int, int> key{static_cast<int>(std::min(u, v)),
                                      static_cast<int>(std::max(u, v))};
        if (!seen.insert(key).second)
            throw parse_error("duplicate edge (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ")", lineno);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw parse_error("empty input: no \"n m\" header found");
    if (static_cast<long>(edges.size()) != m)
        throw parse_error("declared " + std::to_string(m) + " edges but found " +
                          std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open " + path);
    try {
        return parse_edge_list(in);
    } catch (parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw invalid_input("cannot write " + path);
    out << format_edge_list(g);
    if (!out) throw invalid_input("write failed for " + path);
}

std::uint64_t edge_list_checksum(const Graph& g) {
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a offset basis
    for (unsigned char c : format_edge_list(g)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace walkres
