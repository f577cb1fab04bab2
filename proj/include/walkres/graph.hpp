#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "walkres/errors.hpp"

namespace walkres {

// Simple undirected graph, immutable after construction. Vertices are
// 0..n-1, adjacency lists kept sorted. Disconnected graphs are representable;
// analysis entry points call require_connected() themselves.
class Graph {
  public:
    Graph() : n_(0), m_(0) {}

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    long num_edges() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    // Distinct unordered pairs, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    int min_degree() const;
    int max_degree() const;
    bool is_regular() const { return n_ > 0 && min_degree() == max_degree(); }

    bool is_connected() const { return connected_; }
    void require_connected(const std::string& where) const {
        if (!connected_) throw precondition_error(where + ": graph is not connected");
    }

  private:
    int n_;
    long m_;
    std::vector<std::vector<int>> adj_;
    bool connected_ = false;
};

// Validates indices, rejects self-loops, dedups repeated pairs.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Edge-list text format: first non-comment line "n m", then m lines "u v".
// '#' starts a comment line. Strict: malformed or duplicate lines are
// parse_errors carrying the 1-based line number.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string format_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

// FNV-1a 64-bit over the canonical serialization; used in report fingerprints.
std::uint64_t edge_list_checksum(const Graph& g);

}  // namespace walkres
