#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "torodec/errors.hpp"

namespace torodec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>; // normalized: first < second

inline Edge make_edge(Vertex u, Vertex v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph over an explicit set of integer vertex ids.
// Ids are dense at load time but stay stable under deletion, so subgraphs
// share ids with the graph they came from.
class Graph {
public:
    Graph() = default;

    void add_vertex(Vertex v);
    void add_edge(Vertex u, Vertex v);

    bool has_vertex(Vertex v) const { return adj_.count(v) > 0; }
    bool has_edge(Vertex u, Vertex v) const;

    const std::vector<Vertex> &vertices() const { return vertices_; }
    const std::vector<Vertex> &neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    int min_degree() const;
    int max_degree() const;

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    std::vector<Edge> edges() const; // sorted

    bool empty() const { return vertices_.empty(); }
    bool is_connected() const;

    // Induced subgraph on V minus xs.  Throws DomainError on unknown ids.
    Graph without_vertices(const std::vector<Vertex> &xs) const;

    // Vertices 0..n-1 plus the given edge list.
    static Graph from_edges(int n, const std::vector<Edge> &edge_list);

    bool operator==(const Graph &other) const;

private:
    std::vector<Vertex> vertices_;                        // sorted
    std::unordered_map<Vertex, std::vector<Vertex>> adj_; // sorted lists
    std::size_t num_edges_ = 0;
};

} // namespace torodec
