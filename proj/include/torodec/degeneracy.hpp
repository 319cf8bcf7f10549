#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "torodec/graph.hpp"

namespace torodec {

using Arc = std::pair<Vertex, Vertex>; // (tail, head)

// Assignment of a direction to a set of edges.  Each underlying undirected
// edge is oriented at most once.
class Orientation {
public:
    Orientation() = default;

    void orient(Vertex tail, Vertex head); // throws if the edge is already oriented
    bool covers(Vertex u, Vertex v) const { return arcs_.count(make_edge(u, v)) > 0; }
    std::optional<Arc> arc(Vertex u, Vertex v) const;

    std::size_t size() const { return arcs_.size(); }
    std::vector<Arc> arcs() const; // sorted by normalized edge

    std::map<Vertex, int> out_degrees() const;
    int out_degree(Vertex v) const;
    int max_out_degree() const;

    // True iff the arc set has no directed cycle.  Checked by iterated
    // removal of out-degree-0 sinks, no recursion.
    bool is_acyclic() const;

private:
    std::map<Edge, Arc> arcs_;
};

struct PeelingOrder {
    std::vector<Vertex> order; // removal order of repeated minimum-degree peeling
};

// Minimum d such that repeated minimum-degree removal never removes a vertex
// of degree > d, plus the removal order.  Ties break on the smallest vertex
// id, so the order is reproducible.
std::pair<int, PeelingOrder> degeneracy(const Graph &g);

bool is_d_degenerate(const Graph &g, int d); // requires d >= 0

// If g is d-degenerate, an acyclic orientation with max out-degree <= d:
// each vertex points at its neighbors that are later in the peeling order.
std::optional<Orientation> orient_bounded(const Graph &g, int d);

// True iff o is acyclic with max out-degree <= d.  Throws DomainError when
// o does not cover exactly E(g).
bool verify_orientation(const Graph &g, const Orientation &o, int d);

} // namespace torodec
