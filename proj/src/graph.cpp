#include "torodec/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace torodec {

void Graph::add_vertex(Vertex v) {
    if (has_vertex(v))
        throw DomainError("duplicate vertex id " + std::to_string(v));
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    vertices_.insert(it, v);
    adj_[v] = {};
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u == v)
        throw DomainError("loop at vertex " + std::to_string(u));
    if (!has_vertex(u) || !has_vertex(v))
        throw DomainError("edge endpoint not a vertex: " + std::to_string(u) + "-" +
                          std::to_string(v));
    if (has_edge(u, v))
        throw DomainError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    auto &nu = adj_[u];
    nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
    auto &nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++num_edges_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    auto it = adj_.find(u);
    if (it == adj_.end())
        return false;
    return std::binary_search(it->second.begin(), it->second.end(), v);
}

const std::vector<Vertex> &Graph::neighbors(Vertex v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw DomainError("unknown vertex id " + std::to_string(v));
    return it->second;
}

int Graph::min_degree() const {
    int d = -1;
    for (Vertex v : vertices_)
        if (d < 0 || degree(v) < d)
            d = degree(v);
    return d < 0 ? 0 : d;
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v : vertices_)
        d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex v : vertices_)
        for (Vertex u : neighbors(v))
            if (v < u)
                out.emplace_back(v, u);
    return out;
}

bool Graph::is_connected() const {
    if (vertices_.empty())
        return true;
    std::set<Vertex> seen;
    std::deque<Vertex> queue{vertices_.front()};
    seen.insert(vertices_.front());
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : neighbors(v))
            if (seen.insert(u).second)
                queue.push_back(u);
    }
    return seen.size() == vertices_.size();
}

Graph Graph::without_vertices(const std::vector<Vertex> &xs) const {
    std::set<Vertex> drop;
    for (Vertex x : xs) {
        if (!has_vertex(x))
            throw DomainError("cannot delete unknown vertex " + std::to_string(x));
        drop.insert(x);
    }
    Graph out;
    for (Vertex v : vertices_)
        if (!drop.count(v))
            out.add_vertex(v);
    for (Vertex v : out.vertices())
        for (Vertex u : neighbors(v))
            if (v < u && !drop.count(u))
                out.add_edge(v, u);
    return out;
}

Graph Graph::from_edges(int n, const std::vector<Edge> &edge_list) {
    Graph g;
    for (Vertex v = 0; v < n; ++v)
        g.add_vertex(v);
    for (auto [u, v] : edge_list)
        g.add_edge(u, v);
    return g;
}

bool Graph::operator==(const Graph &other) const {
    if (vertices_ != other.vertices_ || num_edges_ != other.num_edges_)
        return false;
    for (Vertex v : vertices_)
        if (neighbors(v) != other.neighbors(v))
            return false;
    return true;
}

} // namespace torodec
