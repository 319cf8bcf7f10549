#include "torodec/degeneracy.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace torodec {

void Orientation::orient(Vertex tail, Vertex head) {
    if (tail == head)
        throw DomainError("cannot orient a loop");
    Edge e = make_edge(tail, head);
    if (arcs_.count(e))
        throw DomainError("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                          " oriented twice");
    arcs_[e] = {tail, head};
}

std::optional<Arc> Orientation::arc(Vertex u, Vertex v) const {
    auto it = arcs_.find(make_edge(u, v));
    if (it == arcs_.end())
        return std::nullopt;
    return it->second;
}

std::vector<Arc> Orientation::arcs() const {
    std::vector<Arc> out;
    out.reserve(arcs_.size());
    for (const auto &[e, a] : arcs_)
        out.push_back(a);
    return out;
}

std::map<Vertex, int> Orientation::out_degrees() const {
    std::map<Vertex, int> out;
    for (const auto &[e, a] : arcs_)
        ++out[a.first];
    return out;
}

int Orientation::out_degree(Vertex v) const {
    int d = 0;
    for (const auto &[e, a] : arcs_)
        if (a.first == v)
            ++d;
    return d;
}

int Orientation::max_out_degree() const {
    int best = 0;
    for (const auto &[v, d] : out_degrees())
        best = std::max(best, d);
    return best;
}

bool Orientation::is_acyclic() const {
    std::map<Vertex, int> outdeg;
    std::map<Vertex, std::vector<Vertex>> in_adj; // head -> tails
    for (const auto &[e, a] : arcs_) {
        ++outdeg[a.first];
        outdeg.emplace(a.second, 0);
        in_adj[a.second].push_back(a.first);
    }
    std::deque<Vertex> sinks;
    for (const auto &[v, d] : outdeg)
        if (d == 0)
            sinks.push_back(v);
    std::size_t removed = 0;
    while (!sinks.empty()) {
        Vertex v = sinks.front();
        sinks.pop_front();
        ++removed;
        auto it = in_adj.find(v);
        if (it == in_adj.end())
            continue;
        for (Vertex t : it->second)
            if (--outdeg[t] == 0)
                sinks.push_back(t);
    }
    return removed == outdeg.size();
}

std::pair<int, PeelingOrder> degeneracy(const Graph &g) {
    std::map<Vertex, int> deg;
    for (Vertex v : g.vertices())
        deg[v] = g.degree(v);
    std::set<std::pair<int, Vertex>> queue; // (degree, id): min-degree, then min-id
    for (const auto &[v, d] : deg)
        queue.insert({d, v});

    PeelingOrder order;
    std::set<Vertex> removed;
    int d_max = 0;
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        d_max = std::max(d_max, d);
        order.order.push_back(v);
        removed.insert(v);
        for (Vertex u : g.neighbors(v)) {
            if (removed.count(u))
                continue;
            queue.erase({deg[u], u});
            --deg[u];
            queue.insert({deg[u], u});
        }
    }
    return {d_max, order};
}

bool is_d_degenerate(const Graph &g, int d) {
    if (d < 0)
        throw DomainError("degeneracy bound must be nonnegative");
    return degeneracy(g).first <= d;
}

std::optional<Orientation> orient_bounded(const Graph &g, int d) {
    if (!is_d_degenerate(g, d))
        return std::nullopt;
    PeelingOrder order = degeneracy(g).second;
    std::map<Vertex, int> position;
    for (std::size_t i = 0; i < order.order.size(); ++i)
        position[order.order[i]] = static_cast<int>(i);
    // Each vertex has at most d neighbors later in the peeling order; point
    // at those.  All arcs go forward in the order, so the result is acyclic.
    Orientation o;
    for (auto [u, v] : g.edges()) {
        if (position[u] < position[v])
            o.orient(u, v);
        else
            o.orient(v, u);
    }
    return o;
}

bool verify_orientation(const Graph &g, const Orientation &o, int d) {
    std::vector<Edge> graph_edges = g.edges();
    if (o.size() != graph_edges.size())
        throw DomainError("orientation does not cover exactly the edge set");
    for (auto [u, v] : graph_edges)
        if (!o.covers(u, v))
            throw DomainError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " is not oriented");
    return o.is_acyclic() && o.max_out_degree() <= d;
}

} // namespace torodec
