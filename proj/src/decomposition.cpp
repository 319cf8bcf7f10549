#include "torodec/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace torodec {

namespace {

std::string edge_str(Edge e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

} // namespace

VerifyResult verify_decomposition(const Graph &g, const Decomposition &dec) {
    std::set<Edge> graph_edges;
    for (auto e : g.edges())
        graph_edges.insert(e);

    std::set<Edge> h_set;
    for (auto [u, v] : dec.h_edges) {
        Edge e = make_edge(u, v);
        if (!graph_edges.count(e))
            throw DomainError("H-edge " + edge_str(e) + " is not an edge of the graph");
        h_set.insert(e);
    }
    std::set<Edge> arc_set;
    for (auto [t, h] : dec.orientation.arcs()) {
        Edge e = make_edge(t, h);
        if (!graph_edges.count(e))
            throw DomainError("oriented edge " + edge_str(e) + " is not an edge of the graph");
        arc_set.insert(e);
    }

    VerifyResult result;
    auto fail = [&](std::string clause, std::string detail) {
        result.ok = false;
        result.violations.push_back({std::move(clause), std::move(detail)});
    };

    std::map<Vertex, int> h_degree;
    for (auto [u, v] : h_set) {
        ++h_degree[u];
        ++h_degree[v];
    }
    for (const auto &[v, d] : h_degree) {
        if (d > dec.h) {
            fail("H-degree", "vertex " + std::to_string(v) + " has H-degree " +
                                 std::to_string(d) + " > " + std::to_string(dec.h));
            break;
        }
    }

    bool covered = true;
    for (auto e : h_set)
        if (arc_set.count(e)) {
            fail("coverage", "edge " + edge_str(e) + " is both in H and oriented");
            covered = false;
            break;
        }
    if (covered) {
        for (auto e : graph_edges) {
            if (!h_set.count(e) && !arc_set.count(e)) {
                fail("coverage", "edge " + edge_str(e) + " is neither in H nor oriented");
                covered = false;
                break;
            }
        }
    }
    if (covered && h_set.size() + arc_set.size() != graph_edges.size())
        fail("coverage", "H and orientation overlap or exceed the edge set");

    if (!dec.orientation.is_acyclic())
        fail("acyclicity", "orientation contains a directed cycle");

    int max_out = dec.orientation.max_out_degree();
    if (max_out > dec.d)
        fail("out-degree", "max out-degree " + std::to_string(max_out) + " > " +
                               std::to_string(dec.d));
    return result;
}

namespace {

struct ExactSearch {
    const Graph &g;
    int d;
    int h;
    std::vector<Edge> all_edges;
    std::vector<Edge> chosen;
    std::map<Vertex, int> h_degree;
    std::optional<Decomposition> found;

    bool try_current() {
        Graph rest;
        for (Vertex v : g.vertices())
            rest.add_vertex(v);
        std::set<Edge> removed(chosen.begin(), chosen.end());
        for (auto e : all_edges)
            if (!removed.count(e))
                rest.add_edge(e.first, e.second);
        auto orientation = orient_bounded(rest, d);
        if (!orientation)
            return false;
        Decomposition dec{chosen, std::move(*orientation), d, h};
        if (!verify_decomposition(g, dec).ok)
            throw InternalError("solve_exact produced an invalid decomposition");
        found = std::move(dec);
        return true;
    }

    // Enumerates all H with exactly `remaining` more edges, next candidate
    // at index `start`, respecting the degree cap.  Lexicographic order.
    bool search(std::size_t start, int remaining) {
        if (remaining == 0)
            return try_current();
        for (std::size_t i = start; i + remaining <= all_edges.size() + 0u; ++i) {
            auto [u, v] = all_edges[i];
            if (h_degree[u] + 1 > h || h_degree[v] + 1 > h)
                continue;
            chosen.push_back(all_edges[i]);
            ++h_degree[u];
            ++h_degree[v];
            bool done = search(i + 1, remaining - 1);
            --h_degree[u];
            --h_degree[v];
            chosen.pop_back();
            if (done)
                return true;
        }
        return false;
    }
};

} // namespace

std::optional<Decomposition> solve_exact(const Graph &g, int d, int h) {
    if (d < 0 || h < 0)
        throw DomainError("decomposition parameters must be nonnegative");
    ExactSearch search{g, d, h, g.edges(), {}, {}, std::nullopt};
    int max_size = h == 0 ? 0 : static_cast<int>(search.all_edges.size());
    for (int k = 0; k <= max_size; ++k)
        if (search.search(0, k))
            return search.found;
    return std::nullopt;
}

bool decomposable_21(const Graph &g) {
    return solve_exact(g, 2, 1).has_value();
}

} // namespace torodec
