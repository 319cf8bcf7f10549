#include "torodec/pattern.hpp"

#include <algorithm>
#include <set>

namespace torodec {

Vertex MatchWitness::image(Vertex pattern_vertex) const {
    for (auto [p, h] : mapping)
        if (p == pattern_vertex)
            return h;
    throw DomainError("pattern vertex " + std::to_string(pattern_vertex) + " not in witness");
}

std::vector<Vertex> MatchWitness::image_set() const {
    std::vector<Vertex> out;
    out.reserve(mapping.size());
    for (auto [p, h] : mapping)
        out.push_back(h);
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Pattern> &forbidden_catalog() {
    static const std::vector<Pattern> catalog = [] {
        std::vector<Pattern> out;
        auto plain = [&](std::string name, int n, std::vector<Edge> edges) {
            out.push_back({std::move(name), Graph::from_edges(n, edges), {}});
        };
        // (a) 4-cycle plus a chord
        plain("chorded-4-cycle", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
        // (b) 5-cycle with a chord cutting off a triangle
        plain("chorded-5-cycle", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
        // (c) 6-cycle with a long chord: two quadrilaterals sharing one edge
        plain("double-quad", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
        // (d) hexagon and triangle sharing one edge
        plain("hexagon-triangle", 7,
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {6, 0}, {6, 1}});
        // (e) pentagon, triangle on edge 1-2, quadrilateral on the adjacent
        // edge 0-1 (outside path 0-6-7-1)
        plain("pentagon-tri-quad-adjacent", 8,
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 2}, {0, 6}, {6, 7}, {7, 1}});
        // (f) pentagon, quadrilateral on edge 0-1, triangle on the
        // non-adjacent edge 2-3
        plain("pentagon-quad-tri-apart", 8,
              {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 2}, {5, 3}, {0, 6}, {6, 7}, {7, 1}});
        return out;
    }();
    return catalog;
}

const std::vector<Pattern> &reducible_catalog() {
    static const std::vector<Pattern> catalog = [] {
        std::vector<Pattern> out;
        auto marked = [&](std::string name, int n, std::vector<Edge> edges,
                          std::vector<int> degrees) {
            Pattern p{std::move(name), Graph::from_edges(n, edges), {}};
            for (Vertex v = 0; v < n; ++v)
                p.constraints[v] = DegreeConstraint::exact(degrees[v]);
            out.push_back(std::move(p));
        };
        marked("triangle-pendant", 4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}, {4, 4, 3, 3});
        marked("pentagon-apex-33", 6,
               {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 5}}, {4, 4, 3, 4, 3, 4});
        marked("pentagon-apex-43", 6,
               {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 5}}, {4, 3, 4, 3, 4, 4});
        return out;
    }();
    return catalog;
}

namespace {

struct MatchState {
    const Graph &host;
    const Pattern &pattern;
    const std::function<bool(const MatchWitness &)> &callback;
    std::vector<Vertex> image;     // pattern vertex -> host vertex
    std::set<Vertex> used;

    bool feasible(Vertex pv, Vertex hv) const {
        if (used.count(hv))
            return false;
        if (!pattern.constraint(pv).admits(host.degree(hv)))
            return false;
        for (Vertex pu : pattern.skeleton.neighbors(pv)) {
            if (pu < pv && !host.has_edge(image[pu], hv))
                return false;
        }
        return true;
    }

    // Returns true when the callback asked to stop.
    bool search(Vertex pv) {
        int n = static_cast<int>(pattern.skeleton.num_vertices());
        if (pv == n) {
            MatchWitness w;
            w.pattern = pattern.name;
            for (Vertex p = 0; p < n; ++p)
                w.mapping.emplace_back(p, image[p]);
            return !callback(w);
        }
        // When a skeleton neighbor is already placed, only host neighbors of
        // its image are candidates; that keeps the order lexicographic and
        // the search local.
        Vertex anchor = -1;
        for (Vertex pu : pattern.skeleton.neighbors(pv))
            if (pu < pv) {
                anchor = pu;
                break;
            }
        const std::vector<Vertex> &candidates =
            anchor >= 0 ? host.neighbors(image[anchor]) : host.vertices();
        for (Vertex hv : candidates) {
            if (!feasible(pv, hv))
                continue;
            image[pv] = hv;
            used.insert(hv);
            if (search(pv + 1))
                return true;
            used.erase(hv);
        }
        return false;
    }
};

} // namespace

bool for_each_match(const Graph &host, const Pattern &p,
                    const std::function<bool(const MatchWitness &)> &callback) {
    if (p.skeleton.num_vertices() > host.num_vertices())
        return false;
    MatchState state{host, p, callback, std::vector<Vertex>(p.skeleton.num_vertices(), -1), {}};
    return state.search(0);
}

std::optional<MatchWitness> match_pattern(const Graph &host, const Pattern &p) {
    std::optional<MatchWitness> found;
    for_each_match(host, p, [&](const MatchWitness &w) {
        found = w;
        return false;
    });
    return found;
}

bool witness_valid(const Graph &host, const Pattern &p, const MatchWitness &w) {
    if (w.mapping.size() != p.skeleton.num_vertices())
        return false;
    std::vector<Vertex> image(p.skeleton.num_vertices(), -1);
    std::set<Vertex> used;
    for (auto [pv, hv] : w.mapping) {
        if (pv < 0 || pv >= static_cast<Vertex>(image.size()) || image[pv] != -1)
            return false;
        if (!host.has_vertex(hv) || !used.insert(hv).second)
            return false;
        image[pv] = hv;
    }
    for (auto [pu, pv] : p.skeleton.edges())
        if (!host.has_edge(image[pu], image[pv]))
            return false;
    for (Vertex pv = 0; pv < static_cast<Vertex>(image.size()); ++pv)
        if (!p.constraint(pv).admits(host.degree(image[pv])))
            return false;
    return true;
}

namespace {

// Depth-first search for a cycle of exactly length k through `start`, where
// `start` is the smallest vertex on the cycle.  Candidates ascend, so the
// first cycle found is lexicographically first.
bool cycle_search(const Graph &g, Vertex start, std::vector<Vertex> &path,
                  std::set<Vertex> &used, int k) {
    Vertex last = path.back();
    if (static_cast<int>(path.size()) == k)
        return g.has_edge(last, start);
    for (Vertex next : g.neighbors(last)) {
        if (next <= start || used.count(next))
            continue;
        path.push_back(next);
        used.insert(next);
        if (cycle_search(g, start, path, used, k))
            return true;
        used.erase(next);
        path.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<Vertex>> find_cycle_of_length(const Graph &host, int k) {
    if (k < 3)
        throw DomainError("cycle length must be at least 3");
    for (Vertex start : host.vertices()) {
        std::vector<Vertex> path{start};
        std::set<Vertex> used{start};
        if (cycle_search(host, start, path, used, k))
            return path;
    }
    return std::nullopt;
}

bool in_class_tij(const Graph &host, int i, int j) {
    if (i < 3 || j < 3)
        throw DomainError("cycle lengths must be at least 3");
    return !find_cycle_of_length(host, i).has_value() &&
           !find_cycle_of_length(host, j).has_value();
}

ForbiddenCheck is_forbidden_free(const Graph &host) {
    const auto &catalog = forbidden_catalog();
    for (int i = 0; i < static_cast<int>(catalog.size()); ++i) {
        if (auto w = match_pattern(host, catalog[i]))
            return {false, i, std::move(w)};
    }
    return {};
}

namespace {

const std::vector<int> kLightQuadSeq{3, 4, 4, 4};
const std::vector<int> kLightPentSeq{3, 4, 3, 4, 4};

} // namespace

std::vector<Vertex> find_light_3vertices(const EmbeddedGraph &eg, const FaceSet &fs) {
    std::vector<Vertex> out;
    const Graph &g = eg.graph();
    for (Vertex v : g.vertices()) {
        if (g.degree(v) != 3)
            continue;
        std::vector<int> corners = fs.corner_faces(eg, v);
        std::set<int> distinct(corners.begin(), corners.end());
        if (distinct.size() != 3)
            continue;
        int quads = 0, pents = 0;
        for (int f : distinct) {
            std::vector<int> seq = fs.degree_sequence(g, f);
            if (cyclically_equivalent(seq, kLightQuadSeq))
                ++quads;
            else if (cyclically_equivalent(seq, kLightPentSeq))
                ++pents;
        }
        if (quads == 1 && pents == 2)
            out.push_back(v);
    }
    return out;
}

std::vector<Vertex> find_light_3vertices(const EmbeddedGraph &eg) {
    FaceSet fs = face_trace(eg);
    return find_light_3vertices(eg, fs);
}

std::vector<Vertex> find_minor_3vertices(const EmbeddedGraph &eg, const FaceSet &fs) {
    std::vector<Vertex> out;
    const Graph &g = eg.graph();
    for (Vertex v : g.vertices()) {
        if (g.degree(v) != 3)
            continue;
        for (int f : fs.corner_faces(eg, v)) {
            if (fs.face(f).size() == 4) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

std::vector<Vertex> find_minor_3vertices(const EmbeddedGraph &eg) {
    FaceSet fs = face_trace(eg);
    return find_minor_3vertices(eg, fs);
}

} // namespace torodec
