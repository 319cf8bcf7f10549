#include "torodec/embedding.hpp"

#include <algorithm>
#include <string>

namespace torodec {

std::vector<Vertex> Face::vertex_walk() const {
    std::vector<Vertex> out;
    out.reserve(boundary.size());
    for (const HalfEdge &h : boundary)
        out.push_back(h.from);
    return out;
}

std::set<Vertex> Face::vertex_set() const {
    std::set<Vertex> out;
    for (const HalfEdge &h : boundary)
        out.insert(h.from);
    return out;
}

std::set<Edge> Face::edge_set() const {
    std::set<Edge> out;
    for (const HalfEdge &h : boundary)
        out.insert(make_edge(h.from, h.to));
    return out;
}

bool Face::contains_vertex(Vertex v) const {
    for (const HalfEdge &h : boundary)
        if (h.from == v)
            return true;
    return false;
}

EmbeddedGraph::EmbeddedGraph(Graph graph,
                             std::unordered_map<Vertex, std::vector<Vertex>> rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
    for (Vertex v : graph_.vertices()) {
        auto it = rotation_.find(v);
        if (it == rotation_.end()) {
            if (graph_.degree(v) == 0) {
                rotation_[v] = {};
                continue;
            }
            throw DomainError("missing rotation for vertex " + std::to_string(v));
        }
        std::vector<Vertex> sorted = it->second;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != graph_.neighbors(v))
            throw DomainError("rotation of vertex " + std::to_string(v) +
                              " is not a permutation of its neighbors");
    }
    if (rotation_.size() != graph_.num_vertices())
        throw DomainError("rotation given for a vertex that is not in the graph");
}

const std::vector<Vertex> &EmbeddedGraph::rotation(Vertex v) const {
    auto it = rotation_.find(v);
    if (it == rotation_.end())
        throw DomainError("unknown vertex id " + std::to_string(v));
    return it->second;
}

Vertex EmbeddedGraph::rotation_successor(Vertex v, Vertex u) const {
    const auto &rot = rotation(v);
    for (std::size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == u)
            return rot[(i + 1) % rot.size()];
    throw DomainError("vertex " + std::to_string(u) + " not in rotation of " +
                      std::to_string(v));
}

EmbeddedGraph EmbeddedGraph::without_vertices(const std::vector<Vertex> &xs) const {
    Graph sub = graph_.without_vertices(xs);
    std::set<Vertex> drop(xs.begin(), xs.end());
    std::unordered_map<Vertex, std::vector<Vertex>> rot;
    for (Vertex v : sub.vertices()) {
        std::vector<Vertex> r;
        for (Vertex u : rotation(v))
            if (!drop.count(u))
                r.push_back(u); // cyclic order preserved
        rot[v] = std::move(r);
    }
    return EmbeddedGraph(std::move(sub), std::move(rot));
}

FaceSet::FaceSet(std::vector<Face> faces) : faces_(std::move(faces)) {
    for (int i = 0; i < static_cast<int>(faces_.size()); ++i)
        for (const HalfEdge &h : faces_[i].boundary)
            index_[h] = i;
}

int FaceSet::face_of(HalfEdge h) const {
    auto it = index_.find(h);
    if (it == index_.end())
        throw DomainError("half-edge " + std::to_string(h.from) + "->" +
                          std::to_string(h.to) + " not on any face");
    return it->second;
}

std::vector<int> FaceSet::corner_faces(const EmbeddedGraph &eg, Vertex v) const {
    std::vector<int> out;
    for (Vertex u : eg.rotation(v))
        out.push_back(face_of({v, u}));
    return out;
}

std::vector<int> FaceSet::degree_sequence(const Graph &g, int face_index) const {
    std::vector<int> out;
    for (const HalfEdge &h : face(face_index).boundary)
        out.push_back(g.degree(h.from));
    return out;
}

namespace {

void canonicalize(Face &f) {
    auto &b = f.boundary;
    auto min_it = std::min_element(b.begin(), b.end());
    std::rotate(b.begin(), min_it, b.end());
}

} // namespace

FaceSet face_trace(const EmbeddedGraph &eg) {
    const Graph &g = eg.graph();
    std::set<HalfEdge> pending;
    for (Vertex v : g.vertices())
        for (Vertex u : g.neighbors(v))
            pending.insert({v, u});

    std::vector<Face> faces;
    while (!pending.empty()) {
        HalfEdge start = *pending.begin();
        Face f;
        HalfEdge cur = start;
        do {
            pending.erase(cur);
            f.boundary.push_back(cur);
            // next half-edge: reverse, then step to the rotation successor
            cur = HalfEdge{cur.to, eg.rotation_successor(cur.to, cur.from)};
        } while (cur != start);
        canonicalize(f);
        faces.push_back(std::move(f));
    }
    std::sort(faces.begin(), faces.end(),
              [](const Face &a, const Face &b) { return a.boundary.front() < b.boundary.front(); });
    return FaceSet(std::move(faces));
}

int euler_characteristic(const EmbeddedGraph &eg) {
    if (!eg.graph().is_connected())
        throw DomainError("euler_characteristic requires a connected graph");
    FaceSet fs = face_trace(eg);
    return static_cast<int>(eg.graph().num_vertices()) -
           static_cast<int>(eg.graph().num_edges()) + fs.num_faces();
}

EmbeddedGraph delete_vertices(const EmbeddedGraph &eg, const std::vector<Vertex> &xs) {
    return eg.without_vertices(xs);
}

bool faces_normally_adjacent(const Face &f, const Face &g) {
    if (&f == &g || f.boundary == g.boundary)
        return false;
    std::set<Edge> ef = f.edge_set(), eg_ = g.edge_set();
    std::vector<Edge> shared_edges;
    std::set_intersection(ef.begin(), ef.end(), eg_.begin(), eg_.end(),
                          std::back_inserter(shared_edges));
    if (shared_edges.size() != 1)
        return false;
    std::set<Vertex> vf = f.vertex_set(), vg = g.vertex_set();
    std::vector<Vertex> shared_vertices;
    std::set_intersection(vf.begin(), vf.end(), vg.begin(), vg.end(),
                          std::back_inserter(shared_vertices));
    return shared_vertices.size() == 2;
}

bool cyclically_equivalent(const std::vector<int> &a, const std::vector<int> &b) {
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    std::vector<int> doubled(a);
    doubled.insert(doubled.end(), a.begin(), a.end());
    auto contains = [&](const std::vector<int> &needle) {
        return std::search(doubled.begin(), doubled.end(), needle.begin(), needle.end()) !=
               doubled.end();
    };
    if (contains(b))
        return true;
    std::vector<int> rev(b.rbegin(), b.rend());
    return contains(rev);
}

} // namespace torodec
