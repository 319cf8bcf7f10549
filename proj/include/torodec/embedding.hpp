#pragma once

#include <compare>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "torodec/graph.hpp"

namespace torodec {

struct HalfEdge {
    Vertex from = -1;
    Vertex to = -1;
    auto operator<=>(const HalfEdge &) const = default;
    HalfEdge reversed() const { return {to, from}; }
};

// Closed boundary walk of one face.  The walk is stored in canonical
// rotation: it starts at its smallest directed half-edge, which makes face
// ids stable across runs.
struct Face {
    std::vector<HalfEdge> boundary;

    int size() const { return static_cast<int>(boundary.size()); }
    std::vector<Vertex> vertex_walk() const; // origins of the half-edges, in order
    std::set<Vertex> vertex_set() const;
    std::set<Edge> edge_set() const;
    bool contains_vertex(Vertex v) const;
};

// A graph together with a rotation system: for every vertex, a cyclic order
// of its neighbors.  Any rotation system describes a 2-cell embedding on
// some orientable surface; non-orientable surfaces are not representable.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;
    EmbeddedGraph(Graph graph, std::unordered_map<Vertex, std::vector<Vertex>> rotation);

    const Graph &graph() const { return graph_; }
    const std::vector<Vertex> &rotation(Vertex v) const;

    // Neighbor that follows u in the cyclic order around v.
    Vertex rotation_successor(Vertex v, Vertex u) const;

    EmbeddedGraph without_vertices(const std::vector<Vertex> &xs) const;

private:
    Graph graph_;
    std::unordered_map<Vertex, std::vector<Vertex>> rotation_;
};

// Result of tracing the faces of an embedding.  Faces are listed in
// canonical order (sorted by their smallest half-edge); every directed
// half-edge belongs to exactly one face.
class FaceSet {
public:
    explicit FaceSet(std::vector<Face> faces);

    const std::vector<Face> &faces() const { return faces_; }
    int num_faces() const { return static_cast<int>(faces_.size()); }
    const Face &face(int index) const { return faces_.at(index); }

    int face_of(HalfEdge h) const; // throws DomainError on unknown half-edge

    // Face at each corner of v, one entry per outgoing half-edge, in
    // rotation order.  Faces can repeat for non-simple boundaries.
    std::vector<int> corner_faces(const EmbeddedGraph &eg, Vertex v) const;

    // deg(v) along the boundary walk of a face.
    std::vector<int> degree_sequence(const Graph &g, int face_index) const;

private:
    std::vector<Face> faces_;
    std::map<HalfEdge, int> index_;
};

FaceSet face_trace(const EmbeddedGraph &eg);

// |V| - |E| + |F|.  Requires a connected graph; 2 on the sphere, 0 on the
// torus.
int euler_characteristic(const EmbeddedGraph &eg);

EmbeddedGraph delete_vertices(const EmbeddedGraph &eg, const std::vector<Vertex> &xs);

// True iff the two faces share exactly one edge and exactly two vertices.
// A face is never normally adjacent to itself.
bool faces_normally_adjacent(const Face &f, const Face &g);

// Equality of integer sequences as cyclic words, up to rotation and
// reflection.  Used to compare face degree sequences against patterns like
// (3,4,3,4,4).
bool cyclically_equivalent(const std::vector<int> &a, const std::vector<int> &b);

} // namespace torodec
