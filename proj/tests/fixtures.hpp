#pragma once

// Embedded hosts used across the test suites.

#include <unordered_map>
#include <vector>

#include "torodec/embedding.hpp"
#include "torodec/graph.hpp"

namespace fixtures {

using torodec::EmbeddedGraph;
using torodec::Graph;
using torodec::Vertex;

// K4 on the sphere: rotations of the plane drawing with vertex 0 in the
// middle of triangle 1,2,3.  Four triangular faces.
inline EmbeddedGraph planar_k4() {
    Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    std::unordered_map<Vertex, std::vector<Vertex>> rot{
        {0, {1, 2, 3}}, {1, {2, 0, 3}}, {2, {3, 0, 1}}, {3, {1, 0, 2}}};
    return EmbeddedGraph(std::move(g), std::move(rot));
}

// Wheel on five rim vertices, drawn in the plane: hub 0, rim 1..5.
// Faces: five triangles [0,i,i+1] and the outer 5-face.
inline EmbeddedGraph planar_wheel5() {
    std::vector<torodec::Edge> edges;
    for (Vertex i = 1; i <= 5; ++i) {
        edges.push_back({0, i});
        edges.push_back(torodec::make_edge(i, i % 5 + 1));
    }
    Graph g = Graph::from_edges(6, edges);
    std::unordered_map<Vertex, std::vector<Vertex>> rot;
    rot[0] = {5, 4, 3, 2, 1};
    for (Vertex i = 1; i <= 5; ++i)
        rot[i] = {0, i % 5 + 1, (i + 3) % 5 + 1};
    return EmbeddedGraph(std::move(g), std::move(rot));
}

// The Petersen graph (abstract): outer 5-cycle 0..4, inner pentagram 5..9,
// spokes i -- i+5.  Girth 5.
inline Graph petersen() {
    std::vector<torodec::Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.push_back(torodec::make_edge(i, (i + 1) % 5));
        edges.push_back({i, i + 5});
        edges.push_back(torodec::make_edge(i + 5, (i + 2) % 5 + 5));
    }
    return Graph::from_edges(10, edges);
}

inline Graph path(int n) {
    std::vector<torodec::Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1});
    return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
    std::vector<torodec::Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.push_back(torodec::make_edge(i, (i + 1) % n));
    return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
    std::vector<torodec::Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.push_back({u, v});
    return Graph::from_edges(n, edges);
}

// A 4-regular graph of girth 5 on 19 vertices.  Girth 5 rules out every
// forbidden configuration, and with no 3--vertices at all no reduction
// rule can touch it: the constructive solver must report it as stuck.
inline Graph quartic_girth5() {
    return Graph::from_edges(
        19, {{0, 2},   {0, 8},   {0, 9},   {0, 13},  {1, 5},   {1, 9},   {1, 15},
             {1, 16},  {2, 3},   {2, 7},   {2, 16},  {3, 5},   {3, 11},  {3, 17},
             {4, 9},   {4, 10},  {4, 14},  {4, 17},  {5, 10},  {5, 18},  {6, 7},
             {6, 9},   {6, 11},  {6, 12},  {7, 15},  {7, 18},  {8, 12},  {8, 17},
             {8, 18},  {10, 12}, {10, 13}, {11, 13}, {11, 14}, {12, 16}, {13, 15},
             {14, 16}, {14, 18}, {15, 17}});
}

// Two faces sharing two disjoint edges (ab and cd): a quad face [a,b,c,d]
// and a hexagonal face [b,a,e,d,c,f], plus two triangles.  Sphere.
inline EmbeddedGraph shared_two_edges_host() {
    enum { A, B, C, D, E, F };
    Graph g = Graph::from_edges(
        6, {{A, B}, {B, C}, {C, D}, {A, D}, {A, E}, {D, E}, {C, F}, {B, F}});
    std::unordered_map<Vertex, std::vector<Vertex>> rot{
        {A, {D, B, E}}, {B, {F, A, C}}, {C, {B, D, F}},
        {D, {E, C, A}}, {E, {A, D}},    {F, {C, B}}};
    return EmbeddedGraph(std::move(g), std::move(rot));
}

// A standalone (3,4,3,4)-face: 4-cycle 0,1,2,3 traced as one face, with
// one pendant neighbor on the 3-slots and two on the 4-slots.
inline EmbeddedGraph face3434_host() {
    Graph g = Graph::from_edges(
        10, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 7}, {3, 8}, {3, 9}});
    std::unordered_map<Vertex, std::vector<Vertex>> rot{
        {0, {3, 1, 4}}, {1, {0, 2, 5, 6}}, {2, {1, 3, 7}}, {3, {2, 0, 8, 9}},
        {4, {0}},       {5, {1}},          {6, {1}},       {7, {2}},
        {8, {3}},       {9, {3}}};
    return EmbeddedGraph(std::move(g), std::move(rot));
}

// The light-3-vertex neighborhood with its three faces realized by the
// embedding: a (3,4,4,4)-quad [o,l3,b,r3] and two (3,4,3,4,4)-pentagons
// [o,h,l1,l2,l3], [o,h,r1,r2,r3] sharing the edge o-h.  The panel decides
// where each pentagon's second 3-vertex sits: next to h ("near") or next
// to l3/r3 ("far"); panel d identifies the two far vertices.
// Ids: o=0, h=1, l1=2, l2=3, l3=4, r1=5, r2=6, r3=7, b=8, stubs from 9.
enum class LightPanel { a, b, c, c_mirrored, d };

inline EmbeddedGraph light_vertex_host(LightPanel panel = LightPanel::a) {
    enum { O, H, L1, L2, L3, R1, R2, R3, Bv };
    bool identified = panel == LightPanel::d;
    bool left_near = panel != LightPanel::b && panel != LightPanel::c_mirrored;
    bool right_near = panel == LightPanel::a || panel == LightPanel::c_mirrored ||
                      panel == LightPanel::d;

    Graph g;
    for (Vertex v = 0; v <= Bv; ++v)
        if (!(identified && v == R2))
            g.add_vertex(v);
    Vertex r2 = identified ? L2 : R2; // panel d: the two far slots coincide
    std::vector<torodec::Edge> edges = {
        {O, H},   {H, L1},  {L1, L2}, {L2, L3}, {O, L3},
        {L3, Bv}, {O, R3},  {R3, Bv},
    };
    edges.push_back(torodec::make_edge(H, R1));
    edges.push_back(torodec::make_edge(R1, r2));
    edges.push_back(torodec::make_edge(r2, R3));
    for (auto [u, v] : edges)
        g.add_edge(u, v);

    std::unordered_map<Vertex, std::vector<Vertex>> stub_lists;
    int next = 9;
    auto stubs = [&](Vertex v, int count) {
        for (int i = 0; i < count; ++i) {
            g.add_vertex(next);
            g.add_edge(v, next);
            stub_lists[v].push_back(next);
            ++next;
        }
    };
    stubs(H, 1);
    stubs(L1, left_near ? 1 : 2);
    stubs(L2, identified ? 0 : (left_near ? 2 : 1));
    stubs(L3, 1);
    stubs(R1, right_near ? 1 : 2);
    if (!identified)
        stubs(R2, right_near ? 2 : 1);
    stubs(R3, 1);
    stubs(Bv, 2);

    auto with_stubs = [&](Vertex v, std::vector<Vertex> prefix) {
        for (Vertex s : stub_lists[v])
            prefix.push_back(s);
        return prefix;
    };
    std::unordered_map<Vertex, std::vector<Vertex>> rot;
    rot[O] = {L3, H, R3};
    rot[H] = {O, L1, stub_lists[H].front(), R1};
    rot[L1] = with_stubs(L1, {H, L2});
    rot[L3] = with_stubs(L3, {L2, O, Bv});
    rot[R1] = with_stubs(R1, {r2, H});
    rot[R3] = with_stubs(R3, {Bv, O, r2});
    rot[Bv] = with_stubs(Bv, {L3, R3});
    if (identified)
        rot[L2] = {L1, L3, R3, R1};
    else {
        rot[L2] = with_stubs(L2, {L1, L3});
        rot[R2] = with_stubs(R2, {R3, R1});
    }
    for (const auto &[v, list] : stub_lists)
        for (Vertex s : list)
            rot[s] = {v};
    return EmbeddedGraph(std::move(g), std::move(rot));
}

} // namespace fixtures
