#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "torodec/decomposition.hpp"
#include "torodec/embedding.hpp"

namespace torodec {

// Graph whose vertices carry the input labels.  Internally everything runs
// on dense integer ids; labels only matter at the I/O boundary.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels; // by vertex id

    const std::string &label(Vertex v) const { return labels.at(v); }
    Vertex index_of(const std::string &label) const;
};

struct LabeledEmbeddedGraph {
    EmbeddedGraph eg;
    std::vector<std::string> labels;

    const std::string &label(Vertex v) const { return labels.at(v); }
    Vertex index_of(const std::string &label) const;
    LabeledGraph abstract() const { return {eg.graph(), labels}; }
};

// Embedded-graph JSON format: {"vertices": [labels], "rotation": {label:
// [neighbor labels in cyclic order]}}.  Adjacency is defined by the
// rotation lists and must be symmetric.
LabeledEmbeddedGraph parse_egf(const std::string &text);
std::string emit_egf(const LabeledEmbeddedGraph &leg);

// Standard bit-packed graph6 string (one graph, no embedding).  Labels are
// "0".."n-1".
LabeledGraph parse_graph6(const std::string &line);

// Test families.  Torus generators require m, n >= 3.
LabeledEmbeddedGraph gen_torus_grid(int m, int n);      // 4-regular quadrangulation
LabeledEmbeddedGraph gen_honeycomb_torus(int m, int n); // 3-regular, girth 6
LabeledEmbeddedGraph gen_cycle(int n);                  // sphere, two n-faces
LabeledEmbeddedGraph gen_complete(int n);               // planar rotation for n <= 4
LabeledEmbeddedGraph gen_random_rotation(int n, int deg, std::uint64_t seed);

std::string dot_graph(const LabeledEmbeddedGraph &leg);
std::string dot_decomposition(const LabeledEmbeddedGraph &leg, const Decomposition &dec);
std::string dot_witness(const LabeledGraph &lg, const std::vector<Edge> &highlight);

} // namespace torodec
