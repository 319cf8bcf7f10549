#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "torodec/embedding.hpp"
#include "torodec/graph.hpp"

namespace torodec {

// Constraint on the degree a pattern vertex must have in the host graph
// (not in the mapped skeleton).
struct DegreeConstraint {
    enum class Kind { any, exact, at_least };
    Kind kind = Kind::any;
    int k = 0;

    static DegreeConstraint any() { return {}; }
    static DegreeConstraint exact(int k) { return {Kind::exact, k}; }
    static DegreeConstraint at_least(int k) { return {Kind::at_least, k}; }

    bool admits(int host_degree) const {
        switch (kind) {
        case Kind::any: return true;
        case Kind::exact: return host_degree == k;
        case Kind::at_least: return host_degree >= k;
        }
        return false;
    }
};

// Small connected graph with per-vertex degree constraints.  Pattern vertex
// ids are 0..k-1 and are numbered so that every prefix is connected, which
// keeps the backtracking search local.
struct Pattern {
    std::string name;
    Graph skeleton;
    std::unordered_map<Vertex, DegreeConstraint> constraints;

    DegreeConstraint constraint(Vertex v) const {
        auto it = constraints.find(v);
        return it == constraints.end() ? DegreeConstraint::any() : it->second;
    }
};

struct MatchWitness {
    std::string pattern;
    std::vector<std::pair<Vertex, Vertex>> mapping; // (pattern vertex, host vertex)

    Vertex image(Vertex pattern_vertex) const;
    std::vector<Vertex> image_set() const; // sorted host vertices
};

// The six forbidden configurations, in fixed catalog order:
//   0  4-cycle with a chord
//   1  5-cycle with a chord cutting off a triangle
//   2  6-cycle with a long chord (two quadrilaterals on one edge)
//   3  hexagon with a triangle on one edge
//   4  pentagon with a triangle and a quadrilateral on adjacent edges
//   5  pentagon with a quadrilateral and a triangle on non-adjacent edges
const std::vector<Pattern> &forbidden_catalog();

// The three reducible configurations, with exact host-degree constraints
// (a triangle mark means a 3-vertex, a square mark a 4-vertex):
//   0  "triangle-pendant":  triangle 0-1-2 plus pendant 3 on 0;
//                           degrees 4,4,3,3
//   1  "pentagon-apex-33":  pentagon 0..4, apex 5 on edge 0-1;
//                           degrees 4,4,3,4,3,4
//   2  "pentagon-apex-43":  same skeleton; degrees 4,3,4,3,4,4
const std::vector<Pattern> &reducible_catalog();

// Enumerates subgraph matches (injective, every skeleton edge present,
// degree constraints on host degrees; extra host edges between mapped
// vertices are allowed).  Mappings are visited in lexicographic order of
// (image of 0, image of 1, ...).  Return false from the callback to stop.
// Returns true when the callback stopped the search.
bool for_each_match(const Graph &host, const Pattern &p,
                    const std::function<bool(const MatchWitness &)> &callback);

// Lexicographically first match, if any.  The search is exhaustive, so
// absence is certified.
std::optional<MatchWitness> match_pattern(const Graph &host, const Pattern &p);

// Re-checks a witness against the host: injectivity, edges, constraints.
bool witness_valid(const Graph &host, const Pattern &p, const MatchWitness &w);

// First k-cycle in lexicographic vertex order, if any.  k >= 3 required.
std::optional<std::vector<Vertex>> find_cycle_of_length(const Graph &host, int k);

// No i-cycles and no j-cycles.  i, j >= 3 required.
bool in_class_tij(const Graph &host, int i, int j);

struct ForbiddenCheck {
    bool forbidden_free = true;
    int config_index = -1; // into forbidden_catalog()
    std::optional<MatchWitness> witness;
};

// Scans the catalog in order; the witness is the first match (catalog
// order, then lexicographically smallest mapping).
ForbiddenCheck is_forbidden_free(const Graph &host);

// Degree-3 vertices whose three incident faces are distinct and consist of
// one (3,4,4,4)-face and two (3,4,3,4,4)-faces, sequences read cyclically
// up to rotation and reflection.
std::vector<Vertex> find_light_3vertices(const EmbeddedGraph &eg);
std::vector<Vertex> find_light_3vertices(const EmbeddedGraph &eg, const FaceSet &fs);

// Degree-3 vertices incident to at least one 4-face.
std::vector<Vertex> find_minor_3vertices(const EmbeddedGraph &eg);
std::vector<Vertex> find_minor_3vertices(const EmbeddedGraph &eg, const FaceSet &fs);

} // namespace torodec
