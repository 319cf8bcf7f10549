#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torodec/degeneracy.hpp"
#include "torodec/graph.hpp"

namespace torodec {

// A (d,h)-decomposition candidate: edge set H plus an orientation of the
// remaining edges.  Valid when max degree of (V, h_edges) is <= h and the
// orientation is acyclic with max out-degree <= d.
struct Decomposition {
    std::vector<Edge> h_edges;
    Orientation orientation;
    int d = 2;
    int h = 1;
};

struct Violation {
    std::string clause; // "H-degree", "coverage", "acyclicity", "out-degree"
    std::string detail;
};

struct VerifyResult {
    bool ok = true;
    std::vector<Violation> violations; // in clause order; front() is the first failure
};

// Checks every decomposition invariant.  Throws DomainError when an H-edge
// or arc is not an edge of g at all.
VerifyResult verify_decomposition(const Graph &g, const Decomposition &dec);

// Exhaustive decision oracle: enumerates candidate subgraphs H with
// max degree <= h in increasing edge count (for h = 1 these are exactly the
// matchings, including the empty one) and tests d-degeneracy of the rest.
// First success in enumeration order wins, so output is deterministic.
// Intended for oracle scale (|E| around 20 when h = 1).
std::optional<Decomposition> solve_exact(const Graph &g, int d, int h);

bool decomposable_21(const Graph &g);

} // namespace torodec
