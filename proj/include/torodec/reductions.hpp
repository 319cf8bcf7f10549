#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torodec/decomposition.hpp"
#include "torodec/embedding.hpp"
#include "torodec/pattern.hpp"

namespace torodec {

enum class RuleId { I, II, VIII, IX, XA, XB, XC };

std::string to_string(RuleId id);

// Local extension recipe over a matched vertex set X.  Slots index the
// labeled vertices; `h_edges` go into the matching, `arcs` are oriented
// inside X, and every edge from X to the outside is oriented outward.
struct Recipe {
    std::string variant;                 // "" or a panel tag like "a".."d"
    std::vector<std::string> slot_names;
    std::vector<int> slot_degree;        // required host degree, -1 = any (at most 2 for rule I)
    std::vector<Edge> skeleton_edges;    // every internal edge of the configuration
    std::vector<Edge> h_edges;
    std::vector<Arc> arcs;
};

struct ReductionRule {
    RuleId id;
    std::string description;
    std::vector<Recipe> variants; // one, except rule IX's four panels
};

// The seven reduction rules in scan order I, II, VIII, XA, XB, XC, IX.
const std::vector<ReductionRule> &rule_catalog();

struct ReductionMatch {
    RuleId rule;
    int variant = 0;             // index into the rule's variants
    std::vector<Vertex> slots;   // host vertex per recipe slot

    const Recipe &recipe() const;
    std::vector<Vertex> deleted() const; // X, sorted
};

// First match of one specific rule, or none.  Face-based rules (VIII, IX)
// trace the current embedding.
std::optional<ReductionMatch> match_rule(const EmbeddedGraph &eg, RuleId id);

// Scans rules in the fixed order I, II, VIII, XA, XB, XC, IX and returns
// the first match.
std::optional<ReductionMatch> find_reduction(const EmbeddedGraph &eg);

// delete_vertices(eg, X).  Throws DomainError when the match has gone stale
// (vertices or configuration edges no longer present).
EmbeddedGraph apply_reduction(const EmbeddedGraph &eg, const ReductionMatch &m);

// Extends a valid (2,1)-decomposition of eg minus X across the recipe:
// adds the recipe's H-edges and internal arcs and orients every X-to-outside
// edge outward.  The result is re-verified; failure means a transcription
// bug and raises InternalError.
Decomposition extend_decomposition(const EmbeddedGraph &eg, const ReductionMatch &m,
                                   const Decomposition &sub);

// Raised when the constructive solver is handed a graph containing a
// forbidden configuration: the theorem's hypotheses do not hold.
struct ForbiddenConfigurationError : DomainError {
    ForbiddenConfigurationError(std::string message, ForbiddenCheck check)
        : DomainError(std::move(message)), check(std::move(check)) {}
    ForbiddenCheck check;
};

// Raised when no rule matches a forbidden-free graph and the exact fallback
// is unavailable.  Such a graph contradicts the theorem on its surface
// assumptions and deserves inspection.
struct ReductionStuckError : DomainError {
    ReductionStuckError(std::string message, Graph remaining)
        : DomainError(std::move(message)), remaining(std::move(remaining)) {}
    Graph remaining;
};

struct TraceEntry {
    RuleId rule;
    int variant;
    std::vector<Vertex> slots;
};

struct ConstructiveOptions {
    bool allow_fallback = true;  // fall back to solve_exact on small leftovers
    int fallback_edge_limit = 20;
    std::vector<TraceEntry> *trace = nullptr;
};

// Reduce to the empty graph, then extend back up.  Returns a verified
// (2,1)-decomposition.  Throws ForbiddenConfigurationError when the input
// contains a catalog configuration, ReductionStuckError when reduction
// stalls with fallback unavailable.
std::optional<Decomposition> solve_constructive(const EmbeddedGraph &eg,
                                                const ConstructiveOptions &options = {});

} // namespace torodec
