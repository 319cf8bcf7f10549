#pragma once

// Randomized recipe-soundness harness: plants a reduction configuration in
// a random host, attaches a random valid exterior decomposition, extends
// across the recipe, and checks the result.

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>
#include <vector>

#include "torodec/decomposition.hpp"
#include "torodec/reductions.hpp"

namespace trials {

using namespace torodec;

struct PlantedHost {
    EmbeddedGraph eg;
    ReductionMatch match;
    Decomposition exterior; // valid (2,1)-decomposition of eg minus X
};

inline const Recipe &recipe_of(RuleId id, int variant) {
    for (const ReductionRule &r : rule_catalog())
        if (r.id == id)
            return r.variants.at(variant);
    throw InternalError("unknown rule");
}

// Host = configuration vertices 0..k-1 + a random 2-degenerate outside
// graph; every stub lands on a random outside vertex.  Rule I plants a
// vertex of degree <= 2 instead of exact marks.
inline PlantedHost plant(RuleId id, int variant, std::mt19937_64 &rng) {
    const Recipe &recipe = recipe_of(id, variant);
    int k = static_cast<int>(recipe.slot_names.size());
    auto pick = [&](std::uint64_t bound) { return static_cast<int>(rng() % bound); };

    int n_out = 4 + pick(6);
    int n = k + n_out;
    Graph g;
    for (Vertex v = 0; v < n; ++v)
        g.add_vertex(v);
    for (auto [a, b] : recipe.skeleton_edges)
        g.add_edge(a, b);

    // outside graph grows by attachment to at most two earlier vertices,
    // which keeps it 2-degenerate
    for (int i = 1; i < n_out; ++i) {
        Vertex v = k + i;
        int links = 1 + pick(2);
        std::set<Vertex> targets;
        while (static_cast<int>(targets.size()) < std::min(links, i))
            targets.insert(k + pick(i));
        for (Vertex u : targets)
            g.add_edge(v, u);
    }

    // stubs: bring each slot up to its marked degree
    for (int slot = 0; slot < k; ++slot) {
        int marked = recipe.slot_degree[slot];
        int internal = g.degree(slot);
        int want = marked < 0 ? pick(3) : marked - internal;
        std::set<Vertex> targets;
        while (static_cast<int>(targets.size()) < want && want <= n_out)
            targets.insert(k + pick(n_out));
        for (Vertex u : targets)
            g.add_edge(slot, u);
    }

    // exterior decomposition: a random matching into H, the rest peeled
    std::vector<Edge> outside_edges;
    for (auto e : g.edges())
        if (e.first >= k && e.second >= k)
            outside_edges.push_back(e);
    std::set<Vertex> matched;
    std::vector<Edge> h_out;
    for (auto e : outside_edges)
        if (rng() % 3 == 0 && !matched.count(e.first) && !matched.count(e.second)) {
            h_out.push_back(e);
            matched.insert(e.first);
            matched.insert(e.second);
        }
    Graph rest;
    for (Vertex v = k; v < n; ++v)
        rest.add_vertex(v);
    std::set<Edge> in_h(h_out.begin(), h_out.end());
    for (auto e : outside_edges)
        if (!in_h.count(e))
            rest.add_edge(e.first, e.second);
    auto orientation = orient_bounded(rest, 2);
    if (!orientation)
        throw InternalError("outside graph must be 2-degenerate by construction");

    std::unordered_map<Vertex, std::vector<Vertex>> rot;
    for (Vertex v : g.vertices())
        rot[v] = g.neighbors(v); // faces are irrelevant to extension

    std::vector<Vertex> slots(k);
    for (int i = 0; i < k; ++i)
        slots[i] = i;
    return PlantedHost{EmbeddedGraph(std::move(g), std::move(rot)),
                       ReductionMatch{id, variant, slots},
                       Decomposition{h_out, std::move(*orientation), 2, 1}};
}

// One soundness trial: extension must verify and must not disturb any
// outside out-degree.  Returns false (instead of asserting) so callers can
// count failures their own way.
inline bool sound_trial(RuleId id, int variant, std::mt19937_64 &rng) {
    PlantedHost planted = plant(id, variant, rng);
    Decomposition extended;
    try {
        extended = extend_decomposition(planted.eg, planted.match, planted.exterior);
    } catch (const std::exception &) {
        return false;
    }
    if (!verify_decomposition(planted.eg.graph(), extended).ok)
        return false;
    std::set<Vertex> x(planted.match.slots.begin(), planted.match.slots.end());
    auto before = planted.exterior.orientation.out_degrees();
    auto after = extended.orientation.out_degrees();
    for (Vertex v : planted.eg.graph().vertices()) {
        if (x.count(v))
            continue;
        int b = before.count(v) ? before[v] : 0;
        int a = after.count(v) ? after[v] : 0;
        if (a != b)
            return false;
    }
    return true;
}

struct RuleVariant {
    RuleId id;
    int variant;
};

inline std::vector<RuleVariant> all_rule_variants() {
    std::vector<RuleVariant> out;
    for (const ReductionRule &r : rule_catalog())
        for (int v = 0; v < static_cast<int>(r.variants.size()); ++v)
            out.push_back({r.id, v});
    return out;
}

} // namespace trials
