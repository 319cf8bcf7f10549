#include "torodec/reductions.hpp"

#include <algorithm>
#include <set>

namespace torodec {

std::string to_string(RuleId id) {
    switch (id) {
    case RuleId::I: return "I";
    case RuleId::II: return "II";
    case RuleId::VIII: return "VIII";
    case RuleId::IX: return "IX";
    case RuleId::XA: return "XA";
    case RuleId::XB: return "XB";
    case RuleId::XC: return "XC";
    }
    return "?";
}

namespace {

std::vector<Edge> skeleton_of(const std::vector<Edge> &h_edges, const std::vector<Arc> &arcs) {
    std::set<Edge> all;
    for (auto e : h_edges)
        all.insert(make_edge(e.first, e.second));
    for (auto a : arcs)
        all.insert(make_edge(a.first, a.second));
    return {all.begin(), all.end()};
}

Recipe make_recipe(std::string variant, std::vector<std::string> names, std::vector<int> degrees,
                   std::vector<Edge> h_edges, std::vector<Arc> arcs) {
    Recipe r;
    r.variant = std::move(variant);
    r.slot_names = std::move(names);
    r.slot_degree = std::move(degrees);
    r.h_edges = std::move(h_edges);
    r.arcs = std::move(arcs);
    r.skeleton_edges = skeleton_of(r.h_edges, r.arcs);
    return r;
}

std::vector<ReductionRule> build_catalog() {
    std::vector<ReductionRule> rules;

    rules.push_back({RuleId::I,
                     "2--vertex: delete it and orient its edges outward",
                     {make_recipe("", {"v"}, {-1}, {}, {})}});

    rules.push_back({RuleId::II,
                     "adjacent 3-vertices: their edge joins the matching, the "
                     "other four edges leave them",
                     {make_recipe("", {"u", "v"}, {3, 3}, {{0, 1}}, {})}});

    rules.push_back({RuleId::VIII,
                     "(3,4,3,4)-face: opposite boundary edges join the matching, "
                     "the other two are oriented inside",
                     {make_recipe("", {"b1", "b2", "b3", "b4"}, {3, 4, 3, 4},
                                  {{0, 1}, {2, 3}}, {{0, 3}, {2, 1}})}});

    rules.push_back({RuleId::XA,
                     "triangle with a pendant 3-vertex on a 4-vertex",
                     {make_recipe("", {"o", "p", "q", "r"}, {4, 4, 3, 3},
                                  {{1, 2}, {0, 3}}, {{2, 0}, {0, 1}})}});

    rules.push_back({RuleId::XB,
                     "pentagon with an apex, 3-vertices opposite the apex edge",
                     {make_recipe("", {"v1", "v2", "v3", "v4", "v5", "w"}, {4, 4, 3, 4, 3, 4},
                                  {{0, 5}, {1, 2}, {3, 4}},
                                  {{2, 3}, {4, 0}, {0, 1}, {1, 5}})}});

    rules.push_back({RuleId::XC,
                     "pentagon with an apex, alternating 3-vertices",
                     {make_recipe("", {"v1", "v2", "v3", "v4", "v5", "w"}, {4, 3, 4, 3, 4, 4},
                                  {{0, 5}, {1, 2}, {3, 4}},
                                  {{1, 5}, {1, 0}, {0, 4}, {3, 2}})}});

    // Light 3-vertex o: a (3,4,4,4)-face [o,l3,b,r3] and two
    // (3,4,3,4,4)-faces [o,h,l1,l2,l3], [o,h,r1,r2,r3] sharing the edge oh.
    // Panels differ in where the second 3-vertex of each pentagon sits
    // (next to h, or across from it) and, in panel d, in the two far
    // vertices being one and the same on the torus.
    std::vector<std::string> nine{"o", "h", "l1", "l2", "l3", "r1", "r2", "r3", "b"};
    std::vector<std::string> eight{"o", "h", "l1", "lr2", "l3", "r1", "r3", "b"};
    rules.push_back(
        {RuleId::IX,
         "light 3-vertex neighborhood",
         {make_recipe("a", nine, {3, 4, 3, 4, 4, 3, 4, 4, 4},
                      {{4, 8}, {6, 7}, {1, 5}, {2, 3}},
                      {{1, 0}, {0, 4}, {0, 7}, {7, 8}, {2, 1}, {4, 3}, {5, 6}}),
          make_recipe("b", nine, {3, 4, 4, 3, 4, 4, 3, 4, 4},
                      {{0, 4}, {2, 3}, {1, 5}, {6, 7}},
                      {{0, 1}, {0, 7}, {7, 8}, {4, 8}, {1, 2}, {3, 4}, {6, 5}}),
          make_recipe("c", nine, {3, 4, 3, 4, 4, 4, 3, 4, 4},
                      {{4, 8}, {6, 7}, {1, 5}, {2, 3}},
                      {{1, 0}, {0, 4}, {0, 7}, {7, 8}, {2, 1}, {4, 3}, {6, 5}}),
          make_recipe("d", eight, {3, 4, 3, 4, 4, 3, 4, 4},
                      {{4, 7}, {1, 5}, {2, 3}},
                      {{1, 0}, {0, 4}, {0, 6}, {6, 7}, {2, 1}, {4, 3}, {5, 3}, {3, 6}})}});

    return rules;
}

const ReductionRule &rule_by_id(RuleId id) {
    for (const ReductionRule &r : rule_catalog())
        if (r.id == id)
            return r;
    throw InternalError("rule missing from catalog");
}

// The image of the recipe skeleton must be exactly the set of host edges
// inside X; an uncovered internal edge would be left unoriented.
bool internal_edges_exact(const Graph &g, const std::vector<Vertex> &slots,
                          const Recipe &recipe) {
    std::set<Vertex> x(slots.begin(), slots.end());
    if (x.size() != slots.size())
        return false;
    std::set<Edge> mapped;
    for (auto [a, b] : recipe.skeleton_edges) {
        Edge e = make_edge(slots[a], slots[b]);
        if (!g.has_edge(e.first, e.second))
            return false;
        mapped.insert(e);
    }
    std::size_t internal = 0;
    for (Vertex u : x)
        for (Vertex w : g.neighbors(u))
            if (u < w && x.count(w)) {
                if (!mapped.count({u, w}))
                    return false;
                ++internal;
            }
    return internal == mapped.size();
}

bool slot_degrees_ok(const Graph &g, const std::vector<Vertex> &slots, const Recipe &recipe) {
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (recipe.slot_degree[i] >= 0 && g.degree(slots[i]) != recipe.slot_degree[i])
            return false;
    return true;
}

std::optional<ReductionMatch> match_rule_i(const Graph &g) {
    for (Vertex v : g.vertices())
        if (g.degree(v) <= 2)
            return ReductionMatch{RuleId::I, 0, {v}};
    return std::nullopt;
}

std::optional<ReductionMatch> match_rule_ii(const Graph &g) {
    for (auto [u, v] : g.edges())
        if (g.degree(u) == 3 && g.degree(v) == 3)
            return ReductionMatch{RuleId::II, 0, {u, v}};
    return std::nullopt;
}

std::optional<ReductionMatch> match_rule_viii(const EmbeddedGraph &eg) {
    const Graph &g = eg.graph();
    const Recipe &recipe = rule_by_id(RuleId::VIII).variants[0];
    FaceSet fs = face_trace(eg);
    for (int f = 0; f < fs.num_faces(); ++f) {
        if (fs.face(f).size() != 4)
            continue;
        std::vector<Vertex> walk = fs.face(f).vertex_walk();
        if (std::set<Vertex>(walk.begin(), walk.end()).size() != 4)
            continue;
        Vertex best = -1;
        int best_offset = -1;
        for (int i = 0; i < 4; ++i) {
            auto deg = [&](int j) { return g.degree(walk[(i + j) % 4]); };
            if (deg(0) == 3 && deg(1) == 4 && deg(2) == 3 && deg(3) == 4 &&
                (best < 0 || walk[i] < best)) {
                best = walk[i];
                best_offset = i;
            }
        }
        if (best_offset < 0)
            continue;
        std::vector<Vertex> slots;
        for (int j = 0; j < 4; ++j)
            slots.push_back(walk[(best_offset + j) % 4]);
        ReductionMatch m{RuleId::VIII, 0, slots};
        if (internal_edges_exact(g, slots, recipe))
            return m;
    }
    return std::nullopt;
}

std::optional<ReductionMatch> match_rule_pattern(const Graph &g, RuleId id, int catalog_index) {
    const Recipe &recipe = rule_by_id(id).variants[0];
    const Pattern &p = reducible_catalog()[catalog_index];
    std::optional<ReductionMatch> found;
    for_each_match(g, p, [&](const MatchWitness &w) {
        std::vector<Vertex> slots;
        for (auto [pv, hv] : w.mapping)
            slots.push_back(hv);
        if (!internal_edges_exact(g, slots, recipe))
            return true; // keep searching
        found = ReductionMatch{id, 0, slots};
        return false;
    });
    return found;
}

// Walks a pentagon face from o so that it reads o, h, s2, s3, s4.  Fails
// when o does not appear exactly once or h is not next to it.
std::optional<std::vector<Vertex>> pentagon_from(const Face &face, Vertex o, Vertex h) {
    std::vector<Vertex> walk = face.vertex_walk();
    int pos = -1;
    for (int i = 0; i < static_cast<int>(walk.size()); ++i) {
        if (walk[i] == o) {
            if (pos >= 0)
                return std::nullopt;
            pos = i;
        }
    }
    if (pos < 0)
        return std::nullopt;
    auto at = [&](int offset) { return walk[((pos + offset) % 5 + 5) % 5]; };
    if (at(1) == h)
        return std::vector<Vertex>{at(0), at(1), at(2), at(3), at(4)};
    if (at(-1) == h)
        return std::vector<Vertex>{at(0), at(-1), at(-2), at(-3), at(-4)};
    return std::nullopt;
}

std::optional<ReductionMatch> match_rule_ix(const EmbeddedGraph &eg) {
    const Graph &g = eg.graph();
    FaceSet fs = face_trace(eg);
    const auto &variants = rule_by_id(RuleId::IX).variants;

    for (Vertex o : find_light_3vertices(eg, fs)) {
        std::vector<int> corners = fs.corner_faces(eg, o);
        std::set<int> distinct(corners.begin(), corners.end());
        int quad = -1;
        std::vector<int> pents;
        for (int f : distinct) {
            if (fs.face(f).size() == 4)
                quad = f;
            else
                pents.push_back(f);
        }
        if (quad < 0 || pents.size() != 2)
            continue;

        std::vector<Vertex> qwalk = fs.face(quad).vertex_walk();
        if (std::set<Vertex>(qwalk.begin(), qwalk.end()).size() != 4)
            continue;
        int qpos = static_cast<int>(std::find(qwalk.begin(), qwalk.end(), o) - qwalk.begin());
        Vertex qa = qwalk[(qpos + 1) % 4];
        Vertex b = qwalk[(qpos + 2) % 4];
        Vertex qb = qwalk[(qpos + 3) % 4];

        // h is the one neighbor of o off the quad
        Vertex h = -1;
        for (Vertex n : g.neighbors(o))
            if (n != qa && n != qb)
                h = n;
        if (h < 0 || h == b)
            continue;

        auto pent_a = pentagon_from(fs.face(pents[0]), o, h);
        auto pent_b = pentagon_from(fs.face(pents[1]), o, h);
        if (!pent_a || !pent_b)
            continue;
        // attach each pentagon to its side of the quad
        const std::vector<Vertex> *left = nullptr, *right = nullptr;
        if (pent_a->back() == qa && pent_b->back() == qb) {
            left = &*pent_a;
            right = &*pent_b;
        } else if (pent_a->back() == qb && pent_b->back() == qa) {
            left = &*pent_b;
            right = &*pent_a;
        } else {
            continue;
        }

        Vertex l1 = (*left)[2], l2 = (*left)[3], l3 = (*left)[4];
        Vertex r1 = (*right)[2], r2 = (*right)[3], r3 = (*right)[4];
        bool left_near = g.degree(l1) == 3 && g.degree(l2) == 4;
        bool left_far = g.degree(l1) == 4 && g.degree(l2) == 3;
        bool right_near = g.degree(r1) == 3 && g.degree(r2) == 4;
        bool right_far = g.degree(r1) == 4 && g.degree(r2) == 3;
        if (!(left_near || left_far) || !(right_near || right_far))
            continue;

        // the mixed panel is drawn with the near side on the left
        if (left_far && right_near) {
            std::swap(l1, r1);
            std::swap(l2, r2);
            std::swap(l3, r3);
            std::swap(left_near, right_near);
            std::swap(left_far, right_far);
        }

        std::vector<Vertex> nine{o, h, l1, l2, l3, r1, r2, r3, b};
        bool nine_distinct = std::set<Vertex>(nine.begin(), nine.end()).size() == 9;

        int variant = -1;
        std::vector<Vertex> slots;
        if (nine_distinct) {
            if (left_near && right_near)
                variant = 0;
            else if (left_far && right_far)
                variant = 1;
            else
                variant = 2;
            slots = nine;
        } else if (left_near && right_near && l2 == r2) {
            std::vector<Vertex> eight{o, h, l1, l2, l3, r1, r3, b};
            if (std::set<Vertex>(eight.begin(), eight.end()).size() == 8) {
                variant = 3;
                slots = eight;
            }
        }
        if (variant < 0)
            continue;

        const Recipe &recipe = variants[variant];
        if (!slot_degrees_ok(g, slots, recipe))
            continue;
        if (!internal_edges_exact(g, slots, recipe))
            continue;
        return ReductionMatch{RuleId::IX, variant, slots};
    }
    return std::nullopt;
}

} // namespace

const std::vector<ReductionRule> &rule_catalog() {
    static const std::vector<ReductionRule> catalog = build_catalog();
    return catalog;
}

const Recipe &ReductionMatch::recipe() const {
    return rule_by_id(rule).variants.at(variant);
}

std::vector<Vertex> ReductionMatch::deleted() const {
    std::vector<Vertex> x = slots;
    std::sort(x.begin(), x.end());
    return x;
}

std::optional<ReductionMatch> match_rule(const EmbeddedGraph &eg, RuleId id) {
    switch (id) {
    case RuleId::I: return match_rule_i(eg.graph());
    case RuleId::II: return match_rule_ii(eg.graph());
    case RuleId::VIII: return match_rule_viii(eg);
    case RuleId::XA: return match_rule_pattern(eg.graph(), RuleId::XA, 0);
    case RuleId::XB: return match_rule_pattern(eg.graph(), RuleId::XB, 1);
    case RuleId::XC: return match_rule_pattern(eg.graph(), RuleId::XC, 2);
    case RuleId::IX: return match_rule_ix(eg);
    }
    return std::nullopt;
}

std::optional<ReductionMatch> find_reduction(const EmbeddedGraph &eg) {
    // cheap degree-based rules first, face-based rules last
    for (RuleId id : {RuleId::I, RuleId::II, RuleId::VIII, RuleId::XA, RuleId::XB, RuleId::XC,
                      RuleId::IX})
        if (auto m = match_rule(eg, id))
            return m;
    return std::nullopt;
}

EmbeddedGraph apply_reduction(const EmbeddedGraph &eg, const ReductionMatch &m) {
    const Graph &g = eg.graph();
    const Recipe &recipe = m.recipe();
    for (Vertex v : m.slots)
        if (!g.has_vertex(v))
            throw DomainError("stale match: vertex " + std::to_string(v) + " is gone");
    for (auto [a, b] : recipe.skeleton_edges)
        if (!g.has_edge(m.slots[a], m.slots[b]))
            throw DomainError("stale match: configuration edge missing");
    return eg.without_vertices(m.deleted());
}

Decomposition extend_decomposition(const EmbeddedGraph &eg, const ReductionMatch &m,
                                   const Decomposition &sub) {
    const Graph &g = eg.graph();
    const Recipe &recipe = m.recipe();
    std::set<Vertex> x(m.slots.begin(), m.slots.end());

    Decomposition out;
    out.d = 2;
    out.h = 1;
    out.h_edges = sub.h_edges;
    for (auto [a, b] : recipe.h_edges)
        out.h_edges.push_back(make_edge(m.slots[a], m.slots[b]));

    Orientation merged;
    for (auto [t, hd] : sub.orientation.arcs())
        merged.orient(t, hd);
    for (auto [a, b] : recipe.arcs)
        merged.orient(m.slots[a], m.slots[b]);
    for (Vertex u : x)
        for (Vertex w : g.neighbors(u))
            if (!x.count(w))
                merged.orient(u, w); // boundary policy: out of X
    out.orientation = std::move(merged);

    VerifyResult check = verify_decomposition(g, out);
    if (!check.ok)
        throw InternalError("rule " + to_string(m.rule) + " extension failed verification: " +
                            check.violations.front().clause + " (" +
                            check.violations.front().detail + ")");
    return out;
}

std::optional<Decomposition> solve_constructive(const EmbeddedGraph &eg,
                                                const ConstructiveOptions &options) {
    ForbiddenCheck fc = is_forbidden_free(eg.graph());
    if (!fc.forbidden_free)
        throw ForbiddenConfigurationError(
            "input contains forbidden configuration " +
                forbidden_catalog()[fc.config_index].name,
            fc);

    std::vector<std::pair<EmbeddedGraph, ReductionMatch>> levels;
    EmbeddedGraph current = eg;
    std::optional<Decomposition> base;
    while (!current.graph().empty()) {
        auto m = find_reduction(current);
        if (!m) {
            if (options.allow_fallback &&
                current.graph().num_edges() <= static_cast<std::size_t>(options.fallback_edge_limit)) {
                base = solve_exact(current.graph(), 2, 1);
                if (!base)
                    return std::nullopt;
                break;
            }
            throw ReductionStuckError("no reduction rule matches the remaining graph",
                                      current.graph());
        }
        if (options.trace)
            options.trace->push_back({m->rule, m->variant, m->slots});
        levels.emplace_back(current, *m);
        current = apply_reduction(current, *m);
    }

    Decomposition dec = base ? std::move(*base) : Decomposition{{}, {}, 2, 1};
    for (auto it = levels.rbegin(); it != levels.rend(); ++it)
        dec = extend_decomposition(it->first, it->second, dec);
    return dec;
}

} // namespace torodec
