#include "torodec/discharge.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "torodec/pattern.hpp"

namespace torodec {

std::string Element::str() const {
    return (kind == Kind::vertex ? "v:" : "f:") + std::to_string(id);
}

void ChargeLedger::transfer(const std::string &rule, Element from, Element to,
                            Rational amount, std::string note) {
    if (!amount.is_positive())
        throw InternalError("transfer amounts must be positive");
    charge[from] -= amount;
    charge[to] += amount;
    log.push_back({rule, from, to, amount, std::move(note)});
}

Rational ChargeLedger::total() const {
    Rational sum;
    for (const auto &[e, c] : charge)
        sum += c;
    return sum;
}

Rational ChargeLedger::total_initial() const {
    Rational sum;
    for (const auto &[e, c] : initial)
        sum += c;
    return sum;
}

std::map<Element, Rational> ChargeLedger::replay() const {
    std::map<Element, Rational> out = initial;
    for (const Transfer &t : log) {
        out[t.from] -= t.amount;
        out[t.to] += t.amount;
    }
    return out;
}

ChargeLedger initial_charges(const EmbeddedGraph &eg) {
    if (!eg.graph().is_connected())
        throw DomainError("initial_charges requires a connected graph");
    FaceSet fs = face_trace(eg);
    ChargeLedger ledger;
    for (Vertex v : eg.graph().vertices())
        ledger.initial[Element::vertex(v)] = Rational(eg.graph().degree(v) - 4);
    for (int f = 0; f < fs.num_faces(); ++f)
        ledger.initial[Element::face(f)] = Rational(fs.face(f).size() - 4);
    ledger.charge = ledger.initial;
    return ledger;
}

namespace {

std::string edge_note(Edge e) {
    return "edge " + std::to_string(e.first) + "-" + std::to_string(e.second);
}

void apply_r1(const FaceSet &fs, ChargeLedger &ledger) {
    const Rational third(1, 3);
    for (int f = 0; f < fs.num_faces(); ++f) {
        if (fs.face(f).size() != 3)
            continue;
        // one payment per boundary edge, from whichever face is across it
        for (const HalfEdge &h : fs.face(f).boundary) {
            int across = fs.face_of(h.reversed());
            ledger.transfer("R1", Element::face(across), Element::face(f), third,
                            edge_note(make_edge(h.from, h.to)));
        }
    }
}

void apply_r2(const EmbeddedGraph &eg, const FaceSet &fs, ChargeLedger &ledger) {
    const Graph &g = eg.graph();
    const Rational half(1, 2), third(1, 3);
    for (Vertex w : g.vertices()) {
        if (g.degree(w) != 3)
            continue;
        std::vector<int> corners = fs.corner_faces(eg, w);
        std::set<int> distinct(corners.begin(), corners.end());
        if (distinct.size() < 3)
            ledger.notes.push_back("3-vertex " + std::to_string(w) +
                                   " has fewer than three distinct incident faces");
        std::set<int> small;
        for (int f : distinct)
            if (fs.face(f).size() <= 4)
                small.insert(f);
        if (small.size() > 1)
            ledger.notes.push_back("3-vertex " + std::to_string(w) +
                                   " is incident to more than one 4--face; face " +
                                   std::to_string(*small.begin()) + " designated");
        if (!small.empty()) {
            int designated = *small.begin(); // canonically smallest 4--face
            bool skipped = false;            // drop exactly one corner of it
            for (std::size_t i = 0; i < corners.size(); ++i) {
                if (!skipped && corners[i] == designated) {
                    skipped = true;
                    continue;
                }
                ledger.transfer("R2", Element::face(corners[i]), Element::vertex(w), half,
                                "corner " + std::to_string(i));
            }
        } else {
            for (std::size_t i = 0; i < corners.size(); ++i)
                ledger.transfer("R2", Element::face(corners[i]), Element::vertex(w), third,
                                "corner " + std::to_string(i));
        }
    }
}

void apply_r3(const EmbeddedGraph &eg, const FaceSet &fs, ChargeLedger &ledger) {
    const Graph &g = eg.graph();
    const Rational sixth(1, 6);
    for (Vertex x : g.vertices()) {
        if (g.degree(x) < 5)
            continue;
        for (Vertex n : eg.rotation(x)) {
            int f = fs.face_of({x, n});
            if (fs.face(f).size() >= 4) {
                ledger.transfer("R3", Element::vertex(x), Element::face(f), sixth,
                                "incident " + edge_note(make_edge(x, n)));
            } else {
                // 3-face [x y z]: pay the face on the other side of yz
                for (const HalfEdge &h : fs.face(f).boundary) {
                    if (h.from == x || h.to == x)
                        continue;
                    int through = fs.face_of(h.reversed());
                    ledger.transfer("R3", Element::vertex(x), Element::face(through), sixth,
                                    "through f:" + std::to_string(f));
                }
            }
        }
    }
}

} // namespace

ChargeLedger run_discharging(const EmbeddedGraph &eg, ChargeLedger ledger) {
    FaceSet fs = face_trace(eg);
    apply_r1(fs, ledger);
    apply_r2(eg, fs, ledger);
    apply_r3(eg, fs, ledger);
    return ledger;
}

ChargeReport final_charge_report(const ChargeLedger &ledger) {
    ChargeReport report;
    report.total_before = ledger.total_initial();
    report.total_after = ledger.total();
    for (const auto &[e, c] : ledger.charge) {
        if (c.is_negative())
            report.negatives.push_back(e);
        else if (c.is_positive())
            report.positives.push_back(e);
    }
    auto wanted = [&](Element e) {
        return ledger.charge.at(e).is_negative() || ledger.charge.at(e).is_positive();
    };
    for (const Transfer &t : ledger.log) {
        if (wanted(t.from))
            report.history[t.from].push_back(t);
        if (wanted(t.to))
            report.history[t.to].push_back(t);
    }
    return report;
}

namespace {

// All simple cycles of length k, visited with the smallest vertex first.
// The visitor returns false to stop the enumeration.
bool enumerate_cycles(const Graph &g, int k,
                      const std::function<bool(const std::vector<Vertex> &)> &visit) {
    std::vector<Vertex> path;
    std::set<Vertex> used;
    std::function<bool(Vertex)> extend = [&](Vertex start) {
        Vertex last = path.back();
        if (static_cast<int>(path.size()) == k) {
            if (g.has_edge(last, start) && path[1] < path.back())
                return !visit(path);
            return false;
        }
        for (Vertex next : g.neighbors(last)) {
            if (next <= start || used.count(next))
                continue;
            path.push_back(next);
            used.insert(next);
            if (extend(start))
                return true;
            used.erase(next);
            path.pop_back();
        }
        return false;
    };
    for (Vertex start : g.vertices()) {
        path = {start};
        used = {start};
        if (extend(start))
            return true;
    }
    return false;
}

std::optional<std::pair<std::vector<Vertex>, Edge>> find_chorded_short_cycle(const Graph &g) {
    std::optional<std::pair<std::vector<Vertex>, Edge>> found;
    for (int k : {4, 5}) {
        enumerate_cycles(g, k, [&](const std::vector<Vertex> &cycle) {
            for (std::size_t i = 0; i < cycle.size() && !found; ++i)
                for (std::size_t j = i + 2; j < cycle.size(); ++j) {
                    if (i == 0 && j + 1 == cycle.size())
                        continue; // consecutive on the cycle
                    if (g.has_edge(cycle[i], cycle[j])) {
                        found = {cycle, make_edge(cycle[i], cycle[j])};
                        break;
                    }
                }
            return !found.has_value();
        });
        if (found)
            break;
    }
    return found;
}

std::string face_str(int f) {
    return "f:" + std::to_string(f);
}

} // namespace

AuditReport audit_lemma_properties(const EmbeddedGraph &eg) {
    const Graph &g = eg.graph();
    FaceSet fs = face_trace(eg);
    AuditReport report;
    auto violate = [&](std::string item, std::string description, AuditWitness witness) {
        report.violations.push_back({std::move(item), std::move(description), std::move(witness)});
    };

    // (i) minimum degree at least 3
    for (Vertex v : g.vertices())
        if (g.degree(v) <= 2) {
            violate("i", "vertex " + std::to_string(v) + " has degree " +
                             std::to_string(g.degree(v)),
                    {{v}, {}, {}, ""});
            break;
        }

    // (ii) no adjacent 3-vertices
    bool found_ii = false;
    for (Vertex v : g.vertices()) {
        if (g.degree(v) != 3 || found_ii)
            continue;
        for (Vertex u : g.neighbors(v)) {
            if (v < u && g.degree(u) == 3) {
                violate("ii", "adjacent 3-vertices " + std::to_string(v) + ", " +
                                  std::to_string(u),
                        {{v, u}, {}, {make_edge(v, u)}, ""});
                found_ii = true;
                break;
            }
        }
    }

    // (iii) every 5--cycle has no chord
    if (auto chorded = find_chorded_short_cycle(g)) {
        auto [cycle, chord] = *chorded;
        violate("iii", "chorded " + std::to_string(cycle.size()) + "-cycle",
                {cycle, {}, {chord}, "chord " + std::to_string(chord.first) + "-" +
                                         std::to_string(chord.second)});
    }

    // adjacency between faces, one entry per shared edge
    auto adjacent_faces = [&](int f) {
        std::vector<std::pair<int, Edge>> out;
        for (const HalfEdge &h : fs.face(f).boundary)
            out.push_back({fs.face_of(h.reversed()), make_edge(h.from, h.to)});
        return out;
    };

    // (iv) no adjacent 4--faces
    bool found_iv = false;
    for (int f = 0; f < fs.num_faces() && !found_iv; ++f) {
        if (fs.face(f).size() > 4)
            continue;
        for (auto [other, e] : adjacent_faces(f)) {
            if (other != f && fs.face(other).size() <= 4) {
                violate("iv", "adjacent 4--faces " + face_str(f) + " and " + face_str(other),
                        {{}, {f, other}, {e}, ""});
                found_iv = true;
                break;
            }
        }
    }

    // (v) a 5-face adjacent to a 4--face is normally adjacent to it, and
    // every 5-face has at most one adjacent 3-face
    bool found_v = false;
    for (int f = 0; f < fs.num_faces() && !found_v; ++f) {
        if (fs.face(f).size() != 5)
            continue;
        std::set<int> three_faces;
        for (auto [other, e] : adjacent_faces(f)) {
            if (other == f)
                continue;
            if (fs.face(other).size() <= 4 &&
                !faces_normally_adjacent(fs.face(f), fs.face(other))) {
                violate("v", "5-face " + face_str(f) + " not normally adjacent to 4--face " +
                                 face_str(other),
                        {{}, {f, other}, {e}, "not normal"});
                found_v = true;
                break;
            }
            if (fs.face(other).size() == 3)
                three_faces.insert(other);
        }
        if (!found_v && three_faces.size() >= 2) {
            std::vector<int> faces{f};
            faces.insert(faces.end(), three_faces.begin(), three_faces.end());
            violate("v", "5-face " + face_str(f) + " adjacent to " +
                             std::to_string(three_faces.size()) + " 3-faces",
                    {{}, faces, {}, "multiple 3-faces"});
            found_v = true;
        }
    }

    // (vi) a 5-face adjacent to a 3-face is not adjacent to any 4-face
    bool found_vi = false;
    for (int f = 0; f < fs.num_faces() && !found_vi; ++f) {
        if (fs.face(f).size() != 5)
            continue;
        int three = -1, four = -1;
        for (auto [other, e] : adjacent_faces(f)) {
            if (other == f)
                continue;
            if (fs.face(other).size() == 3 && three < 0)
                three = other;
            if (fs.face(other).size() == 4 && four < 0)
                four = other;
        }
        if (three >= 0 && four >= 0) {
            violate("vi", "5-face " + face_str(f) + " adjacent to 3-face " + face_str(three) +
                              " and 4-face " + face_str(four),
                    {{}, {f, three, four}, {}, ""});
            found_vi = true;
        }
    }

    // (vii) no 6-face adjacent to a 3-face
    bool found_vii = false;
    for (int f = 0; f < fs.num_faces() && !found_vii; ++f) {
        if (fs.face(f).size() != 6)
            continue;
        for (auto [other, e] : adjacent_faces(f)) {
            if (other != f && fs.face(other).size() == 3) {
                violate("vii", "6-face " + face_str(f) + " adjacent to 3-face " + face_str(other),
                        {{}, {f, other}, {e}, ""});
                found_vii = true;
                break;
            }
        }
    }

    // (viii) no (3,4,3,4)-faces
    static const std::vector<int> k3434{3, 4, 3, 4};
    for (int f = 0; f < fs.num_faces(); ++f) {
        if (fs.face(f).size() != 4)
            continue;
        if (cyclically_equivalent(fs.degree_sequence(g, f), k3434)) {
            violate("viii", "(3,4,3,4)-face " + face_str(f),
                    {fs.face(f).vertex_walk(), {f}, {}, ""});
            break;
        }
    }

    // (ix) no light 3-vertices
    std::vector<Vertex> light = find_light_3vertices(eg, fs);
    if (!light.empty()) {
        Vertex v = light.front();
        violate("ix", "light 3-vertex " + std::to_string(v),
                {{v}, fs.corner_faces(eg, v), {}, ""});
    }

    // (x) no reducible configuration as a subgraph
    const auto &reducible = reducible_catalog();
    for (const Pattern &p : reducible) {
        if (auto w = match_pattern(g, p)) {
            violate("x", "reducible configuration " + p.name,
                    {w->image_set(), {}, {}, p.name});
            break;
        }
    }

    return report;
}

Rational case5_value(int d, int t) {
    return Rational(2 * d, 3) - Rational(4) - Rational(t, 6);
}

Rational case5_bound(int d) {
    return Rational(7 * d, 12) - Rational(4);
}

Rational case4_value() {
    return Rational(2) - Rational(3) * Rational(1, 2);
}

std::vector<Rational> case3_values() {
    const Rational omega(1); // a 5-face starts with charge +1
    return {
        omega - Rational(2) * Rational(1, 2),                // no adjacent 3-face
        omega - Rational(1, 2) - Rational(1, 3),             // one 3-face, t <= 1
        omega + Rational(1, 6) - Rational(1, 3) -
            (Rational(1, 3) + Rational(1, 2)),               // t = 2 with a 5+-vertex
    };
}

bool case_inequality_check(int d_max) {
    if (d_max < 7)
        throw DomainError("case_inequality_check requires d_max >= 7");
    const Rational zero;
    for (int d = 7; d <= d_max; ++d) {
        Rational bound = case5_bound(d);
        if (!(bound > zero))
            return false;
        for (int t = 0; t <= d / 2; ++t)
            if (!(case5_value(d, t) >= bound))
                return false;
    }
    if (!(case4_value() > zero))
        return false;
    auto branches = case3_values();
    for (const Rational &b : branches)
        if (!(b >= zero))
            return false;
    return branches[1] > zero;
}

} // namespace torodec
