#pragma once

#include <map>
#include <string>
#include <vector>

#include "torodec/embedding.hpp"
#include "torodec/graph.hpp"
#include "torodec/rational.hpp"

namespace torodec {

// A charge carrier: a vertex of the graph or a face index of the traced
// embedding.
struct Element {
    enum class Kind { vertex, face };
    Kind kind = Kind::vertex;
    int id = -1;

    static Element vertex(Vertex v) { return {Kind::vertex, v}; }
    static Element face(int f) { return {Kind::face, f}; }

    auto operator<=>(const Element &) const = default;
    std::string str() const;
};

struct Transfer {
    std::string rule; // "R1", "R2", "R3"
    Element from;
    Element to;
    Rational amount;
    std::string note; // provenance: the edge, corner, or through-face
};

// Exact rational charge per element plus the full transfer log.  Appending
// a transfer debits and credits equal amounts, so the total is invariant.
struct ChargeLedger {
    std::map<Element, Rational> initial;
    std::map<Element, Rational> charge;
    std::vector<Transfer> log;
    std::vector<std::string> notes; // degeneracies the rules had to resolve

    void transfer(const std::string &rule, Element from, Element to, Rational amount,
                  std::string note);

    Rational total() const;
    Rational total_initial() const;

    // Final charges recomputed from initial + log alone.
    std::map<Element, Rational> replay() const;
};

// charge(v) = deg(v) - 4, charge(f) = size(f) - 4.  Requires a connected
// cellular embedding; the total then equals -4 * euler_characteristic.
ChargeLedger initial_charges(const EmbeddedGraph &eg);

// Applies R1, R2, R3 once each, logging every transfer:
//   R1  every 3-face gets 1/3 from the face across each boundary edge;
//   R2  every 3-vertex gets 1/2 from two incident faces when some incident
//       face has size <= 4 (the canonically smallest such face is the
//       designated one and pays nothing), else 1/3 from all three;
//   R3  every 5+-vertex gives 1/6 to each incident 4+-face and, for each
//       incident 3-face, 1/6 through it to the face on the other side of
//       the opposite edge.
ChargeLedger run_discharging(const EmbeddedGraph &eg, ChargeLedger ledger);

struct ChargeReport {
    std::vector<Element> negatives;
    std::vector<Element> positives;
    Rational total_before;
    Rational total_after;
    std::map<Element, std::vector<Transfer>> history; // for negatives and positives
};

ChargeReport final_charge_report(const ChargeLedger &ledger);

struct AuditWitness {
    std::vector<Vertex> vertices;
    std::vector<int> faces;
    std::vector<Edge> edges;
    std::string note;
};

struct AuditViolation {
    std::string item; // "i" .. "x"
    std::string description;
    AuditWitness witness;
};

struct AuditReport {
    std::vector<AuditViolation> violations;
    bool clean() const { return violations.empty(); }
};

// Checks the ten structural properties a minimal counterexample would have
// to satisfy and reports a witness for every violated one.
AuditReport audit_lemma_properties(const EmbeddedGraph &eg);

// Exact verification of the final-charge case analysis:
//   d >= 7:  2d/3 - 4 - t/6 >= 7d/12 - 4 > 0 for all 0 <= t <= floor(d/2)
//   d = 6:   2 - 3*(1/2) > 0
//   d = 5:   the three branch bounds are >= 0 (one of them strictly)
// Enumerates 7 <= d <= d_max; requires d_max >= 7.
bool case_inequality_check(int d_max);

// The individual expressions, exposed for the exact spot checks.
Rational case5_value(int d, int t); // 2d/3 - 4 - t/6
Rational case5_bound(int d);        // 7d/12 - 4
Rational case4_value();             // 2 - 3*(1/2)
std::vector<Rational> case3_values();

} // namespace torodec
