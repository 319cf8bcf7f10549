#include "torodec/io.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

namespace torodec {

namespace {

Vertex label_index(const std::vector<std::string> &labels, const std::string &label) {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw DomainError("unknown vertex label '" + label + "'");
    return static_cast<Vertex>(it - labels.begin());
}

} // namespace

Vertex LabeledGraph::index_of(const std::string &label) const {
    return label_index(labels, label);
}

Vertex LabeledEmbeddedGraph::index_of(const std::string &label) const {
    return label_index(labels, label);
}

namespace {

std::string scalar_label(const nlohmann::json &j) {
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    throw ParseError("vertex labels must be strings or integers");
}

} // namespace

LabeledEmbeddedGraph parse_egf(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("rotation"))
        throw ParseError("EGF document needs \"vertices\" and \"rotation\"");

    LabeledEmbeddedGraph out;
    std::unordered_map<std::string, Vertex> index;
    for (const auto &v : doc["vertices"]) {
        std::string label = scalar_label(v);
        if (index.count(label))
            throw ParseError("duplicate vertex label '" + label + "'");
        index[label] = static_cast<Vertex>(out.labels.size());
        out.labels.push_back(label);
    }

    Graph g;
    for (Vertex v = 0; v < static_cast<Vertex>(out.labels.size()); ++v)
        g.add_vertex(v);

    std::unordered_map<Vertex, std::vector<Vertex>> rotation;
    const auto &rot = doc["rotation"];
    if (!rot.is_object())
        throw ParseError("\"rotation\" must be an object");
    for (const auto &[label, list] : rot.items()) {
        auto it = index.find(label);
        if (it == index.end())
            throw ParseError("rotation given for unknown vertex '" + label + "'");
        std::vector<Vertex> order;
        for (const auto &n : list) {
            std::string nl = scalar_label(n);
            auto nit = index.find(nl);
            if (nit == index.end())
                throw ParseError("vertex '" + label + "' lists unknown neighbor '" + nl + "'");
            order.push_back(nit->second);
        }
        rotation[it->second] = std::move(order);
    }
    for (Vertex v = 0; v < static_cast<Vertex>(out.labels.size()); ++v)
        rotation.try_emplace(v);

    // adjacency comes from the rotation lists and must be symmetric
    for (Vertex v = 0; v < static_cast<Vertex>(out.labels.size()); ++v) {
        std::set<Vertex> seen;
        for (Vertex u : rotation[v]) {
            if (u == v)
                throw ParseError("vertex '" + out.labels[v] + "' lists itself as a neighbor");
            if (!seen.insert(u).second)
                throw ParseError("rotation of vertex '" + out.labels[v] +
                                 "' is not a permutation of its neighbors (duplicate '" +
                                 out.labels[u] + "')");
        }
    }
    for (Vertex v = 0; v < static_cast<Vertex>(out.labels.size()); ++v) {
        for (Vertex u : rotation[v]) {
            const auto &back = rotation[u];
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw ParseError("rotation of vertex '" + out.labels[u] +
                                 "' is not a permutation of its neighbors ('" + out.labels[v] +
                                 "' lists it but not vice versa)");
            if (v < u)
                g.add_edge(v, u);
        }
    }

    out.eg = EmbeddedGraph(std::move(g), std::move(rotation));
    return out;
}

std::string emit_egf(const LabeledEmbeddedGraph &leg) {
    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (Vertex v : leg.eg.graph().vertices())
        doc["vertices"].push_back(leg.label(v));
    doc["rotation"] = nlohmann::json::object();
    for (Vertex v : leg.eg.graph().vertices()) {
        nlohmann::json order = nlohmann::json::array();
        for (Vertex u : leg.eg.rotation(v))
            order.push_back(leg.label(u));
        doc["rotation"][leg.label(v)] = std::move(order);
    }
    return doc.dump(2);
}

LabeledGraph parse_graph6(const std::string &line) {
    std::string s = line;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0)
        s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.pop_back();
    if (s.empty())
        throw ParseError("empty graph6 string");

    std::size_t pos = 0;
    auto next_byte = [&]() -> int {
        if (pos >= s.size())
            throw ParseError("truncated graph6 string");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126)
            throw ParseError("invalid graph6 byte");
        return c - 63;
    };

    long long n;
    int first = next_byte();
    if (first < 63) {
        n = first;
    } else {
        int a = next_byte();
        if (a == 63)
            throw ParseError("graph6 order too large");
        long long v = a;
        for (int i = 0; i < 2; ++i)
            v = (v << 6) | next_byte();
        n = v;
    }
    if (n > 100000)
        throw ParseError("graph6 order too large");

    Graph g;
    for (Vertex v = 0; v < n; ++v)
        g.add_vertex(v);

    int bits = 0, bit_count = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if (bit_count == 0) {
                bits = next_byte();
                bit_count = 6;
            }
            --bit_count;
            if ((bits >> bit_count) & 1)
                g.add_edge(i, j);
        }
    }

    LabeledGraph out{std::move(g), {}};
    for (Vertex v = 0; v < n; ++v)
        out.labels.push_back(std::to_string(v));
    return out;
}

namespace {

void require_torus_dims(int m, int n) {
    if (m < 3 || n < 3)
        throw DomainError("torus generators require m, n >= 3");
}

LabeledEmbeddedGraph assemble(Graph g, std::unordered_map<Vertex, std::vector<Vertex>> rot,
                              std::vector<std::string> labels) {
    LabeledEmbeddedGraph out;
    out.eg = EmbeddedGraph(std::move(g), std::move(rot));
    out.labels = std::move(labels);
    return out;
}

} // namespace

LabeledEmbeddedGraph gen_torus_grid(int m, int n) {
    require_torus_dims(m, n);
    auto id = [&](int i, int j) {
        return ((i % m + m) % m) * n + ((j % n + n) % n);
    };
    Graph g;
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            g.add_vertex(id(i, j));
            labels.push_back(std::to_string(i) + "," + std::to_string(j));
        }
    std::unordered_map<Vertex, std::vector<Vertex>> rot;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            Vertex v = id(i, j);
            Vertex north = id(i - 1, j), east = id(i, j + 1);
            Vertex south = id(i + 1, j), west = id(i, j - 1);
            rot[v] = {north, east, south, west};
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (!g.has_edge(id(i, j), id(i + 1, j)))
                g.add_edge(id(i, j), id(i + 1, j));
            if (!g.has_edge(id(i, j), id(i, j + 1)))
                g.add_edge(id(i, j), id(i, j + 1));
        }
    return assemble(std::move(g), std::move(rot), std::move(labels));
}

LabeledEmbeddedGraph gen_honeycomb_torus(int m, int n) {
    require_torus_dims(m, n);
    auto a = [&](int i, int j) {
        return 2 * (((i % m + m) % m) * n + ((j % n + n) % n));
    };
    auto b = [&](int i, int j) { return a(i, j) + 1; };
    Graph g;
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            g.add_vertex(a(i, j));
            g.add_vertex(b(i, j));
            labels.push_back("a" + std::to_string(i) + "," + std::to_string(j));
            labels.push_back("b" + std::to_string(i) + "," + std::to_string(j));
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            g.add_edge(a(i, j), b(i, j));
            g.add_edge(b(i, j), a(i + 1, j));
            g.add_edge(b(i, j), a(i, j + 1));
        }
    std::unordered_map<Vertex, std::vector<Vertex>> rot;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            rot[a(i, j)] = {b(i, j), b(i - 1, j), b(i, j - 1)};
            rot[b(i, j)] = {a(i, j), a(i + 1, j), a(i, j + 1)};
        }
    return assemble(std::move(g), std::move(rot), std::move(labels));
}

LabeledEmbeddedGraph gen_cycle(int n) {
    if (n < 3)
        throw DomainError("cycle generator requires n >= 3");
    Graph g;
    std::vector<std::string> labels;
    for (Vertex v = 0; v < n; ++v) {
        g.add_vertex(v);
        labels.push_back(std::to_string(v));
    }
    std::unordered_map<Vertex, std::vector<Vertex>> rot;
    for (Vertex v = 0; v < n; ++v) {
        Vertex prev = (v + n - 1) % n, next = (v + 1) % n;
        if (!g.has_edge(v, next))
            g.add_edge(v, next);
        rot[v] = {prev, next};
    }
    return assemble(std::move(g), std::move(rot), std::move(labels));
}

LabeledEmbeddedGraph gen_complete(int n) {
    if (n < 1)
        throw DomainError("complete generator requires n >= 1");
    Graph g;
    std::vector<std::string> labels;
    for (Vertex v = 0; v < n; ++v) {
        g.add_vertex(v);
        labels.push_back(std::to_string(v));
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    std::unordered_map<Vertex, std::vector<Vertex>> rot;
    if (n == 4) {
        // sphere embedding: four triangular faces
        rot[0] = {1, 2, 3};
        rot[1] = {2, 0, 3};
        rot[2] = {3, 0, 1};
        rot[3] = {1, 0, 2};
    } else {
        for (Vertex v = 0; v < n; ++v) {
            std::vector<Vertex> order;
            for (Vertex u = 0; u < n; ++u)
                if (u != v)
                    order.push_back(u);
            rot[v] = std::move(order);
        }
    }
    return assemble(std::move(g), std::move(rot), std::move(labels));
}

LabeledEmbeddedGraph gen_random_rotation(int n, int deg, std::uint64_t seed) {
    if (n < 1)
        throw DomainError("random generator requires n >= 1");
    if (deg < 0)
        throw DomainError("random generator requires deg >= 0");
    std::mt19937_64 rng(seed);
    auto pick = [&](std::uint64_t bound) { return static_cast<int>(rng() % bound); };

    Graph g;
    std::vector<std::string> labels;
    for (Vertex v = 0; v < n; ++v) {
        g.add_vertex(v);
        labels.push_back(std::to_string(v));
    }
    // random attachment tree keeps the graph connected
    for (Vertex v = 1; v < n; ++v)
        g.add_edge(v, pick(v));

    std::size_t target = std::min<std::size_t>(
        static_cast<std::size_t>(n) * deg / 2,
        static_cast<std::size_t>(n) * (n - 1) / 2);
    int attempts = 0;
    while (g.num_edges() < target && attempts < 50 * n + 100) {
        Vertex u = pick(n), v = pick(n);
        ++attempts;
        if (u == v || g.has_edge(u, v))
            continue;
        g.add_edge(u, v);
    }

    std::unordered_map<Vertex, std::vector<Vertex>> rot;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> order = g.neighbors(v);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[pick(i)]);
        rot[v] = std::move(order);
    }
    return assemble(std::move(g), std::move(rot), std::move(labels));
}

namespace {

std::string quoted(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string dot_graph(const LabeledEmbeddedGraph &leg) {
    std::ostringstream out;
    out << "graph {\n";
    for (Vertex v : leg.eg.graph().vertices())
        out << "  " << quoted(leg.label(v)) << ";\n";
    for (auto [u, v] : leg.eg.graph().edges())
        out << "  " << quoted(leg.label(u)) << " -- " << quoted(leg.label(v)) << ";\n";
    out << "}\n";
    return out.str();
}

std::string dot_decomposition(const LabeledEmbeddedGraph &leg, const Decomposition &dec) {
    std::ostringstream out;
    out << "digraph {\n";
    for (Vertex v : leg.eg.graph().vertices())
        out << "  " << quoted(leg.label(v)) << ";\n";
    for (auto [u, v] : dec.h_edges)
        out << "  " << quoted(leg.label(u)) << " -> " << quoted(leg.label(v))
            << " [dir=none, penwidth=2.5];\n";
    for (auto [t, h] : dec.orientation.arcs())
        out << "  " << quoted(leg.label(t)) << " -> " << quoted(leg.label(h)) << ";\n";
    out << "}\n";
    return out.str();
}

std::string dot_witness(const LabeledGraph &lg, const std::vector<Edge> &highlight) {
    std::set<Edge> hot(highlight.begin(), highlight.end());
    std::ostringstream out;
    out << "graph {\n";
    for (Vertex v : lg.graph.vertices())
        out << "  " << quoted(lg.label(v)) << ";\n";
    for (auto e : lg.graph.edges()) {
        out << "  " << quoted(lg.label(e.first)) << " -- " << quoted(lg.label(e.second));
        if (hot.count(e))
            out << " [color=red, penwidth=2.5]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace torodec
