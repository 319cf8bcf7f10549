// Command line front end: parses EGF/graph6 inputs, runs the library
// operations, and prints a single JSON document on standard output.
// Exit codes: 0 success, 1 I/O or parse error, 2 domain error (the result
// JSON still describes what went wrong).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "torodec/decomposition.hpp"
#include "torodec/discharge.hpp"
#include "torodec/io.hpp"
#include "torodec/pattern.hpp"
#include "torodec/reductions.hpp"

using json = nlohmann::json;
using namespace torodec;

namespace {

std::string read_text(const std::string &path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw ParseError("cannot open output file '" + path + "'");
    out << text << "\n";
}

bool looks_like_egf(const std::string &text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        return c == '{';
    }
    return false;
}

LabeledEmbeddedGraph load_embedded(const std::string &path, const std::string &command) {
    std::string text = read_text(path);
    if (!looks_like_egf(text))
        throw ParseError("the '" + command +
                         "' command needs an embedding; give it EGF JSON, not graph6 "
                         "(silently inventing a rotation would corrupt face-based results)");
    return parse_egf(text);
}

LabeledGraph load_abstract(const std::string &path) {
    std::string text = read_text(path);
    if (looks_like_egf(text))
        return parse_egf(text).abstract();
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty())
            return parse_graph6(line);
    }
    throw ParseError("empty input");
}

json edge_json(const LabeledGraph &lg, Edge e) {
    return json::array({lg.label(e.first), lg.label(e.second)});
}

json decomposition_json(const LabeledGraph &lg, const Decomposition &dec,
                        const std::string &method) {
    json h = json::array(), arcs = json::array();
    for (auto e : dec.h_edges)
        h.push_back(edge_json(lg, e));
    for (auto [t, hd] : dec.orientation.arcs())
        arcs.push_back(json::array({lg.label(t), lg.label(hd)}));
    return json{{"d", dec.d}, {"h", dec.h}, {"method", method}, {"H", h}, {"arcs", arcs}};
}

json witness_json(const LabeledGraph &lg, const MatchWitness &w, int config_index) {
    json mapping = json::object();
    for (auto [pv, hv] : w.mapping)
        mapping[std::to_string(pv)] = lg.label(hv);
    return json{{"configuration", config_index},
                {"pattern", w.pattern},
                {"mapping", mapping}};
}

std::string element_label(const LabeledGraph &lg, Element e) {
    if (e.kind == Element::Kind::vertex)
        return "v:" + lg.label(e.id);
    return "f:" + std::to_string(e.id);
}

json faces_json(const LabeledGraph &lg, const FaceSet &fs) {
    json out = json::array();
    for (int i = 0; i < fs.num_faces(); ++i) {
        json boundary = json::array();
        for (Vertex v : fs.face(i).vertex_walk())
            boundary.push_back(lg.label(v));
        out.push_back(json{{"id", i}, {"size", fs.face(i).size()}, {"boundary", boundary}});
    }
    return out;
}

struct Options {
    std::string input;
    std::string output;
    std::string dot;
    std::string each; // directory batch mode: one output file per input file
    int d = 2, h = 1, i = 3, j = 4, m = 3, n = 3, deg = 3;
    std::uint64_t seed = 0;
    std::string method = "constructive";
    std::string family;
    std::string decomposition_path;
    bool trace = false;
    bool dump = false;
};

int cmd_faces(const Options &opt) {
    LabeledEmbeddedGraph leg = load_embedded(opt.input, "faces");
    FaceSet fs = face_trace(leg.eg);
    LabeledGraph lg = leg.abstract();
    json doc{{"vertices", leg.eg.graph().num_vertices()},
             {"edges", leg.eg.graph().num_edges()},
             {"faces", faces_json(lg, fs)}};
    if (leg.eg.graph().is_connected())
        doc["euler_characteristic"] = euler_characteristic(leg.eg);
    else
        doc["euler_characteristic"] = nullptr;
    if (!opt.dot.empty())
        write_text(opt.dot, dot_graph(leg));
    write_text(opt.output, doc.dump(2));
    return 0;
}

int cmd_degeneracy(const Options &opt) {
    LabeledGraph lg = load_abstract(opt.input);
    auto [d, order] = degeneracy(lg.graph);
    json ord = json::array();
    for (Vertex v : order.order)
        ord.push_back(lg.label(v));
    write_text(opt.output, json{{"degeneracy", d}, {"order", ord}}.dump(2));
    return 0;
}

int cmd_decompose(const Options &opt) {
    std::optional<Decomposition> dec;
    LabeledGraph lg;
    if (opt.method == "exact") {
        lg = load_abstract(opt.input);
        dec = solve_exact(lg.graph, opt.d, opt.h);
    } else if (opt.method == "constructive") {
        if (opt.d != 2 || opt.h != 1)
            throw DomainError("the constructive method is specific to d=2, h=1");
        LabeledEmbeddedGraph leg = load_embedded(opt.input, "decompose --method constructive");
        lg = leg.abstract();
        std::vector<TraceEntry> trace;
        ConstructiveOptions options;
        if (opt.trace)
            options.trace = &trace;
        try {
            dec = solve_constructive(leg.eg, options);
        } catch (const ForbiddenConfigurationError &e) {
            json doc{{"error", "forbidden configuration"},
                     {"witness", witness_json(lg, *e.check.witness, e.check.config_index)}};
            write_text(opt.output, doc.dump(2));
            return 2;
        } catch (const ReductionStuckError &e) {
            json rest = json::array();
            for (auto edge : e.remaining.edges())
                rest.push_back(edge_json(lg, edge));
            write_text(opt.output,
                       json{{"error", "stuck"}, {"remaining_edges", rest}}.dump(2));
            return 2;
        }
        if (opt.trace)
            for (const TraceEntry &entry : trace) {
                json slots = json::array();
                for (Vertex v : entry.slots)
                    slots.push_back(lg.label(v));
                std::cerr << json{{"rule", to_string(entry.rule)},
                                  {"variant", entry.variant},
                                  {"X", slots}}
                                 .dump()
                          << "\n";
            }
        if (dec && !opt.dot.empty())
            write_text(opt.dot, dot_decomposition(leg, *dec));
    } else {
        throw ParseError("unknown method '" + opt.method + "'");
    }

    if (!dec) {
        write_text(opt.output,
                   json{{"decomposable", false}, {"d", opt.d}, {"h", opt.h}}.dump(2));
        return 2;
    }
    if (opt.method == "exact" && !opt.dot.empty()) {
        std::unordered_map<Vertex, std::vector<Vertex>> rot;
        for (Vertex v : lg.graph.vertices())
            rot[v] = lg.graph.neighbors(v);
        LabeledEmbeddedGraph shim{EmbeddedGraph(lg.graph, rot), lg.labels};
        write_text(opt.dot, dot_decomposition(shim, *dec));
    }
    json doc = decomposition_json(lg, *dec, opt.method);
    doc["decomposable"] = true;
    write_text(opt.output, doc.dump(2));
    return 0;
}

int cmd_verify(const Options &opt) {
    LabeledGraph lg = load_abstract(opt.input);
    json dj;
    try {
        dj = json::parse(read_text(opt.decomposition_path));
    } catch (const json::exception &e) {
        throw ParseError(std::string("invalid decomposition JSON: ") + e.what());
    }
    Decomposition dec;
    dec.d = opt.d;
    dec.h = opt.h;
    try {
        for (const auto &pair : dj.at("H"))
            dec.h_edges.push_back(make_edge(lg.index_of(pair.at(0).get<std::string>()),
                                            lg.index_of(pair.at(1).get<std::string>())));
        for (const auto &pair : dj.at("arcs"))
            dec.orientation.orient(lg.index_of(pair.at(0).get<std::string>()),
                                   lg.index_of(pair.at(1).get<std::string>()));
    } catch (const json::exception &e) {
        throw ParseError(std::string("decomposition JSON needs H and arcs arrays: ") + e.what());
    }
    VerifyResult result = verify_decomposition(lg.graph, dec);
    json violations = json::array();
    for (const Violation &v : result.violations)
        violations.push_back(json{{"clause", v.clause}, {"detail", v.detail}});
    write_text(opt.output, json{{"valid", result.ok}, {"violations", violations}}.dump(2));
    return result.ok ? 0 : 2;
}

int cmd_detect(const Options &opt) {
    LabeledGraph lg = load_abstract(opt.input);
    ForbiddenCheck check = is_forbidden_free(lg.graph);
    json doc{{"forbidden_free", check.forbidden_free}};
    if (!check.forbidden_free) {
        doc["witness"] = witness_json(lg, *check.witness, check.config_index);
        if (!opt.dot.empty()) {
            std::vector<Edge> hot;
            const Pattern &p = forbidden_catalog()[check.config_index];
            for (auto [a, b] : p.skeleton.edges())
                hot.push_back(make_edge(check.witness->image(a), check.witness->image(b)));
            write_text(opt.dot, dot_witness(lg, hot));
        }
    } else {
        doc["witness"] = nullptr;
        if (!opt.dot.empty())
            write_text(opt.dot, dot_witness(lg, {}));
    }
    write_text(opt.output, doc.dump(2));
    return 0;
}

int cmd_member(const Options &opt) {
    LabeledGraph lg = load_abstract(opt.input);
    bool member = in_class_tij(lg.graph, opt.i, opt.j);
    write_text(opt.output, json{{"member", member}, {"i", opt.i}, {"j", opt.j}}.dump(2));
    return 0;
}

int cmd_discharge(const Options &opt) {
    LabeledEmbeddedGraph leg = load_embedded(opt.input, "discharge");
    LabeledGraph lg = leg.abstract();
    ChargeLedger ledger = run_discharging(leg.eg, initial_charges(leg.eg));
    ChargeReport report = final_charge_report(ledger);

    json initial = json::object(), final_charges = json::object();
    for (const auto &[e, c] : ledger.initial)
        initial[element_label(lg, e)] = c.as_sixths();
    for (const auto &[e, c] : ledger.charge)
        final_charges[element_label(lg, e)] = c.as_sixths();
    json transfers = json::array();
    for (const Transfer &t : ledger.log)
        transfers.push_back(json{{"rule", t.rule},
                                 {"from", element_label(lg, t.from)},
                                 {"to", element_label(lg, t.to)},
                                 {"amount", t.amount.as_sixths()},
                                 {"note", t.note}});
    json negatives = json::array(), positives = json::array();
    for (Element e : report.negatives)
        negatives.push_back(element_label(lg, e));
    for (Element e : report.positives)
        positives.push_back(element_label(lg, e));

    json doc{{"initial", initial},
             {"final", final_charges},
             {"transfers", transfers},
             {"negatives", negatives},
             {"positives", positives},
             {"total_initial", ledger.total_initial().as_sixths()},
             {"total_final", ledger.total().as_sixths()},
             {"notes", ledger.notes},
             {"faces", faces_json(lg, face_trace(leg.eg))}};
    write_text(opt.output, doc.dump(2));
    return 0;
}

int cmd_audit(const Options &opt) {
    LabeledEmbeddedGraph leg = load_embedded(opt.input, "audit");
    LabeledGraph lg = leg.abstract();
    AuditReport report = audit_lemma_properties(leg.eg);
    json violations = json::array();
    for (const AuditViolation &v : report.violations) {
        json vertices = json::array(), edges = json::array();
        for (Vertex x : v.witness.vertices)
            vertices.push_back(lg.label(x));
        for (auto e : v.witness.edges)
            edges.push_back(edge_json(lg, e));
        violations.push_back(json{{"item", v.item},
                                  {"description", v.description},
                                  {"witness", json{{"vertices", vertices},
                                                   {"faces", v.witness.faces},
                                                   {"edges", edges},
                                                   {"note", v.witness.note}}}});
    }
    json doc{{"clean", report.clean()},
             {"violations", violations},
             {"faces", faces_json(lg, face_trace(leg.eg))}};
    write_text(opt.output, doc.dump(2));
    return 0;
}

int cmd_gen(const Options &opt) {
    LabeledEmbeddedGraph leg;
    if (opt.family == "torus_grid")
        leg = gen_torus_grid(opt.m, opt.n);
    else if (opt.family == "honeycomb_torus")
        leg = gen_honeycomb_torus(opt.m, opt.n);
    else if (opt.family == "cycle")
        leg = gen_cycle(opt.n);
    else if (opt.family == "complete")
        leg = gen_complete(opt.n);
    else if (opt.family == "random_rotation")
        leg = gen_random_rotation(opt.n, opt.deg, opt.seed);
    else
        throw ParseError("unknown family '" + opt.family + "'");

    json doc = json::parse(emit_egf(leg));
    doc["meta"] = json{{"family", opt.family}};
    if (opt.family == "random_rotation") {
        doc["meta"]["seed"] = opt.seed;
        doc["meta"]["deg"] = opt.deg;
    }
    write_text(opt.output, doc.dump(2));
    return 0;
}

int cmd_catalog(const Options &opt) {
    json entries = json::array();
    auto dump_pattern = [&](const Pattern &p, const std::string &kind) {
        json edges = json::array();
        for (auto [u, v] : p.skeleton.edges())
            edges.push_back(json::array({u, v}));
        json entry{{"name", p.name},
                   {"kind", kind},
                   {"vertices", p.skeleton.num_vertices()},
                   {"edges", edges}};
        if (opt.dump) {
            json constraints = json::object();
            for (Vertex v : p.skeleton.vertices()) {
                DegreeConstraint c = p.constraint(v);
                if (c.kind == DegreeConstraint::Kind::exact)
                    constraints[std::to_string(v)] = c.k;
                else if (c.kind == DegreeConstraint::Kind::at_least)
                    constraints[std::to_string(v)] = ">=" + std::to_string(c.k);
            }
            entry["degree_constraints"] = constraints;
        }
        entries.push_back(entry);
    };
    for (const Pattern &p : forbidden_catalog())
        dump_pattern(p, "forbidden");
    if (opt.dump)
        for (const Pattern &p : reducible_catalog())
            dump_pattern(p, "reducible");
    write_text(opt.output, json{{"configurations", entries}}.dump(2));
    return 0;
}

// Batch mode: run one command over every regular file in a directory,
// writing <file>.out.json next to each input.  Files are processed in
// sorted order; per-file domain and parse errors land in the output file
// instead of aborting the batch.
int run_each(const Options &base, int (*command)(const Options &)) {
    namespace fs = std::filesystem;
    if (!base.dot.empty())
        throw ParseError("--dot cannot be combined with --each");
    std::vector<fs::path> files;
    std::error_code ec;
    for (const auto &entry : fs::directory_iterator(base.each, ec)) {
        if (!entry.is_regular_file())
            continue;
        if (entry.path().string().ends_with(".out.json"))
            continue;
        files.push_back(entry.path());
    }
    if (ec)
        throw ParseError("cannot list directory '" + base.each + "'");
    std::sort(files.begin(), files.end());

    int processed = 0, failed = 0;
    for (const fs::path &file : files) {
        Options opt = base;
        opt.each.clear();
        opt.input = file.string();
        opt.output = file.string() + ".out.json";
        ++processed;
        try {
            if (command(opt) != 0)
                ++failed;
        } catch (const std::exception &e) {
            ++failed;
            write_text(opt.output, json{{"error", e.what()}}.dump(2));
        }
    }
    std::cout << json{{"processed", processed}, {"failed", failed}}.dump(2) << "\n";
    return failed == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"(2,1)-decompositions of embedded graphs: detection, reduction, discharging"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help"); // leave --h free for the degree bound
    Options opt;

    auto add_io = [&](CLI::App *sub) {
        sub->set_help_flag("--help", "print help");
        sub->add_option("--input", opt.input, "input file (default: stdin)");
        sub->add_option("--output", opt.output, "output file (default: stdout)");
    };
    auto add_each = [&](CLI::App *sub) {
        sub->add_option("--each", opt.each,
                        "run on every file in a directory, writing <file>.out.json");
    };

    auto *faces = app.add_subcommand("faces", "trace faces of an embedded graph");
    add_io(faces);
    add_each(faces);
    faces->add_option("--dot", opt.dot, "write a DOT drawing");

    auto *degener = app.add_subcommand("degeneracy", "degeneracy and peeling order");
    add_io(degener);
    add_each(degener);

    auto *decompose = app.add_subcommand("decompose", "find a (d,h)-decomposition");
    add_io(decompose);
    add_each(decompose);
    decompose->add_option("--d", opt.d, "out-degree bound")->required();
    decompose->add_option("--h", opt.h, "H max degree")->required();
    decompose->add_option("--method", opt.method, "exact | constructive")->required();
    decompose->add_flag("--trace", opt.trace, "emit the reduction sequence as JSON lines");
    decompose->add_option("--dot", opt.dot, "write a DOT drawing of the decomposition");

    auto *verify = app.add_subcommand("verify", "check a decomposition against its graph");
    add_io(verify);
    verify->add_option("--d", opt.d, "out-degree bound")->required();
    verify->add_option("--h", opt.h, "H max degree")->required();
    verify->add_option("--decomposition", opt.decomposition_path, "decomposition JSON file")
        ->required();

    auto *detect = app.add_subcommand("detect", "search for forbidden configurations");
    add_io(detect);
    add_each(detect);
    detect->add_option("--dot", opt.dot, "write a DOT drawing with the witness highlighted");

    auto *member = app.add_subcommand("member", "membership in the class without i- and j-cycles");
    add_io(member);
    add_each(member);
    member->add_option("--i", opt.i, "first excluded cycle length")->required();
    member->add_option("--j", opt.j, "second excluded cycle length")->required();

    auto *discharge = app.add_subcommand("discharge", "run the discharging rules");
    add_io(discharge);
    add_each(discharge);

    auto *audit = app.add_subcommand("audit", "check the minimal-counterexample properties");
    add_io(audit);
    add_each(audit);

    auto *gen = app.add_subcommand("gen", "generate a test family member");
    add_io(gen);
    gen->add_option("--family", opt.family,
                    "torus_grid | honeycomb_torus | cycle | complete | random_rotation")
        ->required();
    gen->add_option("--m", opt.m, "rows");
    gen->add_option("--n", opt.n, "columns / order");
    gen->add_option("--deg", opt.deg, "target average degree");
    gen->add_option("--seed", opt.seed, "random seed (echoed in output)");

    auto *catalog = app.add_subcommand("catalog", "list the configuration catalogs");
    add_io(catalog);
    catalog->add_flag("--dump", opt.dump, "full skeletons and degree constraints");

    CLI11_PARSE(app, argc, argv);

    try {
        auto dispatch = [&](int (*command)(const Options &)) {
            return opt.each.empty() ? command(opt) : run_each(opt, command);
        };
        if (faces->parsed())
            return dispatch(cmd_faces);
        if (degener->parsed())
            return dispatch(cmd_degeneracy);
        if (decompose->parsed())
            return dispatch(cmd_decompose);
        if (verify->parsed())
            return cmd_verify(opt);
        if (detect->parsed())
            return dispatch(cmd_detect);
        if (member->parsed())
            return dispatch(cmd_member);
        if (discharge->parsed())
            return dispatch(cmd_discharge);
        if (audit->parsed())
            return dispatch(cmd_audit);
        if (gen->parsed())
            return cmd_gen(opt);
        if (catalog->parsed())
            return cmd_catalog(opt);
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
