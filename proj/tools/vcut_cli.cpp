// vcut: batch front end for the vertex-cut library.
//
// Machine-readable JSON goes to stdout; --pretty swaps it for a short human
// summary. connectivity and query answer in one line of text and take --json.
// Library errors end with exit code 2, failed verification with exit code 1.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vcut/edge_list.hpp"
#include "vcut/errors.hpp"
#include "vcut/flow.hpp"
#include "vcut/index.hpp"
#include "vcut/oracle.hpp"
#include "vcut/sparsify.hpp"
#include "vcut/structure.hpp"

using json = nlohmann::json;
using namespace vcut;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalFlags {
    bool pretty = false;
    std::uint64_t seed = 0;
};

/// Maps between dense ids and the names used in the input file.
class Names {
public:
    explicit Names(std::vector<std::string> labels) : labels_(std::move(labels)) {}

    [[nodiscard]] std::string name(Vertex v) const { return v < labels_.size() ? labels_[v] : std::to_string(v); }

    [[nodiscard]] Vertex id(const std::string& label, std::size_t n) const {
        if (!labels_.empty()) {
            const auto it = std::find(labels_.begin(), labels_.end(), label);
            if (it == labels_.end()) throw Usage("unknown vertex '" + label + "'");
            return static_cast<Vertex>(it - labels_.begin());
        }
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(label, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != label.size() || v >= n) throw Usage("unknown vertex '" + label + "'");
        return static_cast<Vertex>(v);
    }

    [[nodiscard]] VertexSet ids(const std::vector<std::string>& labels, std::size_t n) const {
        std::vector<Vertex> out;
        for (const auto& l : labels) out.push_back(id(l, n));
        return VertexSet::from_unsorted(std::move(out));
    }

    [[nodiscard]] json to_json(const VertexSet& s) const {
        json a = json::array();
        for (Vertex v : s) a.push_back(name(v));
        return a;
    }

    [[nodiscard]] std::string bracketed(const VertexSet& s) const {
        std::string out = "[";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ',';
            out += name(s[i]);
        }
        return out + "]";
    }

private:
    std::vector<std::string> labels_;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Usage("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Usage("cannot write " + path);
    out << text;
}

// ---------------------------------------------------------------- sparsify

struct SparsifyArgs {
    std::string input;
    std::size_t k = 0;
    std::string output;
};

int run_sparsify(const SparsifyArgs& a, const GlobalFlags& flags) {
    const auto lg = load_edge_list(a.input);
    const Graph sparse = nagamochi_ibaraki(lg.graph, a.k);
    std::ostringstream edges;
    write_edge_list(edges, sparse, lg.labels);
    if (a.output.empty()) {
        std::cout << edges.str();
        return 0;
    }
    write_text(a.output, edges.str());
    if (flags.pretty) {
        std::cout << "kept " << sparse.m() << " of " << lg.graph.m() << " edges (bound " << (a.k + 1) * sparse.n()
                  << ")\n";
    } else {
        emit({{"n", sparse.n()}, {"k", a.k}, {"edges_in", lg.graph.m()}, {"edges_out", sparse.m()},
              {"output", a.output}});
    }
    return 0;
}

// ------------------------------------------------------------ connectivity

struct ConnectivityArgs {
    std::string input;
    bool json_out = false;
};

int run_connectivity(const ConnectivityArgs& a, const GlobalFlags&) {
    const auto lg = load_edge_list(a.input);
    const Names names(lg.labels);
    const auto c = vertex_connectivity(lg.graph);
    if (a.json_out) {
        emit({{"kappa", c.kappa}, {"cut", c.witness ? names.to_json(*c.witness) : json(nullptr)}});
    } else {
        std::cout << "kappa=" << c.kappa;
        if (c.witness) std::cout << " cut=" << names.bracketed(*c.witness);
        std::cout << '\n';
    }
    return 0;
}

// ------------------------------------------------------------- build-index

struct BuildArgs {
    std::string input;
    std::string mode = "exact";
    std::string output;
};

int run_build_index(const BuildArgs& a, const GlobalFlags& flags) {
    const auto lg = load_edge_list(a.input);
    const BuildMode mode = a.mode == "randomized" ? BuildMode::randomized : BuildMode::exact;
    SmallCutIndex ix = build_index(lg.graph, mode, flags.seed);
    ix.labels = lg.labels;
    const std::string text = serialize(ix);
    if (a.output.empty()) {
        std::cout << text << '\n';
        return 0;
    }
    write_text(a.output, text + '\n');
    const std::size_t entries = entry_count(ix);
    if (flags.pretty) {
        std::cout << "n=" << ix.n << " kappa=" << ix.kappa << " entries=" << entries << " (bound "
                  << kSpaceConstant * ix.kappa * ix.n << ") written to " << a.output << '\n';
    } else {
        emit({{"n", ix.n}, {"kappa", ix.kappa}, {"t", ix.t}, {"mode", a.mode}, {"seed", flags.seed},
              {"entries", entries}, {"entry_bound", kSpaceConstant * ix.kappa * ix.n}, {"output", a.output}});
    }
    return 0;
}

// ------------------------------------------------------------------- query

struct QueryArgs {
    std::string index;
    std::string u;
    std::string v;
    bool json_out = false;
};

int run_query(const QueryArgs& a, const GlobalFlags&) {
    const SmallCutIndex ix = deserialize(read_file(a.index));
    const Names names(ix.labels);
    const Vertex u = names.id(a.u, ix.n);
    const Vertex v = names.id(a.v, ix.n);
    if (u == v) throw Usage("query needs two distinct vertices");
    const QueryResult r = query(ix, u, v);

    json j{{"kappa", ix.kappa}, {"case", std::string(case_name(r.decided_by))}};
    std::ostringstream line;
    if (const auto* s = std::get_if<Separated>(&r.verdict)) {
        j["verdict"] = "separated";
        j["cut"] = names.to_json(s->cut);
        line << "separated kappa=" << ix.kappa << " cut=" << names.bracketed(s->cut);
    } else if (const auto* m = std::get_if<MixedSeparated>(&r.verdict)) {
        j["verdict"] = "separated";
        j["edge"] = {names.name(m->edge.first), names.name(m->edge.second)};
        j["cut"] = names.to_json(m->vertices);
        line << "separated kappa=" << ix.kappa << " edge=[" << names.name(m->edge.first) << ','
             << names.name(m->edge.second) << "] cut=" << names.bracketed(m->vertices);
    } else {
        j["verdict"] = "connected";
        line << "connected kappa>=" << ix.kappa + 1;
    }
    if (a.json_out)
        emit(j);
    else
        std::cout << line.str() << '\n';
    return 0;
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
    std::string input;
    std::vector<std::string> cut_a;
    std::vector<std::string> cut_b;
};

json wheel_json(const Names& names, const Wheel& wh) {
    json spokes = json::array();
    json sectors = json::array();
    for (const auto& s : wh.spokes) spokes.push_back(names.to_json(s));
    for (const auto& s : wh.sectors) sectors.push_back(names.to_json(s));
    return {{"center", names.to_json(wh.center)}, {"spokes", spokes}, {"sectors", sectors}};
}

int run_classify(const ClassifyArgs& a, const GlobalFlags& flags) {
    const auto lg = load_edge_list(a.input);
    const Graph& g = lg.graph;
    const Names names(lg.labels);
    const std::size_t kappa = vertex_connectivity(g).kappa;
    const VertexSet u = names.ids(a.cut_a, g.n());
    const VertexSet w = names.ids(a.cut_b, g.n());
    for (const VertexSet* c : {&u, &w})
        if (c->size() != kappa || !is_cut(g, *c))
            throw Usage(names.bracketed(*c) + " is not a minimum cut (kappa=" + std::to_string(kappa) + ")");

    const CutRelation rel = classify_pair(g, u, w, kappa);
    const auto pu = components_after_removal(g, u);
    const auto pw = components_after_removal(g, w);
    json witness;
    if (const auto* l = std::get_if<LaminarRelation>(&rel)) {
        witness = {{"host_side", names.to_json(pu.sides()[l->host_side])},
                   {"guest_side", names.to_json(pw.sides()[l->guest_side])}};
    } else if (const auto* wr = std::get_if<WheelRelation>(&rel)) {
        witness = wheel_json(names, wr->wheel);
    } else if (const auto* cm = std::get_if<CrossingMatchingRelation>(&rel)) {
        witness = {{"first_side", names.to_json(pu.sides()[cm->first_side])},
                   {"second_side", names.to_json(pw.sides()[cm->second_side])},
                   {"pivot", names.to_json(cm->pivot)},
                   {"matched", names.to_json(cm->matched)}};
    } else {
        const auto& s = std::get<SmallRelation>(rel);
        const auto& large = s.first_is_small ? pu : pw;
        witness = {{"small_cut", s.first_is_small ? "a" : "b"},
                   {"large_side", names.to_json(large.sides()[s.large_side])},
                   {"small_part", names.to_json(s.small_part)}};
    }
    const bool verified = verify_relation(g, u, w, kappa, rel);
    if (flags.pretty) {
        std::cout << names.bracketed(w) << " is " << relation_name(rel) << " with respect to " << names.bracketed(u)
                  << (verified ? "" : " (witness FAILED)") << '\n';
    } else {
        emit({{"kappa", kappa},
              {"cut_a", names.to_json(u)},
              {"cut_b", names.to_json(w)},
              {"relation", std::string(relation_name(rel))},
              {"witness", witness},
              {"verified", verified}});
    }
    return verified ? 0 : 1;
}

// ---------------------------------------------------------- enumerate-cuts

struct EnumerateArgs {
    std::string input;
    bool ignore_limits = false;
};

int run_enumerate(const EnumerateArgs& a, const GlobalFlags& flags) {
    const auto lg = load_edge_list(a.input);
    const Names names(lg.labels);
    OracleLimits limits;
    limits.ignore_limits = a.ignore_limits;
    const MinCutSet all = enumerate_min_cuts(lg.graph, limits);
    if (flags.pretty) {
        std::cout << "kappa=" << all.kappa << " cuts=" << all.cuts.size() << '\n';
        for (const auto& c : all.cuts) std::cout << "  " << names.bracketed(c) << '\n';
        return 0;
    }
    json cuts = json::array();
    for (const auto& c : all.cuts) cuts.push_back(names.to_json(c));
    emit({{"kappa", all.kappa}, {"count", all.cuts.size()}, {"cuts", cuts}});
    return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
    std::string suite;
};

int run_verify(const VerifyArgs& a, const GlobalFlags& flags) {
    const auto suite = parse_suite(a.suite);
    if (!suite) throw Usage("unknown suite '" + a.suite + "'");
    const SuiteReport r = run_suite(*suite, flags.seed);
    if (flags.pretty) {
        std::cout << suite_name(r.suite) << " seed=" << flags.seed << ": " << r.graphs << " graphs, " << r.checks
                  << " checks, " << r.skipped << " skipped, " << r.failures.size() << " failures\n";
        for (const auto& [name, count] : r.tally) std::cout << "  " << name << ": " << count << '\n';
        for (const auto& [graph, f] : r.failures) std::cout << "  FAIL " << graph << ' ' << f.check << ": " << f.detail << '\n';
    } else {
        json failures = json::array();
        for (const auto& [graph, f] : r.failures) {
            json cuts = json::array();
            for (const auto& c : f.cuts) cuts.push_back(json(c.vec()));
            failures.push_back({{"graph", graph}, {"check", f.check}, {"detail", f.detail}, {"cuts", cuts}});
        }
        emit({{"suite", std::string(suite_name(r.suite))},
              {"seed", flags.seed},
              {"graphs", r.graphs},
              {"checks", r.checks},
              {"skipped", r.skipped},
              {"tally", r.tally},
              {"failures", failures}});
    }
    return r.failures.empty() ? 0 : 1;
}

// -------------------------------------------------------------- export-dot

struct DotArgs {
    std::string input;
    std::vector<std::string> cut;
    std::vector<std::string> center;
    std::vector<std::string> spokes;  // each "a,b,..."
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

int run_export_dot(const DotArgs& a, const GlobalFlags&) {
    const auto lg = load_edge_list(a.input);
    const Graph& g = lg.graph;
    const Names names(lg.labels);

    // Colour per vertex; later assignments win, so the cut is drawn on top.
    std::vector<std::string> fill(g.n());
    if (!a.spokes.empty()) {
        const std::size_t kappa = vertex_connectivity(g).kappa;
        std::vector<VertexSet> spokes;
        for (const auto& s : a.spokes) spokes.push_back(names.ids(split_list(s), g.n()));
        if (spokes.size() < 4) throw Usage("a wheel needs at least four --spoke options");
        const auto wh = verify_wheel(g, names.ids(a.center, g.n()), spokes, kappa);
        if (!wh) throw Usage("the given center and spokes do not form a wheel");
        static const char* const kSectorColours[] = {"lightblue", "palegreen", "khaki", "plum", "lightsalmon", "lightcyan"};
        for (std::size_t i = 0; i < wh->size(); ++i) {
            for (Vertex v : wh->sectors[i]) fill[v] = kSectorColours[i % std::size(kSectorColours)];
            for (Vertex v : wh->spokes[i]) fill[v] = "orange";
        }
        for (Vertex v : wh->center) fill[v] = "gray";
    }
    if (!a.cut.empty()) {
        const VertexSet cut = names.ids(a.cut, g.n());
        for (Vertex v : cut) fill[v] = "red";
    }

    std::cout << "graph G {\n  node [shape=circle];\n";
    for (Vertex v = 0; v < g.n(); ++v) {
        std::cout << "  " << v << " [label=\"" << names.name(v) << '"';
        if (!fill[v].empty()) std::cout << ", style=filled, fillcolor=" << fill[v];
        std::cout << "];\n";
    }
    for (const auto& [x, y] : g.edges()) std::cout << "  " << x << " -- " << y << ";\n";
    std::cout << "}\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum vertex cut structure and (kappa+1)-connectivity index"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalFlags flags;
    app.add_flag("--pretty", flags.pretty, "Human-readable summary instead of JSON");
    app.add_option("--seed", flags.seed, "Seed for randomized work");

    SparsifyArgs sp;
    auto* sparsify = app.add_subcommand("sparsify", "Keep the first k+1 scan-first-search forests");
    sparsify->add_option("input", sp.input, "Edge-list file")->required()->check(CLI::ExistingFile);
    sparsify->add_option("--k", sp.k, "Connectivity level to preserve")->required();
    sparsify->add_option("-o,--output", sp.output, "Write the sparse edge list here instead of stdout");

    ConnectivityArgs co;
    auto* connectivity = app.add_subcommand("connectivity", "Vertex connectivity with a minimum cut");
    connectivity->add_option("input", co.input, "Edge-list file")->required()->check(CLI::ExistingFile);
    connectivity->add_flag("--json", co.json_out, "Print JSON instead of a line of text");

    BuildArgs bi;
    auto* build = app.add_subcommand("build-index", "Build the small-cut index of a graph");
    build->add_option("input", bi.input, "Edge-list file")->required()->check(CLI::ExistingFile);
    build->add_option("--mode", bi.mode, "exact or randomized")->check(CLI::IsMember({"exact", "randomized"}));
    build->add_option("-o,--output", bi.output, "Index file; stdout when omitted");

    QueryArgs qa;
    auto* q = app.add_subcommand("query", "Answer whether two vertices are separated by a kappa-cut");
    q->add_option("--index", qa.index, "Index file")->required()->check(CLI::ExistingFile);
    q->add_option("u", qa.u)->required();
    q->add_option("v", qa.v)->required();
    q->add_flag("--json", qa.json_out, "Print JSON instead of a line of text");

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "Relation between two minimum cuts");
    classify->add_option("input", ca.input, "Edge-list file")->required()->check(CLI::ExistingFile);
    classify->add_option("--cut-a", ca.cut_a, "First cut, comma separated")->required()->delimiter(',');
    classify->add_option("--cut-b", ca.cut_b, "Second cut, comma separated")->required()->delimiter(',');

    EnumerateArgs ea;
    auto* enumerate = app.add_subcommand("enumerate-cuts", "List every minimum vertex cut (small graphs)");
    enumerate->add_option("input", ea.input, "Edge-list file")->required()->check(CLI::ExistingFile);
    enumerate->add_flag("--ignore-limits", ea.ignore_limits, "Enumerate past 16 vertices or kappa 5");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a brute-force check suite");
    verify->add_option("--suite", va.suite, "classification, wheels, laminar, small or index")->required();

    DotArgs da;
    auto* dot = app.add_subcommand("export-dot", "Render the graph as DOT, highlighting a cut or wheel");
    dot->add_option("input", da.input, "Edge-list file")->required()->check(CLI::ExistingFile);
    dot->add_option("--cut", da.cut, "Cut to highlight, comma separated")->delimiter(',');
    dot->add_option("--center", da.center, "Wheel center, comma separated")->delimiter(',');
    dot->add_option("--spoke", da.spokes, "One wheel spoke, comma separated; repeat in cyclic order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        if (*sparsify) return run_sparsify(sp, flags);
        if (*connectivity) return run_connectivity(co, flags);
        if (*build) return run_build_index(bi, flags);
        if (*q) return run_query(qa, flags);
        if (*classify) return run_classify(ca, flags);
        if (*enumerate) return run_enumerate(ea, flags);
        if (*verify) return run_verify(va, flags);
        return run_export_dot(da, flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
