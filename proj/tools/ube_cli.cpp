#include <fstream>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ube/book.hpp"
#include "ube/constructions.hpp"
#include "ube/fpt.hpp"
#include "ube/generators.hpp"
#include "ube/graph.hpp"
#include "ube/io.hpp"
#include "ube/reduction.hpp"
#include "ube/render.hpp"
#include "ube/special_faces.hpp"

using namespace ube;
using nlohmann::json;

namespace {

enum Exit { kYes = 0, kNo = 1, kError = 2, kUnknown = 3 };

struct Options {
    int k = 2;
    std::string mode = "variable";
    std::uint64_t seed = 1;
    std::int64_t budget = kDefaultBudget;
    bool pretty = false;
    std::string svg;
    std::string out;
    std::string method = "auto";
    int n = 10;
    int cols = 0;
    std::string graph;
    std::string second;
};

void emit(const json& j, const Options& o) { std::cout << j.dump(o.pretty ? 2 : -1) << '\n'; }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
}

EmbeddingMode parse_mode(const std::string& m) { return m == "fixed" ? EmbeddingMode::Fixed : EmbeddingMode::Variable; }

json edges_json(const std::vector<Edge>& edges) {
    json a = json::array();
    for (auto [u, v] : edges) a.push_back({u, v});
    return a;
}

// Writes the witness to --out and --svg when requested.
void save_witness(const Digraph& g, const BookEmbedding& be, const Options& o) {
    if (!o.out.empty()) save_book(o.out, be);
    if (!o.svg.empty()) write_text(o.svg, render_arc_diagram(g, be));
}

int cmd_validate(const Options& o) {
    Digraph d = load_digraph(o.graph);
    json j;
    try {
        auto g = load_graph(o.graph);
        auto rep = validate_plane_st_graph(g);
        j = {{"valid", rep.ok()}, {"issues", rep.issues}, {"n", g.n()}, {"m", g.m()}, {"source", g.s}, {"sink", g.t}};
        emit(j, o);
        return rep.ok() ? kYes : kNo;
    } catch (const std::invalid_argument& e) {
        PlaneStGraph p;
        p.g = d;
        auto ins = d.in_edges(), outs = d.out_edges();
        p.s = 0;
        p.t = d.n - 1;
        for (int v = d.n - 1; v >= 0; --v) {
            if (ins[v].empty()) p.s = v;
            if (outs[v].empty() && v != p.s) p.t = v;
        }
        std::vector<std::string> issues;
        for (auto& s : validate_plane_st_graph(p).issues)
            if (s != "rotation system has wrong size") issues.push_back(s);
        issues.push_back(std::string("embedding: ") + e.what());
        emit({{"valid", false}, {"issues", issues}, {"n", d.n}, {"m", d.m()}}, o);
        return kNo;
    }
}

int cmd_faces(const Options& o) {
    auto g = load_graph(o.graph);
    auto fs = compute_faces(g);
    auto cls = classify_faces(g);
    std::map<int, const FaceClass*> by_face;
    for (const auto& c : cls.classes) by_face[c.face] = &c;
    json faces = json::array();
    for (const auto& f : fs.faces) {
        json jf = {{"id", f.id},         {"outer", f.is_outer},         {"source", f.source},
                   {"sink", f.sink},     {"left_path", f.left_path},    {"right_path", f.right_path}};
        if (auto it = by_face.find(f.id); it != by_face.end()) {
            jf["class"] = to_string(it->second->kind);
            jf["single_edge_side"] = it->second->single_edge_side;
        }
        faces.push_back(jf);
    }
    emit({{"faces", faces},
          {"euler", g.n() - g.m() + static_cast<int>(fs.faces.size())},
          {"forbidden", cls.has_forbidden},
          {"forbidden_edges", cls.forbidden_edges}},
         o);
    return kYes;
}

int cmd_dual(const Options& o) {
    auto g = load_graph(o.graph);
    auto d = dual_graph(g);
    emit({{"n", d.n},
          {"s_star", d.s_star},
          {"t_star", d.t_star},
          {"face_of", d.face_of},
          {"edges", edges_json(d.edges)},
          {"primal_edge", d.primal_edge}},
         o);
    return kYes;
}

int status_exit(SolveStatus s) { return s == SolveStatus::Found ? kYes : s == SolveStatus::None ? kNo : kUnknown; }

int cmd_solve(const Options& o) {
    if (o.k < 1) throw std::invalid_argument("--k must be at least 1");
    SolveResult res;
    Digraph d;
    if (parse_mode(o.mode) == EmbeddingMode::Fixed) {
        auto g = load_graph(o.graph);
        d = g.g;
        res = solve_kube_brute(g, o.k, EmbeddingMode::Fixed, o.budget);
    } else {
        d = load_digraph(o.graph);
        res = solve_kube_brute(d, o.k, o.budget);
    }
    json j = {{"status", to_string(res.status)}, {"k", o.k}, {"mode", o.mode}, {"nodes", res.nodes}};
    if (res.embedding) {
        j["embedding"] = book_to_json(*res.embedding);
        save_witness(d, *res.embedding, o);
    }
    emit(j, o);
    return status_exit(res.status);
}

int cmd_verify(const Options& o) {
    Digraph d = load_digraph(o.graph);
    auto be = load_book(o.second, d.m());
    auto rep = verify_kube(d, be);
    json j = {{"valid", rep.valid}, {"message", rep.message}};
    if (rep.edge_a >= 0) j["conflict"] = {rep.edge_a, rep.edge_b};
    bool ok = rep.valid;
    if (parse_mode(o.mode) == EmbeddingMode::Fixed) {
        bool preserving = rep.valid && be.k <= 2 && is_embedding_preserving(load_graph(o.graph), be);
        j["embedding_preserving"] = preserving;
        ok = ok && preserving;
    }
    emit(j, o);
    return ok ? kYes : kNo;
}

bool all_rhombi(const PlaneStGraph& g) {
    for (const auto& c : classify_faces(g).classes)
        if (c.kind != FaceKind::Rhombus) return false;
    return true;
}

int cmd_construct(const Options& o) {
    auto g = load_graph(o.graph);
    std::string method = o.method;
    if (method == "auto") method = all_rhombi(g) ? "rhombi" : "long-right";
    ConstructionStats stats;
    HpCompletion hc;
    if (method == "rhombi")
        hc = hp_complete_rhombi(g, &stats);
    else if (method == "long-right")
        hc = hp_complete_long_right(g, &stats);
    else
        throw std::invalid_argument("unknown method " + method);
    auto be = hp_completion_to_2ube(g, hc.graph, hc.path);
    auto rep = verify_kube(g.g, be);
    json dummies = json::array();
    for (int e : hc.dummy_edges) dummies.push_back({hc.graph.g.edges[e].first, hc.graph.g.edges[e].second});
    json j = {{"method", method},
              {"path", hc.path},
              {"dummy_edges", dummies},
              {"faces", stats.faces},
              {"cases", std::vector<int>(stats.cases.begin() + 1, stats.cases.end())},
              {"invariant_checks", stats.invariant_checks},
              {"embedding", book_to_json(be)},
              {"valid", rep.valid},
              {"embedding_preserving", rep.valid && is_embedding_preserving(g, be)}};
    if (rep.valid) save_witness(g.g, be, o);
    emit(j, o);
    return rep.valid ? kYes : kError;
}

int cmd_test_special(const Options& o) {
    auto g = load_graph(o.graph);
    auto be = test_2ube_special_faces(g);
    json j = {{"answer", be.has_value()}};
    if (be) {
        j["embedding"] = book_to_json(*be);
        save_witness(g.g, *be, o);
    }
    emit(j, o);
    return be ? kYes : kNo;
}

int cmd_test_2ube(const Options& o) {
    auto g = load_graph(o.graph);
    auto res = test_2ube_fpt(g, parse_mode(o.mode));
    json nodes = json::array();
    for (int i = 0; i < static_cast<int>(res.tree.nodes.size()); ++i) {
        const auto& nd = res.tree.nodes[i];
        nodes.push_back({{"node", i},
                         {"type", to_string(nd.type)},
                         {"poles", {nd.pole_s, nd.pole_t}},
                         {"types", res.node_types[i].names()}});
    }
    json widths = json::object();
    for (auto [node, w] : res.widths) widths[std::to_string(node)] = w;
    emit({{"answer", res.answer},
          {"mode", o.mode},
          {"per_node_types", nodes},
          {"spqr_stats",
           {{"s", res.stats.s},
            {"p", res.stats.p},
            {"q", res.stats.q},
            {"r", res.stats.r},
            {"max_r_skeleton", res.stats.max_r_skeleton}}},
          {"widths", widths}},
         o);
    return res.answer ? kYes : kNo;
}

int cmd_reduce(const Options& o) {
    std::ifstream f(o.graph);
    if (!f) throw std::runtime_error("cannot open " + o.graph);
    auto inst = instance_from_json(json::parse(f));
    auto gg = reduce_betweenness(inst, o.k < 3 ? 3 : o.k);
    std::vector<std::string> roles;
    for (auto r : gg.roles) roles.push_back(to_string(r));
    if (!o.out.empty()) {
        std::ofstream out(o.out);
        if (!out) throw std::runtime_error("cannot write " + o.out);
        for (int v = 0; v < gg.graph.n; ++v) out << "# name " << v << ' ' << gg.names[v] << '\n';
        for (int e = 0; e < gg.graph.m(); ++e) out << "# role " << e << ' ' << roles[e] << '\n';
        write_digraph_stg(out, gg.graph);
    }
    emit({{"k", gg.k},
          {"h", gg.h},
          {"s", gg.s},
          {"n", gg.graph.n},
          {"m", gg.graph.m()},
          {"source", gg.source()},
          {"sink", gg.sink()},
          {"names", gg.names},
          {"roles", roles}},
         o);
    return kYes;
}

int cmd_gen(const Options& o, const std::string& family) {
    PlaneStGraph g;
    if (family == "rhombus-grid")
        g = rhombus_grid(o.n, o.cols > 0 ? o.cols : o.n);
    else if (family == "long-right")
        g = long_right_path(o.n, o.seed);
    else if (family == "series-parallel")
        g = series_parallel(o.n, o.seed);
    else if (family == "random")
        g = random_planar_st(o.n, o.seed);
    else if (family == "triangulated")
        g = random_planar_st(o.n, o.seed, {.max_new_vertices = 1, .triangulated = true});
    else if (family == "special-faces")
        g = random_special_faces(o.n, o.seed);
    else if (family == "exhaustive") {
        json all = json::array();
        for (const auto& h : exhaustive_small(o.n)) all.push_back(graph_to_json(h));
        if (!o.out.empty()) write_text(o.out, all.dump(2) + "\n");
        emit(o.out.empty() ? all : json{{"count", all.size()}, {"n", o.n}}, o);
        return kYes;
    } else
        throw std::invalid_argument("unknown family " + family);
    if (!o.out.empty()) {
        save_graph(o.out, g);
        emit({{"family", family}, {"n", g.n()}, {"m", g.m()}, {"seed", o.seed}}, o);
    } else {
        emit(graph_to_json(g), o);
    }
    return kYes;
}

int cmd_render(const Options& o) {
    Digraph d = load_digraph(o.graph);
    auto be = load_book(o.second, d.m());
    auto svg = render_arc_diagram(d, be);
    if (o.svg.empty()) {
        std::cout << svg;
    } else {
        write_text(o.svg, svg);
        std::map<std::string, int> per_page;
        for (const auto& a : arc_layout(d, be)) ++per_page[std::to_string(a.page)];
        emit({{"svg", o.svg}, {"arcs", d.m()}, {"pages", per_page}}, o);
    }
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Upward book embeddings of st-graphs"};
    app.require_subcommand(1);
    Options o;
    std::string family;

    auto graph_arg = [&](CLI::App* c) { c->add_option("graph", o.graph, "Graph file (.stg or .json)")->required(); };
    auto common = [&](CLI::App* c) { c->add_flag("--json", o.pretty, "Pretty-print the JSON report"); };
    auto with_mode = [&](CLI::App* c) {
        c->add_option("--mode", o.mode, "Embedding mode")->check(CLI::IsMember({"fixed", "variable"}));
    };
    auto with_outputs = [&](CLI::App* c) {
        c->add_option("--out", o.out, "Write the result to this file");
        c->add_option("--svg", o.svg, "Write an arc diagram of the witness");
    };

    auto* validate = app.add_subcommand("validate", "Check the plane st-graph conditions");
    auto* faces = app.add_subcommand("faces", "List faces with left/right paths and classes");
    auto* dual = app.add_subcommand("dual", "Print the dual graph");
    auto* solve = app.add_subcommand("solve", "Exact kUBE search");
    auto* verify = app.add_subcommand("verify", "Verify a .ube witness");
    auto* construct = app.add_subcommand("construct", "Constructive 2UBE via HP-completion");
    auto* special = app.add_subcommand("test-special", "2UBE test for triangle/rhombus faces");
    auto* fpt = app.add_subcommand("test-2ube", "SPQR-tree 2UBE decision");
    auto* reduce = app.add_subcommand("reduce", "Betweenness instance to kUBE instance");
    auto* gen = app.add_subcommand("gen", "Generate plane st-graphs");
    auto* render = app.add_subcommand("render", "SVG arc diagram of a book embedding");

    for (auto* c : {validate, faces, dual, solve, verify, construct, special, fpt, reduce, gen, render}) common(c);
    for (auto* c : {validate, faces, dual, solve, verify, construct, special, fpt}) graph_arg(c);
    for (auto* c : {solve, verify, fpt}) with_mode(c);
    for (auto* c : {solve, construct, special}) with_outputs(c);

    solve->add_option("--k", o.k, "Number of pages");
    solve->add_option("--budget", o.budget, "Search node budget");
    verify->add_option("ube", o.second, "Book embedding (.ube)")->required();
    construct->add_option("--method", o.method, "Construction")
        ->check(CLI::IsMember({"auto", "long-right", "rhombi"}));
    reduce->add_option("instance", o.graph, "Betweenness instance (.json)")->required();
    reduce->add_option("--k", o.k, "Number of pages (at least 3)");
    reduce->add_option("--out", o.out, "Write the digraph as .stg");
    gen->add_option("family", family, "Graph family")
        ->required()
        ->check(CLI::IsMember(
            {"rhombus-grid", "long-right", "series-parallel", "random", "triangulated", "special-faces", "exhaustive"}));
    gen->add_option("--n", o.n, "Size parameter");
    gen->add_option("--cols", o.cols, "Columns of a rhombus grid (default: --n)");
    gen->add_option("--seed", o.seed, "Random seed");
    gen->add_option("--out", o.out, "Write the graph to this file");
    render->add_option("graph", o.graph, "Graph file (.stg or .json)")->required();
    render->add_option("ube", o.second, "Book embedding (.ube)")->required();
    render->add_option("--svg", o.svg, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kYes : kError;
    }

    try {
        if (validate->parsed()) return cmd_validate(o);
        if (faces->parsed()) return cmd_faces(o);
        if (dual->parsed()) return cmd_dual(o);
        if (solve->parsed()) return cmd_solve(o);
        if (verify->parsed()) return cmd_verify(o);
        if (construct->parsed()) return cmd_construct(o);
        if (special->parsed()) return cmd_test_special(o);
        if (fpt->parsed()) return cmd_test_2ube(o);
        if (reduce->parsed()) return cmd_reduce(o);
        if (gen->parsed()) return cmd_gen(o, family);
        if (render->parsed()) return cmd_render(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
