#include "ube/io.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ube {

namespace {

bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto p = line.find_first_not_of(" \t");
        if (p == std::string::npos || line[p] == '#') continue;
        return true;
    }
    return false;
}

std::vector<int> parse_ints(const std::string& s) {
    std::istringstream ss(s);
    std::vector<int> v;
    int x;
    while (ss >> x) v.push_back(x);
    if (!ss.eof()) throw std::invalid_argument("malformed line: " + s);
    return v;
}

struct RawStg {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rotation;
    std::vector<int> outer;
};

RawStg parse_stg(std::istream& in) {
    RawStg r;
    std::string line;
    if (!next_content_line(in, line)) throw std::invalid_argument("empty graph file");
    auto head = parse_ints(line);
    if (head.size() != 2 || head[0] < 1 || head[1] < 0) throw std::invalid_argument("expected header 'n m'");
    r.n = head[0];
    for (int i = 0; i < head[1]; ++i) {
        if (!next_content_line(in, line)) throw std::invalid_argument("missing edge lines");
        auto e = parse_ints(line);
        if (e.size() != 2) throw std::invalid_argument("expected 'tail head': " + line);
        r.edges.emplace_back(e[0], e[1]);
    }
    while (next_content_line(in, line)) {
        std::istringstream ss(line);
        std::string word;
        ss >> word;
        if (word == "ROTATION") {
            for (int v = 0; v < r.n; ++v) {
                if (!std::getline(in, line)) throw std::invalid_argument("rotation block too short");
                if (!line.empty() && line.back() == '\r') line.pop_back();
                r.rotation.push_back(parse_ints(line));
            }
        } else if (word == "OUTER") {
            std::string rest;
            std::getline(ss, rest);
            r.outer = parse_ints(rest);
        } else {
            throw std::invalid_argument("unexpected line: " + line);
        }
    }
    return r;
}

int source_of(const Digraph& g) {
    auto ins = g.in_edges();
    int s = -1;
    for (int v = 0; v < g.n; ++v)
        if (ins[v].empty()) {
            if (s >= 0) throw std::invalid_argument("graph has more than one source");
            s = v;
        }
    if (s < 0) throw std::invalid_argument("graph has no source");
    return s;
}

int sink_of(const Digraph& g) {
    auto outs = g.out_edges();
    int t = -1;
    for (int v = 0; v < g.n; ++v)
        if (outs[v].empty()) {
            if (t >= 0) throw std::invalid_argument("graph has more than one sink");
            t = v;
        }
    if (t < 0) throw std::invalid_argument("graph has no sink");
    return t;
}

PlaneStGraph from_raw(const RawStg& r) {
    Digraph g(r.n, r.edges);
    if (r.rotation.empty()) {
        if (!r.outer.empty()) throw std::invalid_argument("OUTER given without ROTATION");
        return embed_st_digraph(g);
    }
    int s = source_of(g), t = sink_of(g);
    int outer_dart = -1;
    if (!r.outer.empty()) {
        if (r.outer.size() < 2) throw std::invalid_argument("OUTER walk needs at least two vertices");
        int a = r.outer[0], b = r.outer[1];
        int e = g.find_edge(a, b);
        if (e >= 0)
            outer_dart = dart_of(e, false);
        else if ((e = g.find_edge(b, a)) >= 0)
            outer_dart = dart_of(e, true);
        else
            throw std::invalid_argument("OUTER walk uses a non-edge");
    }
    auto p = plane_from_rotation(r.n, r.edges, s, t, r.rotation, outer_dart);
    require_valid(p);
    if (!r.outer.empty() && outer_walk(p) != r.outer) {
        // Accept any cyclic shift of the same walk.
        auto w = outer_walk(p);
        bool match = false;
        if (w.size() == r.outer.size())
            for (size_t sh = 0; sh < w.size() && !match; ++sh) {
                match = true;
                for (size_t i = 0; i < w.size(); ++i)
                    if (w[(i + sh) % w.size()] != r.outer[i]) {
                        match = false;
                        break;
                    }
            }
        if (!match) throw std::invalid_argument("OUTER walk is not a face of the rotation system");
    }
    return p;
}

}  // namespace

std::vector<int> outer_walk(const PlaneStGraph& g) {
    std::vector<int> walk;
    int d = g.outer_dart;
    do {
        walk.push_back(g.dart_tail(d));
        d = g.next_dart(d);
    } while (d != g.outer_dart && d >= 0);
    return walk;
}

PlaneStGraph embed_st_digraph(const Digraph& g) {
    using UG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
    const int s = source_of(g), t = sink_of(g);
    if (!g.topological_order()) throw std::invalid_argument("graph has a cycle");
    UG ug(g.n);
    for (int e = 0; e < g.m(); ++e) boost::add_edge(g.edges[e].first, g.edges[e].second, e, ug);
    const int virt = g.m();
    boost::add_edge(s, t, virt, ug);
    using EdgeDesc = boost::graph_traits<UG>::edge_descriptor;
    std::vector<std::vector<EdgeDesc>> emb(g.n);
    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = ug,
                                             boost::boyer_myrvold_params::embedding = &emb[0]))
        throw std::invalid_argument("graph is not st-planar");
    std::vector<std::vector<int>> rot(g.n);
    for (int v = 0; v < g.n; ++v)
        for (const auto& ed : emb[v]) {
            int e = boost::get(boost::edge_index, ug, ed);
            if (e != virt) rot[v].push_back(e);
        }
    PlaneStGraph p = plane_from_rotation(g.n, g.edges, s, t, rot, dart_of(rot[s].front(), true));
    // The removed (s,t) edge merged two faces; one of the faces through s
    // also contains t and can serve as the outer face.
    for (int e : rot[s]) {
        p.outer_dart = dart_of(e, true);
        if (validate_plane_st_graph(p).ok()) return p;
        p.outer_dart = dart_of(e, false);
        if (validate_plane_st_graph(p).ok()) return p;
    }
    throw std::runtime_error("no outer face with s and t found");
}

PlaneStGraph read_stg(std::istream& in) { return from_raw(parse_stg(in)); }

Digraph read_digraph_stg(std::istream& in) {
    auto r = parse_stg(in);
    return Digraph(r.n, r.edges);
}

void write_digraph_stg(std::ostream& out, const Digraph& g) {
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

void write_stg(std::ostream& out, const PlaneStGraph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.g.edges) out << u << ' ' << v << '\n';
    out << "ROTATION\n";
    for (const auto& r : g.rotation) {
        for (size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
        out << '\n';
    }
    out << "OUTER";
    for (int v : outer_walk(g)) out << ' ' << v;
    out << '\n';
}

nlohmann::json graph_to_json(const PlaneStGraph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.g.edges) j["edges"].push_back({u, v});
    j["rotation"] = g.rotation;
    j["outer"] = outer_walk(g);
    j["source"] = g.s;
    j["sink"] = g.t;
    return j;
}

PlaneStGraph graph_from_json(const nlohmann::json& j) {
    RawStg r;
    r.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) r.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    if (j.contains("rotation")) r.rotation = j.at("rotation").get<std::vector<std::vector<int>>>();
    if (j.contains("outer")) r.outer = j.at("outer").get<std::vector<int>>();
    return from_raw(r);
}

nlohmann::json book_to_json(const BookEmbedding& be) {
    nlohmann::json j;
    j["k"] = be.k;
    j["pi"] = be.order;
    j["sigma"] = nlohmann::json::object();
    for (size_t e = 0; e < be.page.size(); ++e) j["sigma"][std::to_string(e)] = be.page[e];
    return j;
}

BookEmbedding book_from_json(const nlohmann::json& j, int m) {
    BookEmbedding be;
    be.k = j.at("k").get<int>();
    be.order = j.at("pi").get<std::vector<int>>();
    be.page.assign(m, 0);
    for (const auto& [key, val] : j.at("sigma").items()) {
        int e = std::stoi(key);
        if (e < 0 || e >= m) throw std::invalid_argument("sigma names unknown edge " + key);
        be.page[e] = val.get<int>();
    }
    return be;
}

namespace {

bool is_json_path(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    return f;
}

}  // namespace

PlaneStGraph load_graph(const std::string& path) {
    auto f = open_in(path);
    if (is_json_path(path)) return graph_from_json(nlohmann::json::parse(f));
    return read_stg(f);
}

Digraph load_digraph(const std::string& path) {
    auto f = open_in(path);
    if (!is_json_path(path)) return read_digraph_stg(f);
    auto j = nlohmann::json::parse(f);
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Digraph(j.at("n").get<int>(), std::move(edges));
}

void save_graph(const std::string& path, const PlaneStGraph& g) {
    auto f = open_out(path);
    if (is_json_path(path))
        f << graph_to_json(g).dump(2) << '\n';
    else
        write_stg(f, g);
}

BookEmbedding load_book(const std::string& path, int m) {
    auto f = open_in(path);
    return book_from_json(nlohmann::json::parse(f), m);
}

void save_book(const std::string& path, const BookEmbedding& be) {
    auto f = open_out(path);
    f << book_to_json(be).dump(2) << '\n';
}

}  // namespace ube
