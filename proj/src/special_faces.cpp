#include "ube/special_faces.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace ube {

namespace {

int middle_vertex(const Digraph& g, const std::vector<int>& path, int source) {
    for (int e : path)
        if (g.edges[e].first == source) return g.edges[e].second;
    throw std::logic_error("face path does not leave its source");
}

MixedGraph build_mixed_graph(const PlaneStGraph& g, const FaceSet& fs) {
    auto fc = classify_faces(g, fs);
    MixedGraph m;
    m.directed = g.g;
    m.s = g.s;
    m.t = g.t;
    for (const auto& c : fc.classes) {
        if (c.kind == FaceKind::Other)
            throw std::invalid_argument("face " + std::to_string(c.face) +
                                        " is neither a generalized triangle nor a rhombus");
        if (c.kind != FaceKind::Rhombus) continue;
        const auto& f = fs.faces[c.face];
        m.undirected.emplace_back(middle_vertex(g.g, f.left_edges, f.source),
                                  middle_vertex(g.g, f.right_edges, f.source));
        m.face.push_back(c.face);
    }
    return m;
}

}  // namespace

MixedGraph build_mixed_graph(const PlaneStGraph& g) { return build_mixed_graph(g, compute_faces(g)); }

std::optional<Orientation> orient_unilateral(const MixedGraph& m) {
    const int n = m.directed.n;
    auto out = m.directed.out_edges();
    std::vector<std::vector<int>> und(n);
    for (size_t i = 0; i < m.undirected.size(); ++i) {
        auto [u, v] = m.undirected[i];
        und[u].push_back(v);
        und[v].push_back(u);
    }
    std::vector<int> missing(n, 0);
    for (auto [u, v] : m.directed.edges) ++missing[v];
    std::vector<char> placed(n, 0);
    std::vector<int> path;
    std::unordered_set<std::string> dead;
    auto key = [&]() {
        std::string k(placed.begin(), placed.end());
        k += std::to_string(path.back());
        return k;
    };
    // Extends the spine by one vertex: an unplaced successor of the last
    // vertex, along a directed or an undirected edge, whose predecessors are
    // all placed.
    auto extend = [&](auto&& self) -> bool {
        if (static_cast<int>(path.size()) == n) return true;
        auto k = key();
        if (dead.count(k)) return false;
        int v = path.back();
        std::vector<int> cand;
        for (int e : out[v]) cand.push_back(m.directed.edges[e].second);
        cand.insert(cand.end(), und[v].begin(), und[v].end());
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (int w : cand) {
            if (placed[w] || missing[w] != 0) continue;
            placed[w] = 1;
            path.push_back(w);
            for (int e : out[w]) --missing[m.directed.edges[e].second];
            if (self(self)) return true;
            for (int e : out[w]) ++missing[m.directed.edges[e].second];
            path.pop_back();
            placed[w] = 0;
        }
        dead.insert(std::move(k));
        return false;
    };
    if (n == 0 || m.s < 0 || missing[m.s] != 0) return std::nullopt;
    placed[m.s] = 1;
    path.push_back(m.s);
    for (int e : out[m.s]) --missing[m.directed.edges[e].second];
    if (!extend(extend)) return std::nullopt;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[path[i]] = i;
    Orientation o;
    o.path = path;
    for (auto [u, v] : m.undirected) o.oriented.push_back(pos[u] < pos[v] ? Edge{u, v} : Edge{v, u});
    return o;
}

std::optional<BookEmbedding> test_2ube_special_faces(const PlaneStGraph& g) {
    auto fs = compute_faces(g);
    auto m = build_mixed_graph(g, fs);
    auto o = orient_unilateral(m);
    if (!o) return std::nullopt;
    // Completion: the graph plus the oriented edges used by the path, each
    // drawn inside its rhombus face.
    auto lr = lr_orders(g);
    std::vector<Edge> edges = g.g.edges;
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[o->path[i]] = i;
    for (size_t i = 0; i < m.undirected.size(); ++i) {
        auto [u, v] = o->oriented[i];
        if (pos[v] != pos[u] + 1) continue;
        const auto& f = fs.faces[m.face[i]];
        const int e = static_cast<int>(edges.size());
        edges.emplace_back(u, v);
        auto find_in = [&](const std::vector<int>& path, int tail, int head) {
            for (int x : path)
                if ((tail < 0 || g.g.edges[x].first == tail) && (head < 0 || g.g.edges[x].second == head)) return x;
            throw std::logic_error("rhombus path edge not found");
        };
        const bool left_to_right = u == m.undirected[i].first;
        const auto& up = left_to_right ? f.left_edges : f.right_edges;
        const auto& vp = left_to_right ? f.right_edges : f.left_edges;
        // At u the new edge leaves towards the other side of the face, at v
        // it arrives from it.
        int u_out = find_in(up, u, -1), v_in = find_in(vp, -1, v);
        auto& o_u = lr.out[u];
        auto it = std::find(o_u.begin(), o_u.end(), u_out);
        o_u.insert(left_to_right ? it + 1 : it, e);
        auto& i_v = lr.in[v];
        auto jt = std::find(i_v.begin(), i_v.end(), v_in);
        i_v.insert(left_to_right ? jt : jt + 1, e);
    }
    auto completion = plane_from_lr(g.n(), std::move(edges), lr);
    auto be = hp_completion_to_2ube(g, completion, o->path);
    if (!verify_kube(g.g, be).valid || !is_embedding_preserving(g, be))
        throw std::logic_error("special-faces witness failed verification");
    return be;
}

}  // namespace ube
