#include "ube/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace ube {

Digraph::Digraph(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::set<Edge> seen;
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
}

int Digraph::find_edge(int u, int v) const {
    for (int e = 0; e < m(); ++e)
        if (edges[e].first == u && edges[e].second == v) return e;
    return -1;
}

std::vector<std::vector<int>> Digraph::out_edges() const {
    std::vector<std::vector<int>> out(n);
    for (int e = 0; e < m(); ++e) out[edges[e].first].push_back(e);
    return out;
}

std::vector<std::vector<int>> Digraph::in_edges() const {
    std::vector<std::vector<int>> in(n);
    for (int e = 0; e < m(); ++e) in[edges[e].second].push_back(e);
    return in;
}

std::optional<std::vector<int>> Digraph::topological_order() const {
    std::vector<int> indeg(n, 0);
    auto out = out_edges();
    for (const auto& e : edges) ++indeg[e.second];
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        order.push_back(v);
        for (int e : out[v])
            if (--indeg[edges[e].second] == 0) ready.push(edges[e].second);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

int PlaneStGraph::dart_tail(int d) const {
    const auto& e = g.edges[dart_edge(d)];
    return dart_reversed(d) ? e.second : e.first;
}

int PlaneStGraph::dart_head(int d) const {
    const auto& e = g.edges[dart_edge(d)];
    return dart_reversed(d) ? e.first : e.second;
}

int PlaneStGraph::next_dart(int d) const {
    int h = dart_head(d);
    int e = dart_edge(d);
    const auto& rot = rotation[h];
    auto it = std::find(rot.begin(), rot.end(), e);
    if (it == rot.end()) return -1;
    if (it == rot.begin()) it = rot.end();
    int e2 = *--it;
    return dart_of(e2, g.edges[e2].first != h);
}

PlaneStGraph plane_from_lr(int n, std::vector<Edge> edges, const LrOrders& lr) {
    PlaneStGraph p;
    p.g = Digraph(n, std::move(edges));
    p.rotation.assign(n, {});
    int s = -1, t = -1;
    for (int v = 0; v < n; ++v) {
        if (lr.in[v].empty()) s = (s < 0 ? v : -2);
        if (lr.out[v].empty()) t = (t < 0 ? v : -2);
        auto& rot = p.rotation[v];
        rot = lr.out[v];
        rot.insert(rot.end(), lr.in[v].rbegin(), lr.in[v].rend());
    }
    if (s < 0 || t < 0) throw std::invalid_argument("graph must have exactly one source and one sink");
    p.s = s;
    p.t = t;
    if (lr.out[s].empty()) throw std::invalid_argument("source has no outgoing edge");
    p.outer_dart = dart_of(lr.out[s].front(), true);
    return p;
}

PlaneStGraph plane_from_rotation(int n, std::vector<Edge> edges, int s, int t,
                                 std::vector<std::vector<int>> rotation, int outer_dart) {
    PlaneStGraph p;
    p.g = Digraph(n, std::move(edges));
    p.s = s;
    p.t = t;
    p.rotation = std::move(rotation);
    if (outer_dart < 0) {
        if (s < 0 || s >= n || p.rotation.size() != static_cast<size_t>(n) || p.rotation[s].empty())
            throw std::invalid_argument("cannot infer outer face");
        outer_dart = dart_of(p.rotation[s].front(), p.g.edges[p.rotation[s].front()].first == s);
    }
    p.outer_dart = outer_dart;
    return p;
}

std::vector<std::vector<int>> trace_face_darts(const PlaneStGraph& g, std::vector<int>& dart_face) {
    const int nd = 2 * g.m();
    // next_dart for every dart at once; the first occurrence of an edge in a
    // rotation wins, as in next_dart.
    std::vector<int> next(nd, -1);
    for (int v = 0; v < static_cast<int>(g.rotation.size()); ++v) {
        const auto& rot = g.rotation[v];
        const int k = static_cast<int>(rot.size());
        for (int i = 0; i < k; ++i) {
            const int e = rot[i];
            if (e < 0 || e >= g.m()) continue;
            const auto [a, b] = g.g.edges[e];
            if (a != v && b != v) continue;
            const int d = dart_of(e, a == v);
            if (next[d] >= 0) continue;
            const int e2 = rot[(i + k - 1) % k];
            if (e2 < 0 || e2 >= g.m()) continue;
            next[d] = dart_of(e2, g.g.edges[e2].first != v);
        }
    }
    dart_face.assign(nd, -1);
    std::vector<std::vector<int>> faces;
    for (int d0 = 0; d0 < nd; ++d0) {
        if (dart_face[d0] >= 0) continue;
        int id = static_cast<int>(faces.size());
        faces.emplace_back();
        int d = d0;
        while (d >= 0 && dart_face[d] < 0) {
            dart_face[d] = id;
            faces.back().push_back(d);
            d = next[d];
        }
    }
    return faces;
}

std::vector<int> FaceSet::internal() const {
    std::vector<int> r;
    for (const auto& f : faces)
        if (!f.is_outer) r.push_back(f.id);
    return r;
}

namespace {

bool rotation_is_permutation(const PlaneStGraph& g, int v, const std::vector<std::vector<int>>& inc) {
    auto a = g.rotation[v];
    auto b = inc[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// Number of changes of dir(x) around the cyclic sequence xs.
template <class Seq, class Dir>
int direction_switches(const Seq& xs, Dir dir) {
    const int k = static_cast<int>(xs.size());
    int sw = 0;
    for (int i = 0; i < k; ++i)
        if (dir(xs[i]) != dir(xs[(i + 1) % k])) ++sw;
    return sw;
}

}  // namespace

ValidationReport validate_plane_st_graph(const PlaneStGraph& g) {
    ValidationReport r;
    const int n = g.n();
    if (n < 2) {
        r.issues.push_back("graph needs at least 2 vertices");
        return r;
    }
    if (g.s < 0 || g.s >= n || g.t < 0 || g.t >= n || g.s == g.t) {
        r.issues.push_back("invalid source/sink designation");
        return r;
    }
    if (!g.g.topological_order()) r.issues.push_back("cycle found");

    std::vector<int> indeg(n, 0), outdeg(n, 0);
    for (const auto& [u, v] : g.g.edges) {
        ++outdeg[u];
        ++indeg[v];
    }
    int sources = 0, sinks = 0;
    for (int v = 0; v < n; ++v) {
        if (indeg[v] == 0) ++sources;
        if (outdeg[v] == 0) ++sinks;
    }
    if (sources != 1) r.issues.push_back(std::to_string(sources) + " sources");
    if (sinks != 1) r.issues.push_back(std::to_string(sinks) + " sinks");
    if (indeg[g.s] != 0) r.issues.push_back("designated source has incoming edges");
    if (outdeg[g.t] != 0) r.issues.push_back("designated sink has outgoing edges");

    // Undirected connectivity.
    std::vector<std::vector<int>> inc(n);
    for (int e = 0; e < g.m(); ++e) {
        inc[g.g.edges[e].first].push_back(e);
        inc[g.g.edges[e].second].push_back(e);
    }
    {
        std::vector<bool> seen(n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : inc[v]) {
                int w = g.g.edges[e].first == v ? g.g.edges[e].second : g.g.edges[e].first;
                if (!seen[w]) {
                    seen[w] = true;
                    ++cnt;
                    stack.push_back(w);
                }
            }
        }
        if (cnt != n) r.issues.push_back("graph is disconnected");
    }

    if (g.rotation.size() != static_cast<size_t>(n)) {
        r.issues.push_back("rotation system has wrong size");
        return r;
    }
    bool rot_ok = true;
    for (int v = 0; v < n; ++v) {
        if (!rotation_is_permutation(g, v, inc)) {
            r.issues.push_back("rotation of vertex " + std::to_string(v) + " does not list its incident edges");
            rot_ok = false;
        }
    }
    if (!rot_ok) return r;

    std::vector<int> dart_face;
    auto faces = trace_face_darts(g, dart_face);
    int f = static_cast<int>(faces.size());
    if (n - g.m() + f != 2)
        r.issues.push_back("rotation system is not planar (n - m + f = " + std::to_string(n - g.m() + f) + ")");

    if (g.outer_dart < 0 || g.outer_dart >= 2 * g.m()) {
        r.issues.push_back("outer face not specified");
        return r;
    }
    int outer = dart_face[g.outer_dart];
    bool s_on = false, t_on = false;
    for (int d : faces[outer]) {
        if (g.dart_tail(d) == g.s) s_on = true;
        if (g.dart_tail(d) == g.t) t_on = true;
    }
    if (!s_on) r.issues.push_back("source not on outer face");
    if (!t_on) r.issues.push_back("sink not on outer face");

    for (int v = 0; v < n; ++v) {
        if (direction_switches(g.rotation[v], [&](int e) { return g.g.edges[e].first == v; }) > 2) r.issues.push_back("vertex " + std::to_string(v) + " is not bimodal");
    }
    for (int i = 0; i < f; ++i) {
        if (direction_switches(faces[i], [](int d) { return !dart_reversed(d); }) != 2)
            r.issues.push_back("face " + std::to_string(i) + " does not have a single source and sink");
    }
    return r;
}

void require_valid(const PlaneStGraph& g) {
    auto rep = validate_plane_st_graph(g);
    if (!rep.ok()) {
        std::string msg = "invalid plane st-graph:";
        for (const auto& s : rep.issues) msg += " " + s + ";";
        throw std::invalid_argument(msg);
    }
}

FaceSet compute_faces(const PlaneStGraph& g) {
    require_valid(g);
    FaceSet fs;
    auto raw = trace_face_darts(g, fs.dart_face);
    fs.outer = fs.dart_face[g.outer_dart];
    for (int id = 0; id < static_cast<int>(raw.size()); ++id) {
        Face f;
        f.id = id;
        f.darts = raw[id];
        f.is_outer = (id == fs.outer);
        const int k = static_cast<int>(f.darts.size());
        int start = 0;
        for (int i = 0; i < k; ++i) {
            bool fwd = !dart_reversed(f.darts[i]);
            bool prev_fwd = !dart_reversed(f.darts[(i + k - 1) % k]);
            if (fwd && !prev_fwd) {
                start = i;
                break;
            }
        }
        std::vector<int> fwd_v, fwd_e, bwd_v, bwd_e;
        int i = start;
        fwd_v.push_back(g.dart_tail(f.darts[i]));
        while (!dart_reversed(f.darts[i])) {
            fwd_v.push_back(g.dart_head(f.darts[i]));
            fwd_e.push_back(dart_edge(f.darts[i]));
            i = (i + 1) % k;
        }
        bwd_v.push_back(g.dart_tail(f.darts[i]));
        while (dart_reversed(f.darts[i])) {
            bwd_v.push_back(g.dart_head(f.darts[i]));
            bwd_e.push_back(dart_edge(f.darts[i]));
            i = (i + 1) % k;
            if (i == start) break;
        }
        std::reverse(bwd_v.begin(), bwd_v.end());
        std::reverse(bwd_e.begin(), bwd_e.end());
        f.source = fwd_v.front();
        f.sink = fwd_v.back();
        if (f.is_outer) {
            f.right_path = fwd_v;
            f.right_edges = fwd_e;
            f.left_path = bwd_v;
            f.left_edges = bwd_e;
        } else {
            f.left_path = fwd_v;
            f.left_edges = fwd_e;
            f.right_path = bwd_v;
            f.right_edges = bwd_e;
        }
        fs.faces.push_back(std::move(f));
    }
    return fs;
}

LrOrders lr_orders(const PlaneStGraph& g) {
    std::vector<int> dart_face;
    auto faces = trace_face_darts(g, dart_face);
    int outer = dart_face.at(g.outer_dart);
    LrOrders lr;
    lr.out.assign(g.n(), {});
    lr.in.assign(g.n(), {});
    for (int v = 0; v < g.n(); ++v) {
        const auto& rot = g.rotation[v];
        const int k = static_cast<int>(rot.size());
        if (k == 0) continue;
        auto is_out = [&](int i) { return g.g.edges[rot[(i % k + k) % k]].first == v; };
        int start = -1;
        if (v == g.s) {
            for (int i = 0; i < k; ++i)
                if (dart_face[dart_of(rot[i], true)] == outer) start = i;
        } else if (v == g.t) {
            for (int i = 0; i < k; ++i)
                if (dart_face[dart_of(rot[i], false)] == outer) start = i;
        } else {
            for (int i = 0; i < k; ++i)
                if (is_out(i) && !is_out(i - 1)) start = i;
        }
        if (start < 0) throw std::invalid_argument("vertex " + std::to_string(v) + " has no valid edge order");
        for (int j = 0; j < k; ++j) {
            int e = rot[(start + j) % k];
            if (g.g.edges[e].first == v)
                lr.out[v].push_back(e);
            else
                lr.in[v].push_back(e);
        }
        std::reverse(lr.in[v].begin(), lr.in[v].end());
    }
    return lr;
}

PlaneStGraph mirror(const PlaneStGraph& g) {
    auto lr = lr_orders(g);
    for (auto& o : lr.out) std::reverse(o.begin(), o.end());
    for (auto& i : lr.in) std::reverse(i.begin(), i.end());
    return plane_from_lr(g.n(), g.g.edges, lr);
}

PlaneStGraph reverse(const PlaneStGraph& g) {
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.g.edges) edges.emplace_back(v, u);
    return plane_from_rotation(g.n(), std::move(edges), g.t, g.s, g.rotation, g.outer_dart ^ 1);
}

DualGraph dual_graph(const PlaneStGraph& g) { return dual_graph(g, compute_faces(g)); }

DualGraph dual_graph(const PlaneStGraph& g, const FaceSet& fs) {
    DualGraph d;
    d.vertex_of_face.assign(fs.faces.size(), -1);
    for (const auto& f : fs.faces) {
        if (f.is_outer) continue;
        d.vertex_of_face[f.id] = static_cast<int>(d.face_of.size());
        d.face_of.push_back(f.id);
    }
    d.s_star = static_cast<int>(d.face_of.size());
    d.t_star = d.s_star + 1;
    d.face_of.push_back(-1);
    d.face_of.push_back(-1);
    d.n = static_cast<int>(d.face_of.size());
    for (int e = 0; e < g.m(); ++e) {
        int lf = fs.left_face(e), rf = fs.right_face(e);
        int a = lf == fs.outer ? d.s_star : d.vertex_of_face[lf];
        int b = rf == fs.outer ? d.t_star : d.vertex_of_face[rf];
        d.edges.emplace_back(a, b);
        d.primal_edge.push_back(e);
    }
    return d;
}

std::vector<int> face_schedule(const PlaneStGraph& g, const FaceSet& fs) {
    auto d = dual_graph(g, fs);
    std::vector<int> indeg(d.n, 0);
    std::vector<std::vector<int>> out(d.n);
    for (const auto& [a, b] : d.edges) {
        out[a].push_back(b);
        ++indeg[b];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < d.n; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        if (d.face_of[v] >= 0) order.push_back(d.face_of[v]);
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    return order;
}

const char* to_string(FaceKind k) {
    switch (k) {
        case FaceKind::GeneralizedTriangle: return "generalized_triangle";
        case FaceKind::Rhombus: return "rhombus";
        default: return "other";
    }
}

FaceClassification classify_faces(const PlaneStGraph& g) { return classify_faces(g, compute_faces(g)); }

FaceClassification classify_faces(const PlaneStGraph& g, const FaceSet& fs) {
    FaceClassification fc;
    for (const auto& f : fs.faces) {
        if (f.is_outer) continue;
        FaceClass c;
        c.face = f.id;
        int l = static_cast<int>(f.left_edges.size()), r = static_cast<int>(f.right_edges.size());
        if (l == 1 || r == 1) {
            c.kind = FaceKind::GeneralizedTriangle;
            c.single_edge_side = l == 1 ? 1 : 2;
        } else if (l == 2 && r == 2) {
            c.kind = FaceKind::Rhombus;
        }
        fc.classes.push_back(c);
    }
    for (int e = 0; e < g.m(); ++e) {
        int lf = fs.left_face(e), rf = fs.right_face(e);
        if (lf == fs.outer || rf == fs.outer) continue;
        if (fs.faces[lf].right_edges.size() == 1 && fs.faces[rf].left_edges.size() == 1) {
            fc.has_forbidden = true;
            fc.forbidden_edges.push_back(e);
        }
    }
    return fc;
}

}  // namespace ube
