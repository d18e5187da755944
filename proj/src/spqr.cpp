#include "ube/spqr.hpp"

#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace ube {

const char* to_string(SpqrType t) {
    switch (t) {
        case SpqrType::S: return "S";
        case SpqrType::P: return "P";
        case SpqrType::Q: return "Q";
        case SpqrType::R: return "R";
    }
    return "?";
}

namespace {

class Builder {
public:
    Builder(SpqrTree& tree, std::vector<int> topo_pos) : tree_(tree), topo_(std::move(topo_pos)) {
        out_rank_.assign(tree.edges.size(), 0);
        for (const auto& lst : tree.lr.out)
            for (size_t i = 0; i < lst.size(); ++i) out_rank_[lst[i]] = static_cast<int>(i);
    }

    int build(const std::vector<int>& es, int a, int b) {
        if (es.empty()) throw std::logic_error("empty split component");
        if (es.size() == 1) return make_q(es[0]);
        auto classes = edge_classes(es, {a, b}, std::nullopt);
        if (classes.size() >= 2) return make_p(classes, a, b);
        int c = lowest_cut_vertex(es, a, b);
        if (c >= 0) return make_s(es, a, b, c);
        return make_r(es, a, b);
    }

    int make_q(int e) {
        SpqrNode nd;
        nd.type = SpqrType::Q;
        nd.edge = e;
        nd.pole_s = tree_.edges[e].first;
        nd.pole_t = tree_.edges[e].second;
        nd.vertices = {nd.pole_s, nd.pole_t};
        nd.skeleton_edges = {tree_.edges[e]};
        return push(std::move(nd));
    }

private:
    SpqrTree& tree_;
    std::vector<int> topo_;
    std::vector<int> out_rank_;

    int push(SpqrNode nd) {
        tree_.nodes.push_back(std::move(nd));
        return static_cast<int>(tree_.nodes.size()) - 1;
    }

    void attach(int parent, int child) {
        tree_.nodes[child].parent = parent;
        tree_.nodes[parent].children.push_back(child);
        tree_.nodes[parent].skeleton_edges.push_back({tree_.nodes[child].pole_s, tree_.nodes[child].pole_t});
    }

    // Groups the edges; two edges are grouped when they share a vertex
    // outside `cut`. A reference edge, reported as -1, joins when given.
    std::vector<std::vector<int>> edge_classes(const std::vector<int>& es, const std::set<int>& cut,
                                               std::optional<Edge> ref) const {
        std::vector<Edge> ends;
        for (int e : es) ends.push_back(tree_.edges[e]);
        if (ref) ends.push_back(*ref);
        const int k = static_cast<int>(ends.size());
        std::vector<int> rank(k), parent(k);
        boost::disjoint_sets<int*, int*> ds(rank.data(), parent.data());
        for (int i = 0; i < k; ++i) ds.make_set(i);
        std::map<int, int> first;
        for (int i = 0; i < k; ++i)
            for (int v : {ends[i].first, ends[i].second}) {
                if (cut.count(v)) continue;
                auto [it, fresh] = first.emplace(v, i);
                if (!fresh) ds.union_set(it->second, i);
            }
        std::map<int, std::vector<int>> groups;
        for (int i = 0; i < k; ++i) groups[ds.find_set(i)].push_back(i);
        std::vector<std::vector<int>> out;
        for (auto& [rep, idx] : groups) {
            std::vector<int> cls;
            for (int i : idx) cls.push_back(i < static_cast<int>(es.size()) ? es[i] : -1);
            out.push_back(std::move(cls));
        }
        return out;
    }

    std::vector<int> vertices_of(const std::vector<int>& es) const {
        std::set<int> vs;
        for (int e : es) {
            vs.insert(tree_.edges[e].first);
            vs.insert(tree_.edges[e].second);
        }
        return {vs.begin(), vs.end()};
    }

    bool connected_without(const std::vector<int>& es, int a, int b, int skip) const {
        std::map<int, std::vector<int>> adj;
        for (int e : es) {
            auto [u, v] = tree_.edges[e];
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::set<int> seen{a};
        std::vector<int> stack{a};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            if (u == b) return true;
            for (int w : adj[u])
                if (w != skip && seen.insert(w).second) stack.push_back(w);
        }
        return false;
    }

    int lowest_cut_vertex(const std::vector<int>& es, int a, int b) const {
        int best = -1;
        for (int c : vertices_of(es)) {
            if (c == a || c == b) continue;
            if (!connected_without(es, a, b, c) && (best < 0 || topo_[c] < topo_[best])) best = c;
        }
        return best;
    }

    int min_out_rank(const std::vector<int>& cls, int a) const {
        int best = 1 << 30;
        for (int e : cls)
            if (tree_.edges[e].first == a) best = std::min(best, out_rank_[e]);
        if (best == 1 << 30) throw std::logic_error("parallel component without an edge out of its lower pole");
        return best;
    }

    int make_p(std::vector<std::vector<int>> classes, int a, int b) {
        std::sort(classes.begin(), classes.end(),
                  [&](const auto& x, const auto& y) { return min_out_rank(x, a) < min_out_rank(y, a); });
        SpqrNode nd;
        nd.type = SpqrType::P;
        nd.pole_s = a;
        nd.pole_t = b;
        nd.vertices = {a, b};
        int id = push(std::move(nd));
        for (const auto& cls : classes) attach(id, build(cls, a, b));
        return id;
    }

    int make_s(const std::vector<int>& es, int a, int b, int c) {
        // Edges on a's side of c.
        std::map<int, std::vector<int>> adj;
        for (int e : es) {
            auto [u, v] = tree_.edges[e];
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        std::set<int> side{a};
        std::vector<int> stack{a};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (w != c && side.insert(w).second) stack.push_back(w);
        }
        std::vector<int> lower, upper;
        for (int e : es) {
            auto [u, v] = tree_.edges[e];
            (side.count(u) || side.count(v) ? lower : upper).push_back(e);
        }
        SpqrNode nd;
        nd.type = SpqrType::S;
        nd.pole_s = a;
        nd.pole_t = b;
        nd.vertices = {a, c, b};
        int id = push(std::move(nd));
        attach(id, build(lower, a, c));
        attach(id, build(upper, c, b));
        return id;
    }

    int make_r(const std::vector<int>& es, int a, int b) {
        auto vs = vertices_of(es);
        // Split components hanging off a separation pair, on the side away
        // from the poles.
        struct Candidate {
            int x, y;
            std::vector<int> edges;
        };
        std::vector<Candidate> cands;
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j) {
                int x = vs[i], y = vs[j];
                if ((x == a && y == b) || (x == b && y == a)) continue;
                auto classes = edge_classes(es, {x, y}, Edge{a, b});
                std::vector<int> h;
                for (const auto& cls : classes) {
                    if (std::find(cls.begin(), cls.end(), -1) != cls.end()) continue;
                    h.insert(h.end(), cls.begin(), cls.end());
                }
                if (h.size() >= 2) {
                    std::sort(h.begin(), h.end());
                    cands.push_back({x, y, std::move(h)});
                }
            }
        std::sort(cands.begin(), cands.end(),
                  [](const Candidate& p, const Candidate& q) { return p.edges.size() > q.edges.size(); });
        std::vector<Candidate> chosen;
        std::set<int> covered;
        for (auto& c : cands) {
            int inside = 0;
            for (int e : c.edges) inside += covered.count(e) ? 1 : 0;
            if (inside == static_cast<int>(c.edges.size())) continue;
            if (inside != 0) throw std::logic_error("overlapping split components in a rigid node");
            covered.insert(c.edges.begin(), c.edges.end());
            chosen.push_back(std::move(c));
        }
        std::set<int> interior;
        for (const auto& c : chosen)
            for (int v : vertices_of(c.edges))
                if (v != c.x && v != c.y) interior.insert(v);

        SpqrNode nd;
        nd.type = SpqrType::R;
        nd.pole_s = a;
        nd.pole_t = b;
        for (int v : vs)
            if (!interior.count(v)) nd.vertices.push_back(v);
        int id = push(std::move(nd));
        std::map<int, int> edge_slot;  // graph edge -> skeleton edge index
        for (const auto& c : chosen) {
            // The lower pole has no incoming edge inside the component.
            bool x_has_in = false;
            for (int e : c.edges) x_has_in = x_has_in || tree_.edges[e].second == c.x;
            int lo = x_has_in ? c.y : c.x, hi = x_has_in ? c.x : c.y;
            int child = build(c.edges, lo, hi);
            int slot = static_cast<int>(tree_.nodes[id].children.size());
            attach(id, child);
            for (int e : c.edges) edge_slot[e] = slot;
        }
        for (int e : es)
            if (!covered.count(e)) {
                int slot = static_cast<int>(tree_.nodes[id].children.size());
                attach(id, make_q(e));
                edge_slot[e] = slot;
            }
        auto& node = tree_.nodes[id];
        node.skeleton_lr.out.assign(node.vertices.size(), {});
        node.skeleton_lr.in.assign(node.vertices.size(), {});
        for (size_t i = 0; i < node.vertices.size(); ++i) {
            int v = node.vertices[i];
            auto project = [&](const std::vector<int>& lst, std::vector<int>& dst) {
                for (int e : lst) {
                    auto it = edge_slot.find(e);
                    if (it == edge_slot.end()) continue;
                    if (dst.empty() || dst.back() != it->second) dst.push_back(it->second);
                }
            };
            project(tree_.lr.out[v], node.skeleton_lr.out[i]);
            project(tree_.lr.in[v], node.skeleton_lr.in[i]);
        }
        return id;
    }
};

void collect_edges(const SpqrTree& tree, int node, std::vector<int>& out) {
    const auto& nd = tree.nodes[node];
    if (nd.type == SpqrType::Q) out.push_back(nd.edge);
    for (int c : nd.children) collect_edges(tree, c, out);
}

}  // namespace

SpqrTree build_spqr(const PlaneStGraph& g) {
    require_valid(g);
    SpqrTree tree;
    tree.n = g.n();
    tree.edges = g.g.edges;
    tree.ref_edge = g.m();
    tree.edges.emplace_back(g.s, g.t);
    tree.lr = lr_orders(g);
    tree.lr.out[g.s].insert(tree.lr.out[g.s].begin(), tree.ref_edge);
    tree.lr.in[g.t].insert(tree.lr.in[g.t].begin(), tree.ref_edge);
    auto topo = g.g.topological_order();
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[(*topo)[i]] = i;
    Builder b(tree, pos);
    tree.root = b.make_q(tree.ref_edge);
    std::vector<int> all(g.m());
    for (int e = 0; e < g.m(); ++e) all[e] = e;
    int child = b.build(all, g.s, g.t);
    tree.nodes[child].parent = tree.root;
    tree.nodes[tree.root].children.push_back(child);
    return tree;
}

std::vector<int> pertinent_edges(const SpqrTree& tree, int node) {
    std::vector<int> out;
    collect_edges(tree, node, out);
    std::sort(out.begin(), out.end());
    return out;
}

Pertinent pertinent_graph(const SpqrTree& tree, int node) {
    if (node == tree.root) throw std::invalid_argument("the root has no pertinent graph");
    Pertinent p;
    p.edge = pertinent_edges(tree, node);
    std::set<int> vs;
    for (int e : p.edge) {
        vs.insert(tree.edges[e].first);
        vs.insert(tree.edges[e].second);
    }
    p.vertex.assign(vs.begin(), vs.end());
    std::map<int, int> local;
    for (size_t i = 0; i < p.vertex.size(); ++i) local[p.vertex[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (int e : p.edge) edges.emplace_back(local[tree.edges[e].first], local[tree.edges[e].second]);
    p.graph = Digraph(static_cast<int>(p.vertex.size()), edges);
    p.s = local[tree.nodes[node].pole_s];
    p.t = local[tree.nodes[node].pole_t];
    return p;
}

PlaneStGraph pertinent_plane(const SpqrTree& tree, int node) {
    auto p = pertinent_graph(tree, node);
    std::map<int, int> local_edge;
    for (size_t i = 0; i < p.edge.size(); ++i) local_edge[p.edge[i]] = static_cast<int>(i);
    LrOrders lr;
    lr.out.assign(p.vertex.size(), {});
    lr.in.assign(p.vertex.size(), {});
    for (size_t i = 0; i < p.vertex.size(); ++i) {
        for (int e : tree.lr.out[p.vertex[i]])
            if (local_edge.count(e)) lr.out[i].push_back(local_edge[e]);
        for (int e : tree.lr.in[p.vertex[i]])
            if (local_edge.count(e)) lr.in[i].push_back(local_edge[e]);
    }
    return plane_from_lr(p.graph.n, p.graph.edges, lr);
}

std::vector<int> reassemble(const SpqrTree& tree) {
    // Expands skeletons top-down: each skeleton edge is replaced by the
    // skeleton of its child until only real edges remain.
    std::vector<int> out;
    std::function<void(int)> expand = [&](int node) {
        const auto& nd = tree.nodes[node];
        if (nd.type == SpqrType::Q) out.push_back(nd.edge);
        for (int c : nd.children) expand(c);
    };
    expand(tree.root);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> validate_spqr(const SpqrTree& tree) {
    std::vector<std::string> issues;
    auto where = [](int id) { return "node " + std::to_string(id) + ": "; };
    for (int id = 0; id < static_cast<int>(tree.nodes.size()); ++id) {
        const auto& nd = tree.nodes[id];
        if (nd.children.size() != nd.skeleton_edges.size() && nd.type != SpqrType::Q)
            issues.push_back(where(id) + "skeleton and children disagree");
        for (size_t i = 0; i < nd.children.size(); ++i) {
            const auto& ch = tree.nodes[nd.children[i]];
            if (ch.parent != id) issues.push_back(where(id) + "child with wrong parent");
            if (nd.type != SpqrType::Q && nd.skeleton_edges[i] != Edge{ch.pole_s, ch.pole_t})
                issues.push_back(where(id) + "virtual edge does not match child poles");
        }
        switch (nd.type) {
            case SpqrType::Q:
                if (id != tree.root && !nd.children.empty()) issues.push_back(where(id) + "Q-node with children");
                if (tree.edges[nd.edge] != Edge{nd.pole_s, nd.pole_t}) issues.push_back(where(id) + "Q-node poles");
                break;
            case SpqrType::S:
                if (nd.children.size() != 2) issues.push_back(where(id) + "S-node without exactly two children");
                else if (tree.nodes[nd.children[0]].pole_s != nd.pole_s ||
                         tree.nodes[nd.children[0]].pole_t != tree.nodes[nd.children[1]].pole_s ||
                         tree.nodes[nd.children[1]].pole_t != nd.pole_t)
                    issues.push_back(where(id) + "S-node children do not chain");
                break;
            case SpqrType::P:
                if (nd.children.size() < 2) issues.push_back(where(id) + "P-node with fewer than two children");
                for (int c : nd.children)
                    if (tree.nodes[c].pole_s != nd.pole_s || tree.nodes[c].pole_t != nd.pole_t)
                        issues.push_back(where(id) + "P-node child with other poles");
                break;
            case SpqrType::R:
                if (nd.vertices.size() < 4) issues.push_back(where(id) + "R-node skeleton too small");
                for (size_t i = 0; i < nd.vertices.size(); ++i) {
                    size_t deg = nd.skeleton_lr.out[i].size() + nd.skeleton_lr.in[i].size();
                    int v = nd.vertices[i];
                    size_t expect = 0;
                    for (auto [u, w] : nd.skeleton_edges) expect += (u == v) + (w == v);
                    if (deg != expect) issues.push_back(where(id) + "skeleton rotation incomplete");
                }
                break;
        }
    }
    auto edges = reassemble(tree);
    std::vector<int> expect(tree.edges.size());
    for (size_t i = 0; i < expect.size(); ++i) expect[i] = static_cast<int>(i);
    if (edges != expect) issues.push_back("reassembled edge set differs from the graph");
    // Pertinent graphs run from the lower to the upper pole.
    for (int id = 0; id < static_cast<int>(tree.nodes.size()); ++id) {
        if (id == tree.root) continue;
        auto p = pertinent_graph(tree, id);
        auto ins = p.graph.in_edges(), outs = p.graph.out_edges();
        for (int v = 0; v < p.graph.n; ++v) {
            if (ins[v].empty() != (v == p.s)) issues.push_back(where(id) + "pertinent graph source is not the pole");
            if (outs[v].empty() != (v == p.t)) issues.push_back(where(id) + "pertinent graph sink is not the pole");
        }
    }
    return issues;
}

std::uint64_t count_embeddings(const SpqrTree& tree) {
    std::uint64_t total = 1;
    for (const auto& nd : tree.nodes) {
        if (nd.type == SpqrType::P)
            for (size_t i = 2; i <= nd.children.size(); ++i) total *= i;
        if (nd.type == SpqrType::R) total *= 2;
    }
    return total;
}

SpqrStats spqr_stats(const SpqrTree& tree) {
    SpqrStats st;
    for (const auto& nd : tree.nodes) {
        switch (nd.type) {
            case SpqrType::S: ++st.s; break;
            case SpqrType::P: ++st.p; break;
            case SpqrType::Q: ++st.q; break;
            case SpqrType::R:
                ++st.r;
                st.max_r_skeleton = std::max(st.max_r_skeleton, static_cast<int>(nd.vertices.size()));
                break;
        }
    }
    return st;
}

}  // namespace ube
