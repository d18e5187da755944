#include "ube/fpt.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "ube/io.hpp"

namespace ube {

namespace {

Vis spine_letter(bool seen_l, bool seen_r) {
    if (seen_l && seen_r) return Vis::B;
    if (seen_l) return Vis::L;
    if (seen_r) return Vis::R;
    return Vis::N;
}

// Per active child: first letter (2 bits), seen L, seen R, had an event.
constexpr std::uint8_t kSeenL = 4, kSeenR = 8, kEvent = 16;

std::uint8_t see(std::uint8_t flags, Vis v) {
    if (v == Vis::L) return flags | kSeenL;
    if (v == Vis::R) return flags | kSeenR;
    return flags;
}

struct SweepState {
    std::vector<std::uint8_t> cut;   // active skeleton edges, left to right
    std::vector<std::uint8_t> info;  // parallel to cut
    std::uint8_t pos = 0;            // 2l: gap left of child l, 2l+1: inside child l
    std::uint8_t global = 0;         // first letter and seen flags of the node

    std::string key() const {
        std::string k;
        k.reserve(2 * cut.size() + 3);
        k.push_back(static_cast<char>(pos));
        k.push_back(static_cast<char>(global));
        for (size_t i = 0; i < cut.size(); ++i) {
            k.push_back(static_cast<char>(cut[i]));
            k.push_back(static_cast<char>(info[i]));
        }
        return k;
    }
};

// Letter of child l seen from spine position p.
Vis child_letter(int p, int l) {
    if (p < 2 * l + 1) return Vis::L;
    if (p == 2 * l + 1) return Vis::N;
    return Vis::R;
}

Vis global_letter(int p, int active) {
    if (p == 0) return Vis::L;
    if (p == 2 * active) return Vis::R;
    return Vis::N;
}

EmbeddingType finish(std::uint8_t flags, Vis last) {
    flags = see(flags, last);
    return {static_cast<Vis>(flags & 3), spine_letter(flags & kSeenL, flags & kSeenR), last};
}

TypeSet sweep(const SpqrNode& node, const LrOrders& lr, const std::vector<TypeSet>& types,
              const std::vector<bool>& is_q) {
    const int nv = static_cast<int>(node.vertices.size());
    std::map<int, int> local;
    for (int i = 0; i < nv; ++i) local[node.vertices[i]] = i;
    const int a = local.at(node.pole_s), b = local.at(node.pole_t);
    std::vector<int> head(node.skeleton_edges.size());
    for (size_t e = 0; e < node.skeleton_edges.size(); ++e) head[e] = local.at(node.skeleton_edges[e].second);

    TypeSet result;
    std::unordered_set<std::string> seen;
    std::vector<SweepState> work;
    auto push = [&](SweepState st) {
        if (seen.insert(st.key()).second) work.push_back(std::move(st));
    };

    // Replaces cut[i, i+len) by the out-edges of v and tries every new
    // spine position between them.
    auto open = [&](const SweepState& base, int i, int len, int v) {
        const auto& out = lr.out[v];
        const int o = static_cast<int>(out.size());
        SweepState st = base;
        st.cut.erase(st.cut.begin() + i, st.cut.begin() + i + len);
        st.info.erase(st.info.begin() + i, st.info.begin() + i + len);
        st.cut.insert(st.cut.begin() + i, out.begin(), out.end());
        st.info.insert(st.info.begin() + i, o, 0);
        const int active = static_cast<int>(st.cut.size());
        for (int p = 2 * i; p <= 2 * (i + o); ++p) {
            if (p % 2 == 1 && is_q[out[(p - 2 * i) / 2]]) continue;
            SweepState nx = st;
            nx.pos = static_cast<std::uint8_t>(p);
            for (int r = 0; r < o; ++r) {
                Vis x = child_letter(p, i + r);
                nx.info[i + r] = see(static_cast<std::uint8_t>(x), x);
            }
            Vis g = global_letter(p, active);
            nx.global = v == a ? see(static_cast<std::uint8_t>(g), g) : see(base.global, g);
            push(std::move(nx));
        }
    };

    SweepState init;
    open(init, 0, 0, a);
    std::vector<char> placed(nv, 0);
    while (!work.empty()) {
        SweepState st = std::move(work.back());
        work.pop_back();
        const int active = static_cast<int>(st.cut.size());
        const int p = st.pos;

        // An inner vertex of a child placed on the spine.
        for (int l = std::max(0, (p - 1) / 2); l < active && 2 * l <= p; ++l) {
            if (p > 2 * l + 2 || is_q[st.cut[l]]) continue;
            for (int np = 2 * l; np <= 2 * l + 2; ++np) {
                SweepState nx = st;
                nx.pos = static_cast<std::uint8_t>(np);
                nx.info[l] = see(nx.info[l] | kEvent, child_letter(np, l));
                nx.global = see(nx.global, global_letter(np, active));
                push(std::move(nx));
            }
        }

        // A skeleton vertex whose incoming edges are all in the cut.
        std::fill(placed.begin(), placed.end(), 0);
        for (int i = 0; i < active; ++i) {
            int v = head[st.cut[i]];
            if (placed[v]) continue;
            placed[v] = 1;
            const auto& in = lr.in[v];
            const int len = static_cast<int>(in.size());
            if (i + len > active || !std::equal(in.begin(), in.end(), st.cut.begin() + i)) continue;
            if (p < 2 * i || p > 2 * (i + len)) continue;
            bool ok = true;
            for (int r = 0; r < len && ok; ++r) {
                int e = st.cut[i + r];
                if (!is_q[e] && !(st.info[i + r] & kEvent)) ok = false;
                else ok = types[e].contains(finish(st.info[i + r], child_letter(p, i + r)));
            }
            if (!ok) continue;
            if (v == b) {
                if (len == active) result.insert(finish(st.global, global_letter(p, active)));
                continue;
            }
            open(st, i, len, v);
        }
    }
    return result;
}

}  // namespace

TypeSet r_node_types(const SpqrNode& node, const std::vector<TypeSet>& child_types,
                     const std::vector<bool>& child_is_q, EmbeddingMode mode) {
    if (node.type != SpqrType::R) throw std::invalid_argument("r_node_types needs an R-node");
    if (child_types.size() != node.children.size() || child_is_q.size() != node.children.size())
        throw std::invalid_argument("one type set per skeleton edge required");
    for (const auto& t : child_types)
        if (t.empty()) return {};
    TypeSet out = sweep(node, node.skeleton_lr, child_types, child_is_q);
    if (mode == EmbeddingMode::Variable) {
        LrOrders flipped = node.skeleton_lr;
        for (auto& lst : flipped.out) std::reverse(lst.begin(), lst.end());
        for (auto& lst : flipped.in) std::reverse(lst.begin(), lst.end());
        out |= sweep(node, flipped, child_types, child_is_q);
    }
    return out;
}

std::vector<TypeSet> spqr_node_types(const SpqrTree& tree, EmbeddingMode mode) {
    std::vector<TypeSet> types(tree.nodes.size());
    std::vector<char> done(tree.nodes.size(), 0);
    // Nodes are created parents first, except for the root.
    for (int id = static_cast<int>(tree.nodes.size()) - 1; id >= 0; --id) {
        if (id == tree.root) continue;
        const auto& nd = tree.nodes[id];
        std::vector<TypeSet> ch;
        std::vector<bool> q;
        for (int c : nd.children) {
            if (!done[c]) throw std::logic_error("child evaluated after its parent");
            ch.push_back(types[c]);
            q.push_back(tree.nodes[c].type == SpqrType::Q);
        }
        switch (nd.type) {
            case SpqrType::Q: types[id] = TypeSet::q_node(); break;
            case SpqrType::S: types[id] = s_node_compose(ch[0], ch[1]); break;
            case SpqrType::P:
                types[id] = mode == EmbeddingMode::Fixed ? p_node_types_fixed(ch, q) : p_node_types_variable(ch, q);
                break;
            case SpqrType::R: types[id] = r_node_types(nd, ch, q, mode); break;
        }
        done[id] = 1;
    }
    types[tree.root] = types[tree.root_child_id()];
    return types;
}

namespace {

// Labels vertices and edges in order of discovery by a breadth-first walk
// from the tail of the root edge, reading every rotation from the edge a
// vertex was reached by; the key lists the relabeled rotations.
std::vector<int> rooted_code(const PlaneMultigraph& g, int root_edge) {
    std::vector<int> vlabel(g.n, -1), elabel(g.m(), -1), entry(g.n, -1), queue;
    const int r = g.edges[root_edge].first;
    vlabel[r] = 0;
    entry[r] = root_edge;
    queue.push_back(r);
    int next_e = 0;
    std::vector<int> key{g.n, g.m()};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const int v = queue[qi];
        const auto& rot = g.rotation[v];
        const int k = static_cast<int>(rot.size());
        const int start = static_cast<int>(std::find(rot.begin(), rot.end(), entry[v]) - rot.begin());
        key.push_back(-1);
        for (int i = 0; i < k; ++i) {
            const int e = rot[(start + i) % k];
            const int w = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
            if (elabel[e] < 0) elabel[e] = next_e++;
            if (vlabel[w] < 0) {
                vlabel[w] = static_cast<int>(queue.size());
                entry[w] = e;
                queue.push_back(w);
            }
            key.push_back(elabel[e]);
        }
    }
    return key;
}

// Width of a validated sphere-cut decomposition; optimal widths are cached
// per rooted skeleton.
int skeleton_width(const PlaneMultigraph& sk) {
    static thread_local std::map<std::vector<int>, int> cache;
    auto key = rooted_code(sk, sk.m() - 1);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    auto scd = build_sphere_cut(sk, sk.m() - 1);
    auto issues = validate_sphere_cut(sk, scd);
    if (!issues.empty()) throw std::logic_error("invalid sphere-cut decomposition: " + issues.front());
    // Greedy widths may depend on the labeling; only optimal ones are shared.
    if (scd.exact) cache[key] = scd.width;
    return scd.width;
}

}  // namespace

FptResult test_2ube_fpt(const PlaneStGraph& g, EmbeddingMode mode) {
    FptResult r;
    r.tree = build_spqr(g);
    r.node_types = spqr_node_types(r.tree, mode);
    r.answer = !r.node_types[r.tree.root].empty();
    r.stats = spqr_stats(r.tree);
    for (int id = 0; id < static_cast<int>(r.tree.nodes.size()); ++id) {
        const auto& nd = r.tree.nodes[id];
        if (nd.type != SpqrType::R) continue;
        r.widths[id] = skeleton_width(skeleton_plus(nd));
    }
    return r;
}

FptResult test_2ube_fpt(const Digraph& g) { return test_2ube_fpt(embed_st_digraph(g), EmbeddingMode::Variable); }

}  // namespace ube
