#include "ube/book.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ube {

std::vector<int> BookEmbedding::positions(int n) const {
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i)
        if (order[i] >= 0 && order[i] < n) pos[order[i]] = i;
    return pos;
}

bool edges_conflict(const std::vector<int>& pos, Edge a, Edge b) {
    auto [u, v] = a;
    auto [w, z] = b;
    if (u == w || u == z || v == w || v == z) return false;
    int pu = pos[u], pv = pos[v], pw = pos[w], pz = pos[z];
    return (pu < pw && pw < pv && pv < pz) || (pw < pu && pu < pz && pz < pv);
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Found: return "found";
        case SolveStatus::None: return "none";
        case SolveStatus::Unknown: return "unknown";
    }
    return "?";
}

VerifyReport verify_kube(const Digraph& g, const BookEmbedding& be) {
    VerifyReport r;
    if (be.k < 1) {
        r.message = "page count must be at least 1";
        return r;
    }
    if (static_cast<int>(be.order.size()) != g.n) {
        r.message = "order has " + std::to_string(be.order.size()) + " vertices, graph has " + std::to_string(g.n);
        return r;
    }
    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < g.n; ++i) {
        int v = be.order[i];
        if (v < 0 || v >= g.n || pos[v] >= 0) {
            r.message = "order is not a permutation of the vertices";
            return r;
        }
        pos[v] = i;
    }
    if (static_cast<int>(be.page.size()) != g.m()) {
        r.message = "page assignment does not cover every edge";
        return r;
    }
    for (int e = 0; e < g.m(); ++e) {
        if (be.page[e] < 1 || be.page[e] > be.k) {
            r.message = "edge " + std::to_string(e) + " has page " + std::to_string(be.page[e]) + " outside 1.." +
                        std::to_string(be.k);
            r.edge_a = e;
            return r;
        }
        if (pos[g.edges[e].first] >= pos[g.edges[e].second]) {
            r.message = "edge " + std::to_string(e) + " points downward";
            r.edge_a = e;
            return r;
        }
    }
    for (int a = 0; a < g.m(); ++a)
        for (int b = a + 1; b < g.m(); ++b)
            if (be.page[a] == be.page[b] && edges_conflict(pos, g.edges[a], g.edges[b])) {
                r.message = "edges " + std::to_string(a) + " and " + std::to_string(b) + " cross on page " +
                            std::to_string(be.page[a]);
                r.edge_a = a;
                r.edge_b = b;
                return r;
            }
    r.valid = true;
    return r;
}

namespace {

LrOrders canonical_lr(const Digraph& g, const BookEmbedding& be) {
    auto pos = be.positions(g.n);
    auto outs = g.out_edges();
    auto ins = g.in_edges();
    LrOrders lr;
    lr.out.assign(g.n, {});
    lr.in.assign(g.n, {});
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> lo, ro, li, ri;
        for (int e : outs[v]) (be.page[e] == 1 ? lo : ro).push_back(e);
        for (int e : ins[v]) (be.page[e] == 1 ? li : ri).push_back(e);
        auto head = [&](int e) { return pos[g.edges[e].second]; };
        auto tail = [&](int e) { return pos[g.edges[e].first]; };
        std::sort(lo.begin(), lo.end(), [&](int a, int b) { return head(a) > head(b); });
        std::sort(ro.begin(), ro.end(), [&](int a, int b) { return head(a) < head(b); });
        std::sort(li.begin(), li.end(), [&](int a, int b) { return tail(a) < tail(b); });
        std::sort(ri.begin(), ri.end(), [&](int a, int b) { return tail(a) > tail(b); });
        lr.out[v] = lo;
        lr.out[v].insert(lr.out[v].end(), ro.begin(), ro.end());
        lr.in[v] = li;
        lr.in[v].insert(lr.in[v].end(), ri.begin(), ri.end());
    }
    return lr;
}

}  // namespace

PlaneStGraph induced_embedding(const Digraph& g, const BookEmbedding& be) {
    if (be.k > 2) throw std::invalid_argument("induced embedding needs at most 2 pages");
    auto rep = verify_kube(g, be);
    if (!rep.valid) throw std::invalid_argument("invalid book embedding: " + rep.message);
    auto lr = canonical_lr(g, be);
    std::vector<std::vector<int>> rot(g.n);
    for (int v = 0; v < g.n; ++v) {
        rot[v] = lr.out[v];
        rot[v].insert(rot[v].end(), lr.in[v].rbegin(), lr.in[v].rend());
    }
    return plane_from_rotation(g.n, g.edges, be.order.front(), be.order.back(), std::move(rot));
}

bool same_embedding(const PlaneStGraph& a, const PlaneStGraph& b) {
    if (a.n() != b.n() || a.g.edges != b.g.edges || a.s != b.s || a.t != b.t) return false;
    auto la = lr_orders(a), lb = lr_orders(b);
    return la.out == lb.out && la.in == lb.in;
}

bool is_embedding_preserving(const PlaneStGraph& g, const BookEmbedding& be) {
    if (be.k > 2 || !verify_kube(g.g, be).valid) return false;
    return same_embedding(g, induced_embedding(g.g, be));
}

void normalize_spine_edges(const Digraph& g, BookEmbedding& be) {
    auto pos = be.positions(g.n);
    for (int e = 0; e < g.m(); ++e)
        if (pos[g.edges[e].second] == pos[g.edges[e].first] + 1) be.page[e] = 1;
}

namespace {

std::vector<std::vector<char>> reachability(const Digraph& g) {
    auto topo = g.topological_order();
    if (!topo) throw std::invalid_argument("graph has a cycle");
    auto outs = g.out_edges();
    std::vector<std::vector<char>> reach(g.n, std::vector<char>(g.n, 0));
    for (auto it = topo->rbegin(); it != topo->rend(); ++it) {
        int v = *it;
        for (int e : outs[v]) {
            int w = g.edges[e].second;
            reach[v][w] = 1;
            for (int x = 0; x < g.n; ++x)
                if (reach[w][x]) reach[v][x] = 1;
        }
    }
    return reach;
}

// Spine extension with pages fixed when an edge opens. An edge closing at v
// must not have a later-opened edge on its page still open.
class PageSearch {
public:
    using Visitor = std::function<bool(const BookEmbedding&)>;

    PageSearch(const Digraph& g, int k, const LrOrders* fixed, std::int64_t budget,
               Visitor visit)
        : g_(g), k_(k), fixed_(fixed), budget_(budget), visit_(std::move(visit)),
          reach_(reachability(g)) {
        const int n = g.n;
        if (fixed_) {
            out_ = fixed_->out;
            in_ = fixed_->in;
        } else {
            out_ = g.out_edges();
            in_ = g.in_edges();
        }
        out_rank_.assign(g.m(), 0);
        in_rank_.assign(g.m(), 0);
        for (int v = 0; v < n; ++v) {
            for (int i = 0; i < static_cast<int>(out_[v].size()); ++i) out_rank_[out_[v][i]] = i;
            for (int i = 0; i < static_cast<int>(in_[v].size()); ++i) in_rank_[in_[v][i]] = i;
        }
        pos_.assign(n, -1);
        remaining_in_.assign(n, 0);
        for (int v = 0; v < n; ++v) remaining_in_[v] = static_cast<int>(in_[v].size());
        page_.assign(g.m(), 0);
        open_.assign(k + 1, {});
    }

    SolveStatus run() {
        bool stopped = dfs();
        if (aborted_) return SolveStatus::Unknown;
        return stopped ? SolveStatus::Found : SolveStatus::None;
    }

    std::int64_t nodes() const { return nodes_; }

private:
    const Digraph& g_;
    int k_;
    const LrOrders* fixed_;
    std::int64_t budget_;
    Visitor visit_;
    std::vector<std::vector<char>> reach_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<int> out_rank_, in_rank_;
    std::vector<int> pos_, remaining_in_, page_, order_;
    std::vector<std::vector<int>> open_;
    std::int64_t nodes_ = 0;
    bool aborted_ = false;

    int tail(int e) const { return g_.edges[e].first; }
    int head(int e) const { return g_.edges[e].second; }

    bool can_close(int v) const {
        for (int p = 1; p <= k_; ++p) {
            int umin = -1;
            for (int e : open_[p])
                if (head(e) == v && (umin < 0 || pos_[tail(e)] < umin)) umin = pos_[tail(e)];
            if (umin < 0) continue;
            for (int e : open_[p])
                if (head(e) != v && pos_[tail(e)] > umin) return false;
        }
        if (fixed_) {
            for (int e : in_[v]) {
                int u = tail(e);
                for (int e2 : out_[u]) {
                    if (e2 == e || page_[e2] != page_[e] || pos_[head(e2)] >= 0) continue;
                    // Left-page heads decrease left to right, right-page heads increase.
                    if (page_[e] == 1 && out_rank_[e2] > out_rank_[e]) return false;
                    if (page_[e] == 2 && out_rank_[e2] < out_rank_[e]) return false;
                }
            }
        }
        return true;
    }

    bool can_open(int e, int p) const {
        const int v = tail(e), z = head(e);
        for (int e2 : open_[p]) {
            int u = tail(e2), w = head(e2);
            if (u == v || w == z) continue;
            if (reach_[w][z]) return false;
        }
        if (fixed_) {
            for (int e3 : in_[z]) {
                if (e3 == e || page_[e3] == 0) continue;
                if (p == 1 && page_[e3] == 2 && in_rank_[e3] < in_rank_[e]) return false;
                if (p == 2 && page_[e3] == 1 && in_rank_[e3] > in_rank_[e]) return false;
                if (p == 1 && page_[e3] == 1 && in_rank_[e3] > in_rank_[e]) return false;
                if (p == 2 && page_[e3] == 2 && in_rank_[e3] < in_rank_[e]) return false;
            }
            for (int e2 : out_[v]) {
                if (e2 == e || page_[e2] != p) continue;
                int z2 = head(e2);
                if (p == 1 && out_rank_[e2] < out_rank_[e] && reach_[z2][z]) return false;
                if (p == 2 && out_rank_[e2] < out_rank_[e] && reach_[z][z2]) return false;
            }
        }
        return true;
    }

    bool assign(int v, size_t idx) {
        if (idx == out_[v].size()) {
            if (++nodes_ > budget_) {
                aborted_ = true;
                return true;
            }
            return dfs();
        }
        const int e = out_[v][idx];
        int lo = 1;
        const int hi = k_;
        if (fixed_ && idx > 0 && page_[out_[v][idx - 1]] == 2) lo = 2;
        for (int p = lo; p <= hi; ++p) {
            if (!can_open(e, p)) continue;
            page_[e] = p;
            open_[p].push_back(e);
            bool stop = assign(v, idx + 1);
            open_[p].pop_back();
            page_[e] = 0;
            if (stop) return true;
        }
        return false;
    }

    bool dfs() {
        const int n = g_.n;
        if (static_cast<int>(order_.size()) == n) {
            BookEmbedding be{k_, order_, page_};
            return !visit_(be);
        }
        for (int v = 0; v < n; ++v) {
            if (pos_[v] >= 0 || remaining_in_[v] != 0) continue;
            if (!can_close(v)) continue;
            auto saved = open_;
            for (int p = 1; p <= k_; ++p) {
                auto& o = open_[p];
                o.erase(std::remove_if(o.begin(), o.end(), [&](int e) { return head(e) == v; }), o.end());
            }
            pos_[v] = static_cast<int>(order_.size());
            order_.push_back(v);
            for (int e : out_[v]) --remaining_in_[head(e)];
            bool stop = assign(v, 0);
            for (int e : out_[v]) ++remaining_in_[head(e)];
            order_.pop_back();
            pos_[v] = -1;
            open_ = std::move(saved);
            if (stop) return true;
        }
        return false;
    }
};

// Union-find over edges with parity and rollback: parity 1 = different pages.
class ParityDsu {
public:
    explicit ParityDsu(int n) : parent_(n), rank_(n, 0), parity_(n, 0) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    std::pair<int, int> find(int x) const {
        int p = 0;
        while (parent_[x] != x) {
            p ^= parity_[x];
            x = parent_[x];
        }
        return {x, p};
    }

    // Records that a and b lie on different pages; false on contradiction.
    bool separate(int a, int b) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return pa != pb;
        if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
        history_.push_back({rb, rank_[ra] == rank_[rb] ? ra : -1});
        parent_[rb] = ra;
        parity_[rb] = pa ^ pb ^ 1;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
        return true;
    }

    size_t mark() const { return history_.size(); }

    void rollback(size_t m) {
        while (history_.size() > m) {
            auto [child, bumped] = history_.back();
            history_.pop_back();
            if (bumped >= 0) --rank_[bumped];
            parent_[child] = child;
            parity_[child] = 0;
        }
    }

private:
    std::vector<int> parent_, rank_, parity_;
    std::vector<std::pair<int, int>> history_;
};

// Two pages, free embedding: extend the spine and keep the conflict graph
// bipartite.
class ParitySearch {
public:
    ParitySearch(const Digraph& g, std::int64_t budget)
        : g_(g), budget_(budget), reach_(reachability(g)), outs_(g.out_edges()), ins_(g.in_edges()), dsu_(g.m()) {
        pos_.assign(g.n, -1);
        remaining_in_.assign(g.n, 0);
        for (int v = 0; v < g.n; ++v) remaining_in_[v] = static_cast<int>(ins_[v].size());
    }

    SolveStatus run() {
        bool found = dfs();
        if (aborted_) return SolveStatus::Unknown;
        return found ? SolveStatus::Found : SolveStatus::None;
    }

    BookEmbedding witness() const { return witness_; }
    std::int64_t nodes() const { return nodes_; }

private:
    const Digraph& g_;
    std::int64_t budget_;
    std::vector<std::vector<char>> reach_;
    std::vector<std::vector<int>> outs_, ins_;
    ParityDsu dsu_;
    std::vector<int> pos_, remaining_in_, order_, open_;
    BookEmbedding witness_;
    std::int64_t nodes_ = 0;
    bool aborted_ = false;

    int tail(int e) const { return g_.edges[e].first; }
    int head(int e) const { return g_.edges[e].second; }

    bool place(int v) {
        for (int e : ins_[v]) {
            int pu = pos_[tail(e)];
            for (int e2 : open_) {
                if (head(e2) == v || tail(e2) == tail(e)) continue;
                if (pos_[tail(e2)] > pu && !dsu_.separate(e, e2)) return false;
            }
        }
        open_.erase(std::remove_if(open_.begin(), open_.end(), [&](int e) { return head(e) == v; }), open_.end());
        pos_[v] = static_cast<int>(order_.size());
        order_.push_back(v);
        for (int e : outs_[v]) {
            int z = head(e);
            for (int e2 : open_) {
                int u = tail(e2), w = head(e2);
                if (u == v || w == z) continue;
                if (reach_[w][z] && !dsu_.separate(e, e2)) return false;
            }
        }
        for (int e : outs_[v]) open_.push_back(e);
        return true;
    }

    void finish() {
        witness_.k = 2;
        witness_.order = order_;
        witness_.page.assign(g_.m(), 0);
        std::vector<int> flip(g_.m(), -1);
        for (int e = 0; e < g_.m(); ++e) {
            auto [r, p] = dsu_.find(e);
            if (flip[r] < 0) flip[r] = p;
            witness_.page[e] = 1 + (p ^ flip[r]);
        }
    }

    bool dfs() {
        if (static_cast<int>(order_.size()) == g_.n) {
            finish();
            return true;
        }
        for (int v = 0; v < g_.n; ++v) {
            if (pos_[v] >= 0 || remaining_in_[v] != 0) continue;
            if (++nodes_ > budget_) {
                aborted_ = true;
                return true;
            }
            size_t mark = dsu_.mark();
            auto saved_open = open_;
            bool ok = place(v);
            bool stop = false;
            if (ok) {
                for (int e : outs_[v]) --remaining_in_[head(e)];
                stop = dfs();
                for (int e : outs_[v]) ++remaining_in_[head(e)];
            }
            if (pos_[v] >= 0) {
                order_.pop_back();
                pos_[v] = -1;
            }
            open_ = std::move(saved_open);
            dsu_.rollback(mark);
            if (stop) return true;
        }
        return false;
    }
};

// Three or more pages, free embedding: extend the spine, collect the
// conflicts the prefix already determines and keep them k-colorable. Pages
// are chosen only for complete orders.
class OrderSearch {
public:
    OrderSearch(const Digraph& g, int k, std::int64_t budget)
        : g_(g), k_(k), budget_(budget), reach_(reachability(g)), outs_(g.out_edges()), ins_(g.in_edges()),
          adj_(g.m()), color_(g.m(), 0) {
        pos_.assign(g.n, -1);
        remaining_in_.assign(g.n, 0);
        for (int v = 0; v < g.n; ++v) remaining_in_[v] = static_cast<int>(ins_[v].size());
    }

    SolveStatus run() {
        bool found = dfs();
        if (aborted_) return SolveStatus::Unknown;
        return found ? SolveStatus::Found : SolveStatus::None;
    }

    BookEmbedding witness() const { return witness_; }
    std::int64_t nodes() const { return nodes_; }

private:
    const Digraph& g_;
    int k_;
    std::int64_t budget_;
    std::vector<std::vector<char>> reach_;
    std::vector<std::vector<int>> outs_, ins_;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> added_;
    std::vector<int> color_;  // pages 1..k of a coloring of the known conflicts, 0 if isolated
    std::vector<int> pos_, remaining_in_, order_, open_;
    BookEmbedding witness_;
    std::int64_t nodes_ = 0;
    bool aborted_ = false;

    int tail(int e) const { return g_.edges[e].first; }
    int head(int e) const { return g_.edges[e].second; }

    void conflict(int a, int b) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
        added_.emplace_back(a, b);
    }

    void undo(size_t mark) {
        while (added_.size() > mark) {
            auto [a, b] = added_.back();
            added_.pop_back();
            adj_[a].pop_back();
            adj_[b].pop_back();
        }
    }

    // Exact k-coloring of the conflict graph, most constrained edge first.
    bool recolor() {
        std::vector<int> active;
        for (int e = 0; e < g_.m(); ++e)
            if (!adj_[e].empty()) active.push_back(e);
        std::vector<int> col(g_.m(), 0);
        std::function<bool(int, int)> go = [&](int done, int used) -> bool {
            if (done == static_cast<int>(active.size())) return true;
            int best = -1, best_sat = -1, best_deg = -1;
            for (int e : active) {
                if (col[e] != 0) continue;
                unsigned seen = 0;
                for (int f : adj_[e])
                    if (col[f] != 0) seen |= 1u << col[f];
                int sat = __builtin_popcount(seen);
                int deg = static_cast<int>(adj_[e].size());
                if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                    best = e;
                    best_sat = sat;
                    best_deg = deg;
                }
            }
            unsigned seen = 0;
            for (int f : adj_[best])
                if (col[f] != 0) seen |= 1u << col[f];
            for (int p = 1; p <= std::min(k_, used + 1); ++p) {
                if (seen & (1u << p)) continue;
                col[best] = p;
                if (go(done + 1, std::max(used, p))) return true;
            }
            col[best] = 0;
            return false;
        };
        if (!go(0, 0)) return false;
        color_ = std::move(col);
        return true;
    }

    // Pages of the current coloring, relabeled in order of first use.
    void finish() {
        std::vector<int> label(k_ + 1, 0), page(g_.m(), 1);
        int next = 0;
        for (int e = 0; e < g_.m(); ++e) {
            if (color_[e] == 0) continue;
            if (label[color_[e]] == 0) label[color_[e]] = ++next;
            page[e] = label[color_[e]];
        }
        witness_ = {k_, order_, page};
    }

    void place(int v) {
        for (int e : ins_[v]) {
            const int pu = pos_[tail(e)];
            for (int e2 : open_) {
                const int w = tail(e2), z = head(e2);
                if (z == v || w == tail(e) || pos_[w] < pu) continue;
                if (!reach_[v][z]) conflict(e, e2);
            }
        }
        open_.erase(std::remove_if(open_.begin(), open_.end(), [&](int e) { return head(e) == v; }), open_.end());
        pos_[v] = static_cast<int>(order_.size());
        order_.push_back(v);
        for (int e : outs_[v]) {
            const int z = head(e);
            for (int e2 : open_) {
                const int u = tail(e2), w = head(e2);
                if (u == v || w == z) continue;
                if (reach_[w][z]) conflict(e2, e);
            }
        }
        for (int e : outs_[v]) open_.push_back(e);
    }

    bool dfs() {
        if (static_cast<int>(order_.size()) == g_.n) {
            finish();
            return true;
        }
        for (int v = 0; v < g_.n; ++v) {
            if (pos_[v] >= 0 || remaining_in_[v] != 0) continue;
            if (++nodes_ > budget_) {
                aborted_ = true;
                return true;
            }
            const size_t mark = added_.size();
            auto saved_open = open_;
            auto saved_color = color_;
            place(v);
            bool ok = true;
            for (size_t i = mark; i < added_.size() && ok; ++i) {
                auto [a, b] = added_[i];
                if (color_[a] == 0 || color_[b] == 0 || color_[a] == color_[b]) ok = recolor();
            }
            bool stop = false;
            if (ok) {
                for (int e : outs_[v]) --remaining_in_[head(e)];
                stop = dfs();
                for (int e : outs_[v]) ++remaining_in_[head(e)];
            }
            order_.pop_back();
            pos_[v] = -1;
            open_ = std::move(saved_open);
            color_ = std::move(saved_color);
            undo(mark);
            if (stop) return true;
        }
        return false;
    }
};

void check_k(int k) {
    if (k < 1) throw std::invalid_argument("page count must be at least 1");
}

}  // namespace

SolveResult solve_kube_brute(const Digraph& g, int k, std::int64_t budget) {
    check_k(k);
    SolveResult res;
    if (k == 2) {
        ParitySearch search(g, budget);
        res.status = search.run();
        res.nodes = search.nodes();
        if (res.status == SolveStatus::Found) res.embedding = search.witness();
    } else {
        OrderSearch search(g, k, budget);
        res.status = search.run();
        res.nodes = search.nodes();
        if (res.status == SolveStatus::Found) res.embedding = search.witness();
    }
    if (res.embedding) normalize_spine_edges(g, *res.embedding);
    return res;
}

SolveResult solve_kube_brute(const PlaneStGraph& g, int k, EmbeddingMode mode, std::int64_t budget) {
    if (mode == EmbeddingMode::Variable) return solve_kube_brute(g.g, k, budget);
    check_k(k);
    if (k > 2) throw std::invalid_argument("fixed embedding mode needs at most 2 pages");
    auto lr = lr_orders(g);
    SolveResult res;
    BookEmbedding found;
    PageSearch search(g.g, k, &lr, budget, [&](const BookEmbedding& be) {
        found = be;
        return false;
    });
    res.status = search.run();
    res.nodes = search.nodes();
    if (res.status == SolveStatus::Found) {
        normalize_spine_edges(g.g, found);
        res.embedding = found;
    }
    return res;
}

SolveStatus for_each_kube(const Digraph& g, int k, const PlaneStGraph* fixed, std::int64_t budget,
                          const std::function<bool(const BookEmbedding&)>& visit) {
    check_k(k);
    std::optional<LrOrders> lr;
    if (fixed) {
        if (k > 2) throw std::invalid_argument("fixed embedding mode needs at most 2 pages");
        lr = lr_orders(*fixed);
    }
    PageSearch search(g, k, lr ? &*lr : nullptr, budget, visit);
    return search.run();
}

HpCompletion two_ube_to_hp_completion(const PlaneStGraph& g, const BookEmbedding& be) {
    if (be.k > 2) throw std::invalid_argument("HP-completion needs at most 2 pages");
    auto rep = verify_kube(g.g, be);
    if (!rep.valid) throw std::invalid_argument("invalid book embedding: " + rep.message);
    const int n = g.n();
    auto lr = canonical_lr(g.g, be);
    HpCompletion hc;
    hc.path = be.order;
    std::vector<Edge> edges = g.g.edges;
    // Spine edges sit between the left-page and right-page edges.
    for (int i = 0; i + 1 < n; ++i) {
        int u = be.order[i], v = be.order[i + 1];
        if (g.g.find_edge(u, v) >= 0) continue;
        int e = static_cast<int>(edges.size());
        edges.emplace_back(u, v);
        hc.dummy_edges.push_back(e);
        auto& o = lr.out[u];
        auto it = std::find_if(o.begin(), o.end(), [&](int x) { return be.page[x] != 1; });
        o.insert(it, e);
        auto& in = lr.in[v];
        auto jt = std::find_if(in.begin(), in.end(), [&](int x) { return be.page[x] != 1; });
        in.insert(jt, e);
    }
    hc.graph = plane_from_lr(n, std::move(edges), lr);
    return hc;
}

BookEmbedding hp_completion_to_2ube(const PlaneStGraph& g, const PlaneStGraph& completion,
                                    const std::vector<int>& path) {
    const int n = g.n();
    auto rep = validate_plane_st_graph(completion);
    if (!rep.ok()) throw std::invalid_argument("completion is not a plane st-graph: " + rep.issues.front());
    if (completion.n() != n || static_cast<int>(path.size()) != n)
        throw std::invalid_argument("path is not Hamiltonian");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (path[i] < 0 || path[i] >= n || pos[path[i]] >= 0) throw std::invalid_argument("path is not Hamiltonian");
        pos[path[i]] = i;
    }
    std::vector<int> path_edge(n, -1);
    for (int i = 0; i + 1 < n; ++i) {
        int e = completion.g.find_edge(path[i], path[i + 1]);
        if (e < 0) throw std::invalid_argument("path is not a directed path of the completion");
        path_edge[path[i]] = e;
    }
    auto lr = lr_orders(completion);
    BookEmbedding be;
    be.k = 2;
    be.order = path;
    be.page.assign(g.m(), 1);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.g.edges[e];
        int ce = completion.g.find_edge(u, v);
        if (ce < 0) throw std::invalid_argument("completion does not contain the graph");
        if (ce == path_edge[u]) continue;
        const auto& o = lr.out[u];
        auto ie = std::find(o.begin(), o.end(), ce);
        auto ip = std::find(o.begin(), o.end(), path_edge[u]);
        be.page[e] = ie < ip ? 1 : 2;
    }
    return be;
}

}  // namespace ube
