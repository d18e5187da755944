#include "ube/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ube {

int Rng::below(int n) {
    if (n <= 0) throw std::invalid_argument("Rng::below requires n > 0");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return static_cast<int>(x % un);
}

StBuilder::StBuilder(int len) {
    if (len < 1) throw std::invalid_argument("path needs at least one edge");
    int prev = new_vertex();
    right_.push_back(prev);
    for (int i = 0; i < len; ++i) {
        int v = new_vertex();
        new_edge(prev, v);
        right_.push_back(v);
        prev = v;
    }
}

StBuilder::StBuilder(const PlaneStGraph& g) : n_(g.n()), edges_(g.g.edges), lr_(lr_orders(g)) {
    int v = g.s;
    right_.push_back(v);
    while (v != g.t) {
        int e = lr_.out[v].back();
        v = edges_[e].second;
        right_.push_back(v);
    }
}

int StBuilder::new_vertex() {
    lr_.out.emplace_back();
    lr_.in.emplace_back();
    return n_++;
}

int StBuilder::new_edge(int u, int v) {
    int e = static_cast<int>(edges_.size());
    edges_.emplace_back(u, v);
    lr_.out[u].push_back(e);
    lr_.in[v].push_back(e);
    return e;
}

bool StBuilder::has_edge(int u, int v) const {
    for (int e : lr_.out[u])
        if (edges_[e].second == v) return true;
    return false;
}

bool StBuilder::add_face(int i, int j, int k) {
    const int len = static_cast<int>(right_.size());
    if (i < 0 || j >= len || i >= j || k < 0) throw std::invalid_argument("invalid face attachment");
    int a = right_[i], b = right_[j];
    if (k == 0 && has_edge(a, b)) return false;
    std::vector<int> path{a};
    for (int r = 0; r < k; ++r) path.push_back(new_vertex());
    path.push_back(b);
    for (size_t r = 0; r + 1 < path.size(); ++r) new_edge(path[r], path[r + 1]);
    std::vector<int> nr(right_.begin(), right_.begin() + i + 1);
    nr.insert(nr.end(), path.begin() + 1, path.end() - 1);
    nr.insert(nr.end(), right_.begin() + j, right_.end());
    right_ = std::move(nr);
    return true;
}

PlaneStGraph StBuilder::build() const { return plane_from_lr(n_, edges_, lr_); }

PlaneStGraph rhombus_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("rhombus_grid needs rows, cols >= 1");
    auto id = [&](int i, int j) { return i * (cols + 1) + j; };
    int n = (rows + 1) * (cols + 1);
    std::vector<Edge> edges;
    LrOrders lr;
    lr.out.assign(n, {});
    lr.in.assign(n, {});
    std::map<Edge, int> eid;
    auto add = [&](int u, int v) {
        eid[{u, v}] = static_cast<int>(edges.size());
        edges.emplace_back(u, v);
    };
    for (int i = 0; i <= rows; ++i)
        for (int j = 0; j <= cols; ++j) {
            if (j < cols) add(id(i, j), id(i, j + 1));
            if (i < rows) add(id(i, j), id(i + 1, j));
        }
    // (i, j+1) lies up-left of (i, j); (i+1, j) up-right.
    for (int i = 0; i <= rows; ++i)
        for (int j = 0; j <= cols; ++j) {
            int v = id(i, j);
            if (j < cols) lr.out[v].push_back(eid[{v, id(i, j + 1)}]);
            if (i < rows) lr.out[v].push_back(eid[{v, id(i + 1, j)}]);
            if (i > 0) lr.in[v].push_back(eid[{id(i - 1, j), v}]);
            if (j > 0) lr.in[v].push_back(eid[{id(i, j - 1), v}]);
        }
    return plane_from_lr(n, edges, lr);
}

PlaneStGraph long_right_path(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("long_right_path needs n >= 3");
    Rng rng(seed);
    int budget = n - 2;
    int left_internal = budget <= 3 ? budget : rng.range(1, std::min(3, budget - 2));
    StBuilder b(left_internal + 1);
    budget -= left_internal;
    while (budget > 0) {
        int k;
        if (budget <= 4)
            k = budget;
        else
            k = rng.range(2, std::min(4, budget - 2));
        const auto& r = b.right_boundary();
        int len = static_cast<int>(r.size());
        // Attach over a subpath with at least two edges.
        int i = rng.range(0, len - 3);
        int j = rng.range(i + 2, std::min(len - 1, i + 4));
        b.add_face(i, j, k);
        budget -= k;
    }
    return b.build();
}

PlaneStGraph series_parallel(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("series_parallel needs n >= 2");
    Rng rng(seed);
    std::vector<Edge> edges{{0, 1}};
    LrOrders lr;
    lr.out = {{0}, {}};
    lr.in = {{}, {0}};
    int nv = 2;
    while (nv < n) {
        int e = rng.below(static_cast<int>(edges.size()));
        auto [u, v] = edges[e];
        int w = nv++;
        lr.out.emplace_back();
        lr.in.emplace_back();
        if (rng.coin()) {
            // Subdivide e = (u, v) into (u, w), (w, v).
            int e2 = static_cast<int>(edges.size());
            edges[e] = {u, w};
            edges.emplace_back(w, v);
            auto& inv = lr.in[v];
            *std::find(inv.begin(), inv.end(), e) = e2;
            lr.in[w] = {e};
            lr.out[w] = {e2};
        } else {
            // Parallel path u -> w -> v beside e.
            bool right = rng.coin();
            int e1 = static_cast<int>(edges.size());
            edges.emplace_back(u, w);
            int e2 = e1 + 1;
            edges.emplace_back(w, v);
            auto& ou = lr.out[u];
            auto pu = std::find(ou.begin(), ou.end(), e) + (right ? 1 : 0);
            ou.insert(pu, e1);
            auto& iv = lr.in[v];
            auto pv = std::find(iv.begin(), iv.end(), e) + (right ? 1 : 0);
            iv.insert(pv, e2);
            lr.in[w] = {e1};
            lr.out[w] = {e2};
        }
    }
    return plane_from_lr(n, edges, lr);
}

PlaneStGraph random_special_faces(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_special_faces needs n >= 2");
    Rng rng(seed);
    int budget = n - 2;
    int left_internal = rng.range(0, std::min(budget, 2));
    StBuilder b(left_internal + 1);
    budget -= left_internal;
    int guard = 0;
    while (budget > 0 || rng.coin(1, 3)) {
        if (++guard > 100000) throw std::runtime_error("random_special_faces failed to converge");
        int len = static_cast<int>(b.right_boundary().size());
        int shape = rng.below(3), i, j, k;
        if (shape == 0 && budget > 0 && len >= 3) {
            // Rhombus over two boundary edges.
            i = rng.range(0, len - 3);
            j = i + 2;
            k = 1;
        } else if (shape == 1 && budget > 0) {
            // Triangle over one boundary edge.
            i = rng.range(0, len - 2);
            j = i + 1;
            k = 1;
        } else if (len >= 3) {
            // Transitive edge over two or three boundary edges.
            i = rng.range(0, len - 3);
            j = rng.range(i + 2, std::min(len - 1, i + 3));
            k = 0;
        } else {
            continue;
        }
        if (b.add_face(i, j, k)) budget -= k;
    }
    return b.build();
}

PlaneStGraph random_planar_st(int n, std::uint64_t seed, RandomStOptions opt) {
    if (n < 2) throw std::invalid_argument("random_planar_st needs n >= 2");
    Rng rng(seed);
    if (n == 2) return StBuilder(1).build();
    int budget = n - 2;
    int left_internal = opt.triangulated ? 1 : rng.range(0, std::min(budget, 2));
    StBuilder b(left_internal + 1);
    budget -= left_internal;
    int guard = 0;
    while (budget > 0 || (opt.triangulated ? false : rng.coin(1, 4))) {
        if (++guard > 100000) throw std::runtime_error("random_planar_st failed to converge");
        const auto& r = b.right_boundary();
        int len = static_cast<int>(r.size());
        int k, i, j;
        if (opt.triangulated) {
            // Triangles only: one new vertex over an edge, or a chord over two edges.
            if (budget > 0 && (len < 3 || rng.coin(2, 3))) {
                i = rng.range(0, len - 2);
                j = i + 1;
                k = 1;
            } else if (len >= 3) {
                i = rng.range(0, len - 3);
                j = i + 2;
                k = 0;
            } else {
                continue;
            }
        } else {
            k = rng.range(0, std::min(budget, opt.max_new_vertices));
            if (k == 0 && len < 3) continue;
            i = rng.range(0, len - (k == 0 ? 3 : 2));
            j = rng.range(i + (k == 0 ? 2 : 1), std::min(len - 1, i + 3));
        }
        if (b.add_face(i, j, k)) budget -= k;
    }
    if (opt.triangulated) {
        // Close off the right boundary into triangles.
        for (;;) {
            const auto& r = b.right_boundary();
            if (r.size() < 3) break;
            bool done = true;
            for (size_t i = 0; i + 2 < r.size(); ++i) {
                if (b.add_face(static_cast<int>(i), static_cast<int>(i + 2), 0)) {
                    done = false;
                    break;
                }
            }
            if (done) break;
        }
    }
    return b.build();
}

namespace {

std::vector<int> code_from_lr(int n, const std::vector<Edge>& edges, const LrOrders& lr, int s) {
    std::vector<int> label(n, -1), order;
    label[s] = 0;
    order.push_back(s);
    for (size_t q = 0; q < order.size(); ++q) {
        int v = order[q];
        auto visit = [&](int w) {
            if (label[w] < 0) {
                label[w] = static_cast<int>(order.size());
                order.push_back(w);
            }
        };
        for (int e : lr.out[v]) visit(edges[e].second);
        for (int e : lr.in[v]) visit(edges[e].first);
    }
    std::vector<int> code{n, static_cast<int>(edges.size())};
    for (int v : order) {
        code.push_back(static_cast<int>(lr.out[v].size()));
        for (int e : lr.out[v]) code.push_back(label[edges[e].second]);
        code.push_back(static_cast<int>(lr.in[v].size()));
        for (int e : lr.in[v]) code.push_back(label[edges[e].first]);
    }
    return code;
}

}  // namespace

std::vector<int> canonical_code(const PlaneStGraph& g) {
    return code_from_lr(g.n(), g.g.edges, lr_orders(g), g.s);
}

std::vector<int> canonical_code_up_to_mirror(const PlaneStGraph& g) {
    auto lr = lr_orders(g);
    auto a = code_from_lr(g.n(), g.g.edges, lr, g.s);
    for (auto& o : lr.out) std::reverse(o.begin(), o.end());
    for (auto& i : lr.in) std::reverse(i.begin(), i.end());
    auto b = code_from_lr(g.n(), g.g.edges, lr, g.s);
    return std::min(a, b);
}

std::vector<std::vector<PlaneStGraph>> exhaustive_upto(int nmax, bool include_mirrors) {
    std::vector<std::vector<PlaneStGraph>> pool(std::max(nmax, 1) + 1);
    for_each_plane_st_graph(nmax, include_mirrors, [&](const PlaneStGraph& g) { pool[g.n()].push_back(g); });
    return pool;
}

namespace {

// True iff the face just attached over right-boundary positions [i, i+k+1]
// is the topmost removable face: no face above it has its whole right path
// on the right boundary. Consecutive right-boundary edges share their left
// face iff the vertex between them has in- and out-degree 1; that face
// extends below the run iff the run's bottom vertex has out-degree 1, and
// above it iff the top vertex has in-degree 1.
bool is_canonical_attachment(const StBuilder& b, int i, int k) {
    const auto& r = b.right_boundary();
    const auto& lr = b.lr();
    const auto& edges = b.edges();
    const int len = static_cast<int>(r.size());
    const int end = i + k + 1;
    if (end + 1 >= len) return true;
    std::vector<char> left_boundary(edges.size(), 0);
    for (int v = r.front(); !lr.out[v].empty(); v = edges[lr.out[v].front()].second)
        left_boundary[lr.out[v].front()] = 1;
    int pos = end;
    while (pos + 1 < len) {
        const int bottom = r[pos];
        if (left_boundary[lr.out[bottom].back()]) {
            ++pos;
            continue;
        }
        ++pos;
        while (pos + 1 < len && lr.in[r[pos]].size() == 1 && lr.out[r[pos]].size() == 1) ++pos;
        const bool below = lr.out[bottom].size() == 1;
        const bool above = lr.in[r[pos]].size() == 1;
        if (!below && !above) return false;
    }
    return true;
}

void grow(const StBuilder& base, const PlaneStGraph& g, int nmax, bool include_mirrors,
          const std::function<void(const PlaneStGraph&)>& visit) {
    if (include_mirrors) {
        visit(g);
    } else {
        auto lr = base.lr();
        auto a = code_from_lr(g.n(), base.edges(), lr, g.s);
        for (auto& o : lr.out) std::reverse(o.begin(), o.end());
        for (auto& in : lr.in) std::reverse(in.begin(), in.end());
        if (a <= code_from_lr(g.n(), base.edges(), lr, g.s)) visit(g);
    }
    const int len = static_cast<int>(base.right_boundary().size());
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            for (int k = 0; base.n() + k <= nmax; ++k) {
                StBuilder b = base;
                if (!b.add_face(i, j, k)) continue;
                if (is_canonical_attachment(b, i, k)) grow(b, b.build(), nmax, include_mirrors, visit);
            }
}

}  // namespace

void for_each_plane_st_graph(int nmax, bool include_mirrors,
                             const std::function<void(const PlaneStGraph&)>& visit) {
    if (nmax < 2) throw std::invalid_argument("exhaustive enumeration needs n >= 2");
    for (int n = 2; n <= nmax; ++n) {
        StBuilder path(n - 1);
        grow(path, path.build(), nmax, include_mirrors, visit);
    }
}

std::vector<PlaneStGraph> exhaustive_small(int n, bool include_mirrors) {
    std::vector<PlaneStGraph> out;
    for_each_plane_st_graph(n, include_mirrors, [&](const PlaneStGraph& g) {
        if (g.n() == n) out.push_back(g);
    });
    return out;
}

}  // namespace ube
