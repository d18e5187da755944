#include "ube/sphere_cut.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace ube {

int PlaneMultigraph::dart_head(int d) const { return d % 2 == 0 ? edges[d / 2].second : edges[d / 2].first; }

int PlaneMultigraph::next_dart(int d) const {
    int h = dart_head(d);
    int e = d / 2;
    const auto& rot = rotation[h];
    auto it = std::find(rot.begin(), rot.end(), e);
    if (it == rot.end()) throw std::logic_error("edge missing from the rotation of its endpoint");
    if (it == rot.begin()) it = rot.end();
    int e2 = *--it;
    return 2 * e2 + (edges[e2].first == h ? 0 : 1);
}

std::vector<std::vector<int>> PlaneMultigraph::faces() const {
    std::vector<char> seen(2 * edges.size(), 0);
    std::vector<std::vector<int>> out;
    for (int d0 = 0; d0 < 2 * m(); ++d0) {
        if (seen[d0]) continue;
        std::vector<int> f;
        for (int d = d0; !seen[d]; d = next_dart(d)) {
            seen[d] = 1;
            f.push_back(d);
        }
        out.push_back(std::move(f));
    }
    return out;
}

PlaneMultigraph to_multigraph(const PlaneStGraph& g) { return {g.n(), g.g.edges, g.rotation}; }

PlaneMultigraph skeleton_plus(const SpqrNode& node) {
    PlaneMultigraph g;
    g.n = static_cast<int>(node.vertices.size());
    std::map<int, int> local;
    for (int i = 0; i < g.n; ++i) local[node.vertices[i]] = i;
    for (auto [u, v] : node.skeleton_edges) g.edges.emplace_back(local.at(u), local.at(v));
    const int ref = g.m();
    const int s = local.at(node.pole_s), t = local.at(node.pole_t);
    g.edges.emplace_back(s, t);
    // Clockwise: outgoing left to right, then incoming right to left.
    g.rotation.assign(g.n, {});
    for (int v = 0; v < g.n; ++v) {
        auto& rot = g.rotation[v];
        if (v == s) rot.push_back(ref);
        rot.insert(rot.end(), node.skeleton_lr.out[v].begin(), node.skeleton_lr.out[v].end());
        rot.insert(rot.end(), node.skeleton_lr.in[v].rbegin(), node.skeleton_lr.in[v].rend());
        if (v == t) rot.push_back(ref);
    }
    return g;
}

namespace {

bool side_connected(const PlaneMultigraph& g, const std::vector<char>& side, char which) {
    std::vector<int> parent(g.n);
    for (int v = 0; v < g.n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int root = -1;
    for (int e = 0; e < g.m(); ++e)
        if (side[e] == which) {
            parent[find(g.edges[e].first)] = find(g.edges[e].second);
            root = g.edges[e].first;
        }
    if (root < 0) return false;
    for (int e = 0; e < g.m(); ++e)
        if (side[e] == which && find(g.edges[e].first) != find(root)) return false;
    return true;
}

}  // namespace

std::vector<int> noose_order(const PlaneMultigraph& g, const std::vector<std::vector<int>>& faces,
                             const std::vector<char>& side) {
    if (!side_connected(g, side, 1) || !side_connected(g, side, 0)) return {};
    std::vector<int> next(g.n, -1), exits(g.n, 0), enters(g.n, 0);
    for (const auto& f : faces) {
        int exit_v = -1, enter_v = -1, corners = 0;
        for (size_t i = 0; i < f.size(); ++i) {
            int d1 = f[i], d2 = f[(i + 1) % f.size()];
            if (side[d1 / 2] == side[d2 / 2]) continue;
            ++corners;
            (side[d1 / 2] ? exit_v : enter_v) = g.dart_head(d1);
        }
        if (corners == 0) continue;
        if (corners != 2 || exit_v < 0 || enter_v < 0) return {};
        if (next[exit_v] >= 0) return {};
        next[exit_v] = enter_v;
        ++exits[exit_v];
        ++enters[enter_v];
    }
    int start = -1, mids = 0;
    for (int v = 0; v < g.n; ++v) {
        if (exits[v] != enters[v] || exits[v] > 1) return {};
        if (exits[v]) {
            ++mids;
            if (start < 0) start = v;
        }
    }
    if (start < 0) return {};
    std::vector<int> order;
    int v = start;
    do {
        order.push_back(v);
        v = next[v];
    } while (v != start && static_cast<int>(order.size()) <= mids);
    if (static_cast<int>(order.size()) != mids) return {};
    return order;
}

namespace {

class Builder {
public:
    Builder(const PlaneMultigraph& g, SphereCutDecomposition& d) : g_(g), d_(d), faces_(g.faces()) {}

    std::vector<int> noose(const std::vector<int>& edges) const {
        std::vector<char> side(g_.m(), 0);
        for (int e : edges) side[e] = 1;
        return noose_order(g_, faces_, side);
    }

    int leaf(int e, int parent) {
        ScNode nd;
        nd.parent = parent;
        nd.edge = e;
        nd.mid = noose({e});
        d_.nodes.push_back(std::move(nd));
        int id = static_cast<int>(d_.nodes.size()) - 1;
        if (parent >= 0) d_.nodes[parent].children.push_back(id);
        return id;
    }

    int inner(std::vector<int> mid, int parent) {
        ScNode nd;
        nd.parent = parent;
        nd.mid = std::move(mid);
        d_.nodes.push_back(std::move(nd));
        int id = static_cast<int>(d_.nodes.size()) - 1;
        d_.nodes[parent].children.push_back(id);
        return id;
    }

    // Exhaustive search over subsets of `edges` (at most 20 of them); the
    // two parts of the best split go below `parent`.
    void exact(const std::vector<int>& edges, int parent) {
        const int k = static_cast<int>(edges.size());
        const std::uint32_t full = (1u << k) - 1;
        auto to_edges = [&](std::uint32_t mask) {
            std::vector<int> out;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) out.push_back(edges[i]);
            return out;
        };
        std::vector<int> mid_size(full + 1, -1);  // -1: not a noose
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            auto order = noose(to_edges(mask));
            if (!order.empty()) mid_size[mask] = static_cast<int>(order.size());
        }
        std::vector<int> best(full + 1, -1), choice(full + 1, 0);
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            if (mid_size[mask] < 0) continue;
            if ((mask & (mask - 1)) == 0) {
                best[mask] = mid_size[mask];
                continue;
            }
            std::uint32_t low = mask & (~mask + 1);
            for (std::uint32_t y = (mask - 1) & mask; y; y = (y - 1) & mask) {
                if (!(y & low)) continue;
                std::uint32_t z = mask ^ y;
                if (best[y] < 0 || best[z] < 0) continue;
                int w = std::max({mid_size[mask], best[y], best[z]});
                if (best[mask] < 0 || w < best[mask]) {
                    best[mask] = w;
                    choice[mask] = static_cast<int>(y);
                }
            }
        }
        if (best[full] < 0) throw std::runtime_error("no sphere-cut decomposition found");
        std::function<void(std::uint32_t, int)> emit = [&](std::uint32_t mask, int par) {
            if ((mask & (mask - 1)) == 0) {
                leaf(to_edges(mask)[0], par);
                return;
            }
            int id = inner(noose(to_edges(mask)), par);
            emit(static_cast<std::uint32_t>(choice[mask]), id);
            emit(mask ^ static_cast<std::uint32_t>(choice[mask]), id);
        };
        emit(static_cast<std::uint32_t>(choice[full]), parent);
        emit(full ^ static_cast<std::uint32_t>(choice[full]), parent);
    }

    // Splits recursively, choosing among sets grown edge by edge from every
    // seed the split with the smallest larger noose.
    void greedy(const std::vector<int>& edges, int parent) {
        if (edges.size() == 1) {
            leaf(edges[0], parent);
            return;
        }
        const int k = static_cast<int>(edges.size());
        std::vector<int> best_y;
        int best_w = 1 << 30, best_balance = 1 << 30;
        for (int seed : edges) {
            std::vector<char> in_y(g_.m(), 0);
            std::vector<int> y{seed};
            in_y[seed] = 1;
            while (static_cast<int>(y.size()) < k) {
                std::vector<int> z;
                for (int e : edges)
                    if (!in_y[e]) z.push_back(e);
                auto ny = noose(y), nz = noose(z);
                if (!ny.empty() && !nz.empty()) {
                    int w = static_cast<int>(std::max(ny.size(), nz.size()));
                    int balance = std::abs(k - 2 * static_cast<int>(y.size()));
                    if (w < best_w || (w == best_w && balance < best_balance)) {
                        best_w = w;
                        best_balance = balance;
                        best_y = y;
                    }
                }
                // Next edge: touching y, keeping the vertex boundary small.
                int pick = -1, pick_score = 1 << 30;
                for (int e : z) {
                    auto [u, v] = g_.edges[e];
                    bool touch = false;
                    for (int f : y) {
                        auto [a, b] = g_.edges[f];
                        touch = touch || u == a || u == b || v == a || v == b;
                    }
                    if (!touch) continue;
                    in_y[e] = 1;
                    int score = boundary_size(in_y);
                    in_y[e] = 0;
                    if (score < pick_score) {
                        pick_score = score;
                        pick = e;
                    }
                }
                if (pick < 0) break;
                in_y[pick] = 1;
                y.push_back(pick);
            }
        }
        if (best_y.empty()) throw std::runtime_error("greedy sphere-cut split failed");
        std::vector<char> in_y(g_.m(), 0);
        for (int e : best_y) in_y[e] = 1;
        std::vector<int> z;
        for (int e : edges)
            if (!in_y[e]) z.push_back(e);
        for (const auto& part : {best_y, z}) {
            if (part.size() == 1) {
                leaf(part[0], parent);
            } else {
                int id = inner(noose(part), parent);
                greedy(part, id);
            }
        }
    }

private:
    const PlaneMultigraph& g_;
    SphereCutDecomposition& d_;
    std::vector<std::vector<int>> faces_;

    // Vertices with edges both in y and outside y.
    int boundary_size(const std::vector<char>& in_y) const {
        std::vector<char> a(g_.n, 0), b(g_.n, 0);
        for (int e = 0; e < g_.m(); ++e) {
            auto& side = in_y[e] ? a : b;
            side[g_.edges[e].first] = side[g_.edges[e].second] = 1;
        }
        int c = 0;
        for (int v = 0; v < g_.n; ++v) c += a[v] && b[v];
        return c;
    }
};

}  // namespace

SphereCutDecomposition build_sphere_cut(const PlaneMultigraph& g, int root_edge, SphereCutOptions opt) {
    if (g.m() < 2) throw std::invalid_argument("sphere-cut decomposition needs at least two edges");
    if (root_edge < 0 || root_edge >= g.m()) throw std::invalid_argument("root edge out of range");
    if (static_cast<int>(g.rotation.size()) != g.n) throw std::invalid_argument("rotation size mismatch");
    int darts = 0;
    for (int v = 0; v < g.n; ++v) {
        if (g.rotation[v].size() == 1) throw std::invalid_argument("vertex of degree one");
        darts += static_cast<int>(g.rotation[v].size());
    }
    if (darts != 2 * g.m()) throw std::invalid_argument("rotation does not list every edge twice");
    if (g.n - g.m() + static_cast<int>(g.faces().size()) != 2) throw std::invalid_argument("embedding is not planar");

    SphereCutDecomposition d;
    Builder b(g, d);
    d.root = b.leaf(root_edge, -1);
    std::vector<int> rest;
    for (int e = 0; e < g.m(); ++e)
        if (e != root_edge) rest.push_back(e);
    if (opt.exact_limit > 20) throw std::invalid_argument("exhaustive search is limited to 20 edges");
    d.exact = static_cast<int>(rest.size()) <= opt.exact_limit;
    if (rest.size() == 1) {
        b.leaf(rest[0], d.root);
    } else {
        int top = b.inner(b.noose(rest), d.root);
        d.exact ? b.exact(rest, top) : b.greedy(rest, top);
    }
    for (const auto& nd : d.nodes)
        if (nd.parent >= 0) d.width = std::max(d.width, static_cast<int>(nd.mid.size()));
    return d;
}

std::vector<std::string> validate_sphere_cut(const PlaneMultigraph& g, const SphereCutDecomposition& d) {
    std::vector<std::string> issues;
    const int nn = static_cast<int>(d.nodes.size());
    if (d.root < 0 || d.root >= nn) return {"root out of range"};
    std::vector<int> leaf_of(g.m(), -1);
    std::vector<std::vector<char>> sides(nn, std::vector<char>(g.m(), 0));
    std::vector<char> visited(nn, 0);
    bool shape_ok = true;
    std::function<void(int)> walk = [&](int id) {
        if (visited[id]) {
            shape_ok = false;
            return;
        }
        visited[id] = 1;
        const auto& nd = d.nodes[id];
        const size_t want = id == d.root ? 1 : (nd.edge >= 0 ? 0 : 2);
        if (nd.children.size() != want) {
            issues.push_back("node " + std::to_string(id) + " has " + std::to_string(nd.children.size()) +
                             " children");
            shape_ok = false;
        }
        if (nd.edge >= 0) {
            if (nd.edge >= g.m() || leaf_of[nd.edge] >= 0) {
                issues.push_back("leaf edges are not a bijection");
                shape_ok = false;
                return;
            }
            leaf_of[nd.edge] = id;
            sides[id][nd.edge] = 1;
        }
        for (int c : nd.children) {
            if (c < 0 || c >= nn || d.nodes[c].parent != id) {
                issues.push_back("broken parent link at node " + std::to_string(id));
                shape_ok = false;
                continue;
            }
            walk(c);
            for (int e = 0; e < g.m(); ++e) sides[id][e] |= sides[c][e];
        }
    };
    if (d.nodes[d.root].edge < 0) issues.push_back("root is not a leaf");
    walk(d.root);
    for (int e = 0; e < g.m(); ++e)
        if (leaf_of[e] < 0) {
            issues.push_back("edge " + std::to_string(e) + " has no leaf");
            shape_ok = false;
        }
    for (int i = 0; i < nn; ++i)
        if (!visited[i]) {
            issues.push_back("node " + std::to_string(i) + " unreachable");
            shape_ok = false;
        }
    if (!shape_ok) return issues;

    auto faces = g.faces();
    int width = 0;
    for (int id = 0; id < nn; ++id) {
        if (id == d.root) continue;
        auto order = noose_order(g, faces, sides[id]);
        if (order.empty()) {
            issues.push_back("noose condition violated at node " + std::to_string(id));
            continue;
        }
        width = std::max(width, static_cast<int>(order.size()));
        const auto& stored = d.nodes[id].mid;
        bool same = stored.size() == order.size();
        if (same && !order.empty()) {
            auto it = std::find(stored.begin(), stored.end(), order[0]);
            same = it != stored.end();
            if (same) {
                std::vector<int> rotated(it, stored.end());
                rotated.insert(rotated.end(), stored.begin(), it);
                same = rotated == order;
            }
        }
        if (!same) issues.push_back("middle set or its noose order differs at node " + std::to_string(id));
    }
    // Laminarity: arc sides are nested or disjoint.
    for (int i = 0; i < nn; ++i)
        for (int j = i + 1; j < nn; ++j) {
            if (i == d.root || j == d.root) continue;
            bool inter = false, i_sub = true, j_sub = true;
            for (int e = 0; e < g.m(); ++e) {
                inter = inter || (sides[i][e] && sides[j][e]);
                i_sub = i_sub && (!sides[i][e] || sides[j][e]);
                j_sub = j_sub && (!sides[j][e] || sides[i][e]);
            }
            if (inter && !i_sub && !j_sub) issues.push_back("nooses cross");
        }
    if (width != d.width) issues.push_back("stored width differs");
    return issues;
}

}  // namespace ube
