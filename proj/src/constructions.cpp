#include "ube/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ube {

namespace {

struct Dummy {
    int from, to, face;
};

class Completion {
public:
    explicit Completion(const PlaneStGraph& g) : g_(g), fs_(compute_faces(g)), lr_(lr_orders(g)) {
        succ_.assign(g.n(), -1);
        // The left boundary is the initial path.
        boundary_.push_back(g.s);
        for (int v = g.s; v != g.t;) {
            int w = g.g.edges[lr_.out[v].front()].second;
            succ_[v] = w;
            boundary_.push_back(w);
            v = w;
        }
    }

    const FaceSet& faces() const { return fs_; }
    std::vector<int> schedule() const { return face_schedule(g_, fs_); }

    bool on_path(int u, int v) const { return succ_[u] == v; }

    // Position of the face's left path on the current right boundary.
    int locate(const Face& f) const {
        auto it = std::find(boundary_.begin(), boundary_.end(), f.source);
        if (it == boundary_.end()) throw std::logic_error("face source is not on the right boundary");
        int i = static_cast<int>(it - boundary_.begin());
        for (size_t j = 0; j < f.left_path.size(); ++j)
            if (i + j >= boundary_.size() || boundary_[i + j] != f.left_path[j])
                throw std::logic_error("face left path is not on the right boundary");
        return i;
    }

    // The boundary edge entering the face source / leaving its sink is on
    // the path, or absent.
    bool before_on_path(int i) const { return i == 0 || on_path(boundary_[i - 1], boundary_[i]); }
    bool after_on_path(int j) const {
        return j + 1 == static_cast<int>(boundary_.size()) || on_path(boundary_[j], boundary_[j + 1]);
    }

    // Replaces path edge (a,b) by the walk a, w..., b.
    void bypass(int a, const std::vector<int>& walk, int b, int face) {
        if (!on_path(a, b)) throw std::logic_error("bypassed edge is not on the path");
        int prev = a;
        for (int w : walk) {
            link(prev, w, face);
            prev = w;
        }
        link(prev, b, face);
    }

    void replace_boundary(int i, const Face& f) {
        boundary_.erase(boundary_.begin() + i, boundary_.begin() + i + static_cast<long>(f.left_path.size()));
        boundary_.insert(boundary_.begin() + i, f.right_path.begin(), f.right_path.end());
    }

    void check_invariant(ConstructionStats* stats) const {
        for (size_t i = 0; i + 2 < boundary_.size(); ++i)
            if (!on_path(boundary_[i], boundary_[i + 1]) && !on_path(boundary_[i + 1], boundary_[i + 2]))
                throw std::logic_error("two consecutive right-boundary edges off the path at vertex " +
                                       std::to_string(boundary_[i + 1]));
        if (stats) ++stats->invariant_checks;
    }

    HpCompletion finish() {
        HpCompletion hc;
        for (int v = g_.s; v >= 0; v = succ_[v]) hc.path.push_back(v);
        if (static_cast<int>(hc.path.size()) != g_.n()) throw std::logic_error("path is not Hamiltonian");
        std::vector<Edge> edges = g_.g.edges;
        for (const auto& d : dummies_) {
            const Face& f = fs_.faces[d.face];
            int e = static_cast<int>(edges.size());
            edges.emplace_back(d.from, d.to);
            hc.dummy_edges.push_back(e);
            // Next to the face's own boundary edge at each endpoint: on the
            // right of a left-path edge, on the left of a right-path edge.
            auto place = [&](std::vector<int>& lst, int v, bool out) {
                for (const auto* path : {&f.left_edges, &f.right_edges}) {
                    for (int x : *path) {
                        if ((out ? g_.g.edges[x].first : g_.g.edges[x].second) != v) continue;
                        auto it = std::find(lst.begin(), lst.end(), x);
                        lst.insert(path == &f.left_edges ? it + 1 : it, e);
                        return;
                    }
                }
                throw std::logic_error("dummy edge endpoint is not on its face");
            };
            place(lr_.out[d.from], d.from, true);
            place(lr_.in[d.to], d.to, false);
        }
        hc.graph = plane_from_lr(g_.n(), std::move(edges), lr_);
        return hc;
    }

private:
    const PlaneStGraph& g_;
    FaceSet fs_;
    LrOrders lr_;
    std::vector<int> succ_;
    std::vector<int> boundary_;
    std::vector<Dummy> dummies_;

    void link(int u, int v, int face) {
        succ_[u] = v;
        if (g_.g.find_edge(u, v) < 0) dummies_.push_back({u, v, face});
    }
};

void require_shape(const Face& f, size_t min_left, size_t min_right, size_t max_left, size_t max_right) {
    const size_t l = f.left_edges.size(), r = f.right_edges.size();
    if (l < min_left || r < min_right || l > max_left || r > max_right)
        throw std::invalid_argument("face " + std::to_string(f.id) + " has " + std::to_string(l) +
                                    " left and " + std::to_string(r) + " right edges");
}

}  // namespace

HpCompletion hp_complete_long_right(const PlaneStGraph& g, ConstructionStats* stats) {
    Completion c(g);
    const auto& fs = c.faces();
    for (int id : fs.internal()) require_shape(fs.faces[id], 2, 3, SIZE_MAX, SIZE_MAX);
    for (int id : c.schedule()) {
        const Face& f = fs.faces[id];
        const auto& u = f.left_path;   // u_0 .. u_h
        const auto& v = f.right_path;  // v_0 .. v_k
        const int h = static_cast<int>(u.size()) - 1, k = static_cast<int>(v.size()) - 1;
        const int i = c.locate(f);
        const bool before = c.before_on_path(i), after = c.after_on_path(i + h);
        const std::vector<int> inner(v.begin() + 1, v.end() - 1);  // v_1 .. v_{k-1}
        int which;
        if (before && after) {
            which = 1;
            int j = 0;
            while (j < h && !c.on_path(u[j], u[j + 1])) ++j;
            if (j == h) throw std::logic_error("no left-path edge of face " + std::to_string(id) + " on the path");
            c.bypass(u[j], inner, u[j + 1], id);
        } else if (before) {
            which = 2;
            c.bypass(u[h - 1], inner, u[h], id);
        } else if (after) {
            which = 3;
            c.bypass(u[0], inner, u[1], id);
        } else {
            which = 4;
            c.bypass(u[0], std::vector<int>(v.begin() + 1, v.begin() + k - 1), u[1], id);
            c.bypass(u[h - 1], {v[k - 1]}, u[h], id);
        }
        c.replace_boundary(i, f);
        c.check_invariant(stats);
        if (stats) {
            ++stats->faces;
            ++stats->cases[which];
        }
    }
    return c.finish();
}

HpCompletion hp_complete_rhombi(const PlaneStGraph& g, ConstructionStats* stats) {
    Completion c(g);
    const auto& fs = c.faces();
    for (int id : fs.internal()) require_shape(fs.faces[id], 2, 2, 2, 2);
    for (int id : c.schedule()) {
        const Face& f = fs.faces[id];
        const int s = f.left_path[0], u1 = f.left_path[1], t = f.left_path[2], v1 = f.right_path[1];
        const int i = c.locate(f);
        // Bypass (s,u1) unless that leaves two edges off the path at t.
        const bool first = c.on_path(s, u1) && (c.after_on_path(i + 2) || !c.on_path(u1, t));
        if (first) c.bypass(s, {v1}, u1, id);
        else c.bypass(u1, {v1}, t, id);
        c.replace_boundary(i, f);
        c.check_invariant(stats);
        if (stats) {
            ++stats->faces;
            ++stats->cases[first ? 1 : 2];
        }
    }
    return c.finish();
}

}  // namespace ube
