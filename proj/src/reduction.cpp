#include "ube/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ube {

void validate_instance(const BetweennessInstance& inst) {
    const int n = static_cast<int>(inst.S.size());
    std::set<std::string> names(inst.S.begin(), inst.S.end());
    if (static_cast<int>(names.size()) != n) throw std::invalid_argument("element names are not distinct");
    for (const auto& r : inst.R) {
        for (int x : r)
            if (x < 0 || x >= n) throw std::invalid_argument("triplet entry out of range");
        if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2])
            throw std::invalid_argument("triplet entries are not distinct");
    }
}

bool satisfies(const BetweennessInstance& inst, const std::vector<int>& tau) {
    const int n = static_cast<int>(inst.S.size());
    if (static_cast<int>(tau.size()) != n) return false;
    std::vector<int> rank(n, -1);
    for (int i = 0; i < n; ++i) {
        if (tau[i] < 0 || tau[i] >= n || rank[tau[i]] >= 0) return false;
        rank[tau[i]] = i;
    }
    for (const auto& [a, b, c] : inst.R) {
        bool up = rank[a] < rank[b] && rank[b] < rank[c];
        bool down = rank[c] < rank[b] && rank[b] < rank[a];
        if (!up && !down) return false;
    }
    return true;
}

std::optional<std::vector<int>> solve_betweenness_brute(const BetweennessInstance& inst) {
    validate_instance(inst);
    if (inst.S.size() > 10) throw std::invalid_argument("brute-force betweenness supports at most 10 elements");
    std::vector<int> tau(inst.S.size());
    std::iota(tau.begin(), tau.end(), 0);
    do {
        if (satisfies(inst, tau)) return tau;
    } while (std::next_permutation(tau.begin(), tau.end()));
    return std::nullopt;
}

namespace {

std::string element_name(const nlohmann::json& e) {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer()) return std::to_string(e.get<long long>());
    throw std::invalid_argument("betweenness elements must be strings or integers");
}

}  // namespace

BetweennessInstance instance_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("S") || !j.contains("R"))
        throw std::invalid_argument("betweenness instance needs \"S\" and \"R\"");
    BetweennessInstance inst;
    std::map<std::string, int> index;
    for (const auto& e : j.at("S")) {
        auto name = element_name(e);
        if (index.count(name)) throw std::invalid_argument("duplicate element " + name);
        index[name] = static_cast<int>(inst.S.size());
        inst.S.push_back(name);
    }
    for (const auto& r : j.at("R")) {
        if (!r.is_array() || r.size() != 3) throw std::invalid_argument("triplets must have three entries");
        std::array<int, 3> t{};
        for (int i = 0; i < 3; ++i) {
            auto it = index.find(element_name(r[i]));
            if (it == index.end()) throw std::invalid_argument("triplet names an unknown element");
            t[i] = it->second;
        }
        inst.R.push_back(t);
    }
    validate_instance(inst);
    return inst;
}

nlohmann::json instance_to_json(const BetweennessInstance& inst) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& t : inst.R) r.push_back({inst.S[t[0]], inst.S[t[1]], inst.S[t[2]]});
    return {{"S", inst.S}, {"R", r}};
}

const char* to_string(EdgeRole r) {
    switch (r) {
        case EdgeRole::Path: return "path";
        case EdgeRole::Forcing: return "forcing";
        case EdgeRole::Channel: return "channel";
        case EdgeRole::Closing: return "closing";
        case EdgeRole::Group: return "group";
        case EdgeRole::Gadget: return "gadget";
        case EdgeRole::Triplet: return "triplet";
        case EdgeRole::Bundle: return "bundle";
        case EdgeRole::Sink: return "sink";
    }
    return "?";
}

const LambdaGadget* GadgetGraph::gadget(int level) const {
    for (const auto& g : gadgets)
        if (g.level == level) return &g;
    return nullptr;
}

int GadgetGraph::vertex(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw std::invalid_argument("no vertex named " + name);
    return static_cast<int>(it - names.begin());
}

namespace {

class Builder {
public:
    Builder(int h, int s, int k, bool lambda) {
        gg_.h = h;
        gg_.s = s;
        gg_.k = k;
        lambda_ = lambda;
    }

    GadgetGraph build() {
        build_shell();
        if (gg_.s > 0) build_groups();
        return std::move(gg_);
    }

    int vertex(const std::string& name) {
        gg_.names.push_back(name);
        return gg_.graph.n++;
    }

    int edge(int u, int v, EdgeRole role, int level) {
        gg_.graph.edges.emplace_back(u, v);
        gg_.roles.push_back(role);
        gg_.edge_level.push_back(level);
        return gg_.graph.m() - 1;
    }

private:
    static std::string at(const std::string& base, int i) { return base + "_" + std::to_string(i); }

    // Forcing pair or bundle of level i; the lower side continues to next.
    void forcing(ShellLevel& L, int i, int next) {
        const int k = gg_.k;
        const EdgeRole role = k == 3 ? EdgeRole::Forcing : EdgeRole::Bundle;
        std::vector<int> lower{L.s, L.q}, upper{L.s1, L.q1};
        for (int j = 3; j <= k - 1; ++j) {
            lower.push_back(vertex(at(at("f", i), j)));
            upper.push_back(vertex(at(at("fp", i), j)));
            L.extra.push_back(lower.back());
            L.extra.push_back(upper.back());
        }
        lower.push_back(next);
        upper.push_back(L.t1);
        for (size_t j = 0; j + 1 < lower.size(); ++j) edge(lower[j], lower[j + 1], EdgeRole::Path, i);
        for (size_t j = 0; j + 1 < upper.size(); ++j) edge(upper[j], upper[j + 1], EdgeRole::Path, i);
        for (int j = 0; j < k - 1; ++j) L.forcing.push_back(edge(lower[j], upper[j], role, i));
    }

    // The edge (t'_i, p_i), or the gadget that replaces it.
    void top(ShellLevel& L, int i) {
        if (!lambda_ || i % 2 == 0) {
            edge(L.t1, L.p, EdgeRole::Path, i);
            return;
        }
        const int k = gg_.k;
        const EdgeRole conflict_role = k == 3 ? EdgeRole::Gadget : EdgeRole::Bundle;
        LambdaGadget g;
        g.level = i;
        const std::string base = at("lambda", i);
        for (int j = 1; j <= k - 2; ++j) g.u.push_back(vertex(base + (j == 1 ? "_u" : "_u" + std::to_string(j))));
        g.w = vertex(base + "_w");
        g.x = vertex(base + "_x");
        g.y = vertex(base + "_y");
        for (int j = 1; j <= k - 2; ++j) g.z.push_back(vertex(base + (j == 1 ? "_z" : "_z" + std::to_string(j))));
        auto add = [&](int a, int b, EdgeRole role) {
            int e = edge(a, b, role, i);
            g.edges.push_back(e);
            return e;
        };
        int prev = L.t1;
        for (int u : g.u) {
            add(prev, u, EdgeRole::Gadget);
            prev = u;
        }
        add(prev, g.w, EdgeRole::Gadget);
        add(g.w, g.x, EdgeRole::Gadget);
        add(g.w, g.y, EdgeRole::Gadget);
        add(g.x, g.z.front(), EdgeRole::Gadget);
        add(g.y, g.z.front(), EdgeRole::Gadget);
        for (size_t j = 0; j + 1 < g.z.size(); ++j) add(g.z[j], g.z[j + 1], EdgeRole::Gadget);
        add(g.z.back(), L.p, EdgeRole::Gadget);
        for (size_t j = 0; j < g.u.size(); ++j) g.conflict.push_back(add(g.u[j], g.z[j], conflict_role));
        g.conflict.push_back(add(g.w, L.p, conflict_role));
        gg_.gadgets.push_back(std::move(g));
    }

    void build_shell() {
        const int h = gg_.h;
        gg_.levels.resize(h + 1);
        {
            ShellLevel& L = gg_.levels[0];
            L.s = vertex("s_0");
            L.q = vertex("q_0");
            gg_.p_minus = vertex("p_-1");
            gg_.t_minus = vertex("t_-1");
            L.s1 = vertex("sp_0");
            L.q1 = vertex("qp_0");
            L.t1 = vertex("tp_0");
            L.p = vertex("p_0");
            L.t = vertex("t_0");
            forcing(L, 0, gg_.p_minus);
            edge(gg_.p_minus, gg_.t_minus, EdgeRole::Path, 0);
            edge(gg_.t_minus, L.s1, EdgeRole::Path, 0);
            top(L, 0);
            L.channel = {edge(gg_.p_minus, L.t, EdgeRole::Channel, 0), edge(gg_.t_minus, L.p, EdgeRole::Channel, 0)};
            L.closing = edge(L.t1, L.t, EdgeRole::Closing, 0);
        }
        for (int i = 1; i <= h; ++i) {
            ShellLevel& L = gg_.levels[i];
            const ShellLevel& P = gg_.levels[i - 1];
            L.s = vertex(at("s", i));
            L.q = vertex(at("q", i));
            L.s1 = vertex(at("sp", i));
            L.q1 = vertex(at("qp", i));
            L.t1 = vertex(at("tp", i));
            L.p = vertex(at("p", i));
            L.t = vertex(at("t", i));
            forcing(L, i, P.s);
            edge(P.t, L.s1, EdgeRole::Path, i);
            top(L, i);
            L.channel = {edge(P.p, L.t, EdgeRole::Channel, i), edge(P.t, L.p, EdgeRole::Channel, i)};
            L.closing = edge(L.t1, L.t, EdgeRole::Closing, i);
        }
    }

    void build_groups() {
        const int h = gg_.h, s = gg_.s;
        gg_.groups.assign(h + 2, {});
        for (int i = -1; i <= h; ++i)
            for (int j = 1; j <= s; ++j) gg_.groups[i + 1].push_back(vertex("alpha_" + std::to_string(i) + "_" + std::to_string(j)));
        for (int v : gg_.group(-1)) {
            edge(gg_.p_minus, v, EdgeRole::Group, -1);
            edge(v, gg_.t_minus, EdgeRole::Group, -1);
        }
        for (int i = 0; i <= h; ++i)
            for (int j = 0; j < s; ++j) {
                if (i % 2 == 0) edge(gg_.levels[i].p, gg_.group(i)[j], EdgeRole::Group, i);
                edge(gg_.group(i - 1)[j], gg_.group(i)[j], EdgeRole::Group, i);
            }
    }

    GadgetGraph gg_;
    bool lambda_ = false;
};

}  // namespace

GadgetGraph build_shell(int h) {
    if (h < 0) throw std::invalid_argument("shell level must be non-negative");
    return Builder(h, 0, 3, false).build();
}

GadgetGraph build_filled(int h, int s) {
    if (h < 0) throw std::invalid_argument("shell level must be non-negative");
    if (s < 1) throw std::invalid_argument("groups need at least one vertex");
    return Builder(h, s, 3, false).build();
}

GadgetGraph build_lambda_filled(int h, int s, int k) {
    if (h < 0 || h % 2 != 0) throw std::invalid_argument("h must be even and non-negative");
    if (s < 1) throw std::invalid_argument("groups need at least one vertex");
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    return Builder(h, s, k, true).build();
}

GadgetGraph reduce_betweenness(const BetweennessInstance& inst, int k) {
    validate_instance(inst);
    if (inst.R.empty()) throw std::invalid_argument("the instance needs at least one triplet");
    if (inst.S.size() < 3) throw std::invalid_argument("the instance needs at least three elements");
    if (k < 3) throw std::invalid_argument("k must be at least 3");
    const int h = 2 * static_cast<int>(inst.R.size());
    GadgetGraph gg = build_lambda_filled(h, static_cast<int>(inst.S.size()), k);
    gg.triplets = inst.R;
    auto add = [&](int u, int v, EdgeRole role, int level) {
        gg.graph.edges.emplace_back(u, v);
        gg.roles.push_back(role);
        gg.edge_level.push_back(level);
    };
    for (size_t j = 0; j < inst.R.size(); ++j) {
        const int i = 2 * static_cast<int>(j) + 1;
        const LambdaGadget& g = *gg.gadget(i);
        const auto& [a, b, c] = inst.R[j];
        const auto& alpha = gg.group(i);
        add(g.x, alpha[a], EdgeRole::Triplet, i);
        add(g.x, alpha[b], EdgeRole::Triplet, i);
        add(g.y, alpha[b], EdgeRole::Triplet, i);
        add(g.y, alpha[c], EdgeRole::Triplet, i);
    }
    for (int v : gg.group(h)) add(v, gg.sink(), EdgeRole::Sink, h);
    return gg;
}

std::vector<int> forced_order(const GadgetGraph& gg, const std::vector<int>& tau) {
    if (static_cast<int>(tau.size()) != gg.s) throw std::invalid_argument("tau must order the group vertices");
    std::vector<int> rank(gg.s, -1);
    for (int r = 0; r < gg.s; ++r) {
        if (tau[r] < 0 || tau[r] >= gg.s || rank[tau[r]] >= 0) throw std::invalid_argument("tau is not a permutation");
        rank[tau[r]] = r;
    }
    std::vector<int> order;
    auto group = [&](int i) {
        if (gg.s == 0) return;
        const auto& alpha = gg.group(i);
        if (i % 2 != 0)
            for (int e : tau) order.push_back(alpha[e]);
        else
            for (auto it = tau.rbegin(); it != tau.rend(); ++it) order.push_back(alpha[*it]);
    };
    const int k = gg.k;
    auto lower = [&](const ShellLevel& L) {
        order.push_back(L.s);
        order.push_back(L.q);
        for (int j = 0; j + 3 <= k - 1; ++j) order.push_back(L.extra[2 * j]);
    };
    auto upper = [&](const ShellLevel& L) {
        order.push_back(L.s1);
        order.push_back(L.q1);
        for (int j = 0; j + 3 <= k - 1; ++j) order.push_back(L.extra[2 * j + 1]);
        order.push_back(L.t1);
    };
    for (int i = gg.h; i >= 0; --i) lower(gg.levels[i]);
    order.push_back(gg.p_minus);
    group(-1);
    order.push_back(gg.t_minus);
    for (int i = 0; i <= gg.h; ++i) {
        const ShellLevel& L = gg.levels[i];
        upper(L);
        if (const LambdaGadget* g = gg.gadget(i)) {
            for (int u : g->u) order.push_back(u);
            order.push_back(g->w);
            bool x_first = true;
            const int j = (i - 1) / 2;
            if (j < static_cast<int>(gg.triplets.size())) {
                const auto& [a, b, c] = gg.triplets[j];
                x_first = rank[c] < rank[a];
            }
            order.push_back(x_first ? g->x : g->y);
            order.push_back(x_first ? g->y : g->x);
            for (int z : g->z) order.push_back(z);
        }
        order.push_back(L.p);
        group(i);
        order.push_back(L.t);
    }
    if (static_cast<int>(order.size()) != gg.graph.n) throw std::logic_error("forced order misses vertices");
    return order;
}

BookEmbedding construct_3ube_from_witness(const BetweennessInstance& inst, const std::vector<int>& tau) {
    if (!satisfies(inst, tau)) throw std::invalid_argument("tau does not satisfy the instance");
    return construct_3ube_from_witness(reduce_betweenness(inst, 3), tau);
}

BookEmbedding construct_3ube_from_witness(const GadgetGraph& gg, const std::vector<int>& tau) {
    if (gg.k != 3) throw std::invalid_argument("the witness construction needs k = 3");
    BetweennessInstance inst;
    for (int i = 0; i < gg.s; ++i) inst.S.push_back(std::to_string(i));
    inst.R = gg.triplets;
    if (!satisfies(inst, tau)) throw std::invalid_argument("tau does not satisfy the instance");

    const Digraph& G = gg.graph;
    BookEmbedding be;
    be.k = 3;
    be.order = forced_order(gg, tau);
    be.page.assign(G.m(), 0);
    auto channel_page = [](int i) { return i % 2 == 0 ? 1 : 2; };
    for (int i = 0; i <= gg.h; ++i) {
        const ShellLevel& L = gg.levels[i];
        const int c = channel_page(i);
        for (int e : L.channel) be.page[e] = c;
        be.page[L.forcing[0]] = 3;
        be.page[L.forcing[1]] = 3 - c;
        be.page[L.closing] = 3;
        if (const LambdaGadget* g = gg.gadget(i)) {
            be.page[g->conflict[0]] = c;
            be.page[g->conflict[1]] = 3 - c;
        }
    }
    std::vector<bool> in_group(G.n, false);
    for (const auto& alpha : gg.groups)
        for (int v : alpha) in_group[v] = true;
    for (int e = 0; e < G.m(); ++e) {
        const auto [u, v] = G.edges[e];
        if (gg.roles[e] == EdgeRole::Triplet) be.page[e] = 3;
        if (gg.roles[e] == EdgeRole::Group && in_group[u] && in_group[v]) be.page[e] = channel_page(gg.edge_level[e]);
    }
    // The remaining edges take the least page vector, in edge order, that is
    // free of conflicts.
    const auto pos = be.positions(G.n);
    std::vector<std::vector<int>> cross(G.m());
    for (int e = 0; e < G.m(); ++e)
        for (int f = e + 1; f < G.m(); ++f)
            if (edges_conflict(pos, G.edges[e], G.edges[f])) {
                cross[e].push_back(f);
                cross[f].push_back(e);
            }
    std::vector<int> free_edges;
    for (int e = 0; e < G.m(); ++e)
        if (be.page[e] == 0) free_edges.push_back(e);
    std::function<bool(size_t)> fill = [&](size_t i) -> bool {
        if (i == free_edges.size()) return true;
        const int e = free_edges[i];
        for (int p = 1; p <= 3; ++p) {
            bool ok = true;
            for (int f : cross[e]) ok = ok && be.page[f] != p;
            if (!ok) continue;
            be.page[e] = p;
            if (fill(i + 1)) return true;
        }
        be.page[e] = 0;
        return false;
    };
    if (!fill(0)) throw std::logic_error("the forced pages leave no completion");
    auto rep = verify_kube(G, be);
    if (!rep.valid) throw std::logic_error("constructed embedding is invalid: " + rep.message);
    return be;
}

bool StructuralReport::all_pass() const {
    return std::all_of(results.begin(), results.end(), [](const ConditionResult& r) { return r.pass; });
}

bool StructuralReport::passes(const std::string& name) const {
    return std::all_of(results.begin(), results.end(),
                       [&](const ConditionResult& r) { return r.name != name || r.pass; });
}

int StructuralReport::count(const std::string& name) const {
    return static_cast<int>(
        std::count_if(results.begin(), results.end(), [&](const ConditionResult& r) { return r.name == name; }));
}

StructuralReport check_structural_conditions(const GadgetGraph& gg, const BookEmbedding& be) {
    const Digraph& G = gg.graph;
    auto rep = verify_kube(G, be);
    if (!rep.valid) throw std::invalid_argument("not a valid book embedding: " + rep.message);
    const auto pos = be.positions(G.n);
    StructuralReport out;
    auto record = [&](const char* name, int level, bool pass, std::string detail = {}) {
        out.results.push_back({name, level, pass, std::move(detail)});
    };
    auto between = [&](int v, int lo, int hi) { return pos[lo] < pos[v] && pos[v] < pos[hi]; };

    std::vector<int> shell{gg.p_minus, gg.t_minus};
    for (int i = 0; i <= gg.h; ++i) {
        const ShellLevel& L = gg.levels[i];
        for (int v : {L.s, L.q, L.s1, L.q1, L.t1, L.p, L.t}) shell.push_back(v);
        shell.insert(shell.end(), L.extra.begin(), L.extra.end());
        std::string bad;
        for (int v : shell)
            if (v != L.s && v != L.t && !between(v, L.s, L.t)) bad = gg.names[v];
        record("S1", i, bad.empty(), bad.empty() ? "" : bad + " outside");
        const int c0 = be.page[L.channel[0]], c1 = be.page[L.channel[1]];
        record("S2", i, c0 == c1, "pages " + std::to_string(c0) + "," + std::to_string(c1));
        if (i > 0) {
            const int prev = be.page[gg.levels[i - 1].channel[0]];
            record("S3", i, c0 != prev, "pages " + std::to_string(prev) + "," + std::to_string(c0));
        }
    }

    if (gg.s > 0) {
        for (int i = -1; i <= gg.h; ++i) {
            const int lo = i < 0 ? gg.p_minus : gg.levels[i].p;
            const int hi = i < 0 ? gg.t_minus : gg.levels[i].t;
            bool f1 = true;
            for (int v : gg.group(i)) f1 = f1 && between(v, lo, hi);
            record("F1", i, f1);
            if (i < 0) continue;
            const auto &a = gg.group(i - 1), &b = gg.group(i);
            bool f2 = true;
            for (int j = 0; j < gg.s; ++j)
                for (int l = j + 1; l < gg.s; ++l)
                    if ((pos[a[j]] < pos[a[l]]) == (pos[b[j]] < pos[b[l]])) f2 = false;
            record("F2", i, f2);
            const int page = be.page[gg.levels[i].channel[1]];
            bool f3 = true;
            for (int j = 0; j < gg.s; ++j) f3 = f3 && be.page[G.find_edge(a[j], b[j])] == page;
            record("F3", i, f3);
        }
    }

    if (!gg.gadgets.empty()) {
        // The graph without triplet and sink edges, for the exchange test.
        Digraph base;
        base.n = G.n;
        std::vector<int> base_page;
        for (int e = 0; e < G.m(); ++e)
            if (gg.roles[e] != EdgeRole::Triplet && gg.roles[e] != EdgeRole::Sink) {
                base.edges.push_back(G.edges[e]);
                base_page.push_back(be.page[e]);
            }
        for (const auto& g : gg.gadgets) {
            const ShellLevel& L = gg.levels[g.level];
            std::vector<int> verts = g.u;
            verts.insert(verts.end(), {g.w, g.x, g.y});
            verts.insert(verts.end(), g.z.begin(), g.z.end());
            bool g1 = true;
            for (int v : verts) g1 = g1 && between(v, L.t1, L.p);
            record("G1", g.level, g1);
            const int z = g.z.front();
            bool inside = between(g.x, g.w, z) && between(g.y, g.w, z);

            BookEmbedding swapped{be.k, be.order, base_page};
            std::swap(swapped.order[pos[g.x]], swapped.order[pos[g.y]]);
            bool exchange = verify_kube(base, swapped).valid;
            const int wx = base.find_edge(g.w, g.x), yz = base.find_edge(g.y, z);
            const int xz = base.find_edge(g.x, z), wy = base.find_edge(g.w, g.y);
            for (int e : {wx, yz, xz, wy})
                for (int p = 1; p <= be.k && !exchange; ++p) {
                    BookEmbedding alt = swapped;
                    alt.page[e] = p;
                    exchange = verify_kube(base, alt).valid;
                }
            record("G2", g.level, inside && exchange,
                   std::string(inside ? "" : "x or y outside w..z; ") + (exchange ? "" : "exchange fails"));
        }
    }
    return out;
}

}  // namespace ube
