#include "ube/types.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ube/flow.hpp"

namespace ube {

char to_char(Vis v) {
    switch (v) {
        case Vis::L: return 'L';
        case Vis::R: return 'R';
        case Vis::N: return 'N';
        case Vis::B: return 'B';
    }
    return '?';
}

namespace {

Vis vis_from_char(char c) {
    switch (c) {
        case 'L': return Vis::L;
        case 'R': return Vis::R;
        case 'N': return Vis::N;
        case 'B': return Vis::B;
    }
    throw std::invalid_argument(std::string("bad visibility letter '") + c + "'");
}

Vis swap_lr(Vis v) {
    if (v == Vis::L) return Vis::R;
    if (v == Vis::R) return Vis::L;
    return v;
}

// Spine letter from the letters seen over the intervals.
Vis spine_letter(bool seen_l, bool seen_r) {
    if (seen_l && seen_r) return Vis::B;
    if (seen_l) return Vis::L;
    if (seen_r) return Vis::R;
    return Vis::N;
}

bool has_l(Vis v) { return v == Vis::L || v == Vis::B; }
bool has_r(Vis v) { return v == Vis::R || v == Vis::B; }

std::array<EmbeddingType, kNumTypes> build_types() {
    std::array<EmbeddingType, kNumTypes> out{};
    int i = 0;
    for (Vis sp : {Vis::L, Vis::R, Vis::B, Vis::N})
        for (Vis s : {Vis::L, Vis::R, Vis::N})
            for (Vis t : {Vis::L, Vis::R, Vis::N}) {
                EmbeddingType et{s, sp, t};
                if (is_admissible(et)) out[i++] = et;
            }
    return out;
}

}  // namespace

bool is_admissible(EmbeddingType t) {
    if (t.s == Vis::B || t.t == Vis::B) return false;
    switch (t.spine) {
        case Vis::L: return t.s != Vis::R && t.t != Vis::R;
        case Vis::R: return t.s != Vis::L && t.t != Vis::L;
        case Vis::N: return t.s == Vis::N && t.t == Vis::N;
        case Vis::B: return true;
    }
    return false;
}

const std::array<EmbeddingType, kNumTypes>& all_types() {
    static const auto types = build_types();
    return types;
}

int type_index(EmbeddingType t) {
    const auto& all = all_types();
    for (int i = 0; i < kNumTypes; ++i)
        if (all[i] == t) return i;
    return -1;
}

std::string to_string(EmbeddingType t) { return {to_char(t.s), to_char(t.spine), to_char(t.t)}; }

EmbeddingType parse_type(const std::string& s) {
    if (s.size() != 3) throw std::invalid_argument("embedding type needs three letters: " + s);
    EmbeddingType t{vis_from_char(s[0]), vis_from_char(s[1]), vis_from_char(s[2])};
    if (!is_admissible(t)) throw std::invalid_argument("inadmissible embedding type " + s);
    return t;
}

EmbeddingType mirror_horizontal(EmbeddingType t) { return {swap_lr(t.s), swap_lr(t.spine), swap_lr(t.t)}; }

EmbeddingType mirror_vertical(EmbeddingType t) { return {t.t, t.spine, t.s}; }

TypeSet::TypeSet(std::initializer_list<EmbeddingType> ts) {
    for (auto t : ts) insert(t);
}

TypeSet TypeSet::all() { return from_mask((1u << kNumTypes) - 1); }

int TypeSet::size() const { return __builtin_popcount(mask_); }

bool TypeSet::contains(EmbeddingType t) const {
    int i = type_index(t);
    return i >= 0 && (mask_ >> i & 1u);
}

void TypeSet::insert(EmbeddingType t) {
    int i = type_index(t);
    if (i < 0) throw std::invalid_argument("inadmissible embedding type " + to_string(t));
    mask_ |= 1u << i;
}

std::vector<EmbeddingType> TypeSet::types() const {
    std::vector<EmbeddingType> out;
    for (int i = 0; i < kNumTypes; ++i)
        if (mask_ >> i & 1u) out.push_back(all_types()[i]);
    return out;
}

std::vector<std::string> TypeSet::names() const {
    std::vector<std::string> out;
    for (auto t : types()) out.push_back(to_string(t));
    return out;
}

TypeSet TypeSet::mirrored_horizontal() const {
    TypeSet r;
    for (auto t : types()) r.insert(mirror_horizontal(t));
    return r;
}

TypeSet TypeSet::mirrored_vertical() const {
    TypeSet r;
    for (auto t : types()) r.insert(mirror_vertical(t));
    return r;
}

std::vector<Vis> interval_letters(const Digraph& g, const BookEmbedding& be) {
    if (be.k > 2) throw std::invalid_argument("visibility letters need at most 2 pages");
    auto rep = verify_kube(g, be);
    if (!rep.valid) throw std::invalid_argument("invalid book embedding: " + rep.message);
    auto pos = be.positions(g.n);
    const int gaps = g.n - 1;
    std::vector<char> cov_l(gaps, 0), cov_r(gaps, 0);
    for (int e = 0; e < g.m(); ++e) {
        auto& cov = be.page[e] == 1 ? cov_l : cov_r;
        for (int i = pos[g.edges[e].first]; i < pos[g.edges[e].second]; ++i) cov[i] = 1;
    }
    std::vector<Vis> out(gaps);
    for (int i = 0; i < gaps; ++i) {
        if (!cov_l[i] && !cov_r[i]) throw std::invalid_argument("spine interval crossed by no edge; not an st-graph");
        out[i] = !cov_l[i] ? Vis::L : (!cov_r[i] ? Vis::R : Vis::N);
    }
    return out;
}

EmbeddingType classify_embedding_type(const Digraph& g, const BookEmbedding& be) {
    if (g.n < 2) throw std::invalid_argument("classification needs at least two vertices");
    auto letters = interval_letters(g, be);
    bool seen_l = false, seen_r = false;
    for (Vis v : letters) {
        seen_l |= v == Vis::L;
        seen_r |= v == Vis::R;
    }
    return {letters.front(), spine_letter(seen_l, seen_r), letters.back()};
}

TypeSet s_node_compose(const TypeSet& lower, const TypeSet& upper) {
    TypeSet out;
    for (auto a : lower.types())
        for (auto b : upper.types())
            out.insert({a.s, spine_letter(has_l(a.spine) || has_l(b.spine), has_r(a.spine) || has_r(b.spine)), b.t});
    return out;
}

// Spine-walk model of a P-node with k children in a fixed order. Spine
// positions run over 0..2k: even positions are gaps between children,
// position 2c-1 lies inside child c. The walk starts at P0 just above the
// lower pole, ends at Pend just below the upper pole and covers [lo, hi].
// Child c at inside position p sees letter L at positions < p, N at p and
// R at positions > p. A single-edge child can never contain the spine; any
// other child needs a vertex, so the walk has to come next to it.
namespace {

enum Landmark { kLo = 0, kStart = 1, kEnd = 2, kHi = 3 };

struct ChildView {
    EmbeddingType type;
    bool q_ok = false;
    bool non_q_ok = false;
};

// Positions relative to child inside position p.
ChildView view_child(int p, int lo, int start, int end, int hi) {
    auto letter = [p](int x) { return x < p ? Vis::L : (x == p ? Vis::N : Vis::R); };
    ChildView v;
    v.type = {letter(start), spine_letter(lo < p, hi > p), letter(end)};
    v.q_ok = !(lo <= p && p <= hi);
    v.non_q_ok = lo <= p + 1 && hi >= p - 1;
    return v;
}

EmbeddingType merged_type(int k, int lo, int start, int end, int hi) {
    auto letter = [k](int x) { return x == 0 ? Vis::L : (x == 2 * k ? Vis::R : Vis::N); };
    return {letter(start), spine_letter(lo == 0, hi == 2 * k), letter(end)};
}

bool child_accepts(const TypeSet& set, bool is_q, const ChildView& v) {
    if (is_q ? !v.q_ok : !v.non_q_ok) return false;
    return set.contains(v.type);
}

bool flag(const std::vector<bool>& is_q, size_t i) { return i < is_q.size() && is_q[i]; }

}  // namespace

TypeSet p_node_types_fixed_enumerated(const std::vector<TypeSet>& children, const std::vector<bool>& is_q) {
    const int k = static_cast<int>(children.size());
    TypeSet out;
    if (k == 0) return out;
    for (int lo = 0; lo <= 2 * k; ++lo)
        for (int hi = lo; hi <= 2 * k; ++hi)
            for (int st = lo; st <= hi; ++st)
                for (int en = lo; en <= hi; ++en) {
                    auto res = merged_type(k, lo, st, en, hi);
                    if (out.contains(res)) continue;
                    bool ok = true;
                    for (int c = 0; c < k && ok; ++c)
                        ok = child_accepts(children[c], flag(is_q, c), view_child(2 * c + 1, lo, st, en, hi));
                    if (ok) out.insert(res);
                }
    return out;
}

// Left-to-right fold over the children. Before child c (left gap g = 2c-2)
// every landmark is either already passed (< g), exactly at g, or still
// ahead (> g). Processing a child fixes, for each landmark ahead, whether
// it sits at g+1, at g+2 or beyond. The state also remembers which of P0,
// Pend and lo sit at position 0 for the final type.
TypeSet p_node_types_fixed(const std::vector<TypeSet>& children, const std::vector<bool>& is_q) {
    const int k = static_cast<int>(children.size());
    TypeSet out;
    if (k == 0) return out;
    enum : int { kPassed = 0, kAtGap = 1, kAhead = 2 };
    struct State {
        std::array<int, 4> where;
        bool start0, end0, lo0;
        auto key() const {
            return std::make_tuple(where[0], where[1], where[2], where[3], start0, end0, lo0);
        }
        bool operator<(const State& o) const { return key() < o.key(); }
    };
    auto ordered = [](const std::array<int, 4>& x) {
        return x[kLo] <= x[kStart] && x[kLo] <= x[kEnd] && x[kStart] <= x[kHi] && x[kEnd] <= x[kHi];
    };
    std::vector<State> cur;
    // Position 0: each landmark is there or ahead.
    for (int mask = 0; mask < 16; ++mask) {
        std::array<int, 4> rel{};
        for (int l = 0; l < 4; ++l) rel[l] = (mask >> l & 1) ? 0 : 1;
        if (!ordered(rel)) continue;
        State s;
        for (int l = 0; l < 4; ++l) s.where[l] = rel[l] == 0 ? kAtGap : kAhead;
        s.start0 = rel[kStart] == 0;
        s.end0 = rel[kEnd] == 0;
        s.lo0 = rel[kLo] == 0;
        cur.push_back(s);
    }
    for (int c = 0; c < k; ++c) {
        std::vector<State> next;
        for (const auto& s : cur) {
            // Relative positions: -1 passed, 0 left gap, 1 inside, 2 right gap, 3 beyond.
            std::array<std::vector<int>, 4> opts;
            for (int l = 0; l < 4; ++l) {
                if (s.where[l] == kPassed) opts[l] = {-1};
                else if (s.where[l] == kAtGap) opts[l] = {0};
                else opts[l] = {1, 2, 3};
            }
            for (int a : opts[0])
                for (int b : opts[1])
                    for (int d : opts[2])
                        for (int e : opts[3]) {
                            std::array<int, 4> rel{a, b, d, e};
                            if (!ordered(rel)) continue;
                            if (!child_accepts(children[c], flag(is_q, c), view_child(1, a, b, d, e))) continue;
                            State t = s;
                            for (int l = 0; l < 4; ++l)
                                t.where[l] = rel[l] <= 1 ? kPassed : (rel[l] == 2 ? kAtGap : kAhead);
                            next.push_back(t);
                        }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end(),
                               [](const State& x, const State& y) { return !(x < y) && !(y < x); }),
                   next.end());
        cur = std::move(next);
    }
    for (const auto& s : cur) {
        // Whatever is still ahead sits at the last gap 2k.
        bool start_end = s.where[kStart] != kPassed, end_end = s.where[kEnd] != kPassed;
        bool lo_end = s.where[kLo] != kPassed, hi_end = s.where[kHi] != kPassed;
        if (lo_end && !(start_end && end_end && hi_end)) continue;
        if ((start_end || end_end) && !hi_end) continue;
        auto letter = [](bool at0, bool at_end) { return at0 ? Vis::L : (at_end ? Vis::R : Vis::N); };
        out.insert({letter(s.start0, start_end), spine_letter(s.lo0, hi_end), letter(s.end0, end_end)});
    }
    return out;
}

const std::vector<EmbeddingType>& relevant_types() {
    static const std::vector<EmbeddingType> types = [] {
        std::vector<EmbeddingType> v;
        for (const char* name : {"LBR", "RBR", "RRR", "NBR", "RBN", "NBN", "RRN", "NRN", "NNN", "NRR"})
            v.push_back(parse_type(name));
        return v;
    }();
    return types;
}

namespace {

bool is_relevant(EmbeddingType t) {
    const auto& r = relevant_types();
    return std::find(r.begin(), r.end(), t) != r.end();
}

using GroupKey = std::tuple<int, bool, bool>;

}  // namespace

std::vector<PPattern> derive_p_patterns(int max_children) {
    // Pattern key: result type and group requirements; value: per-group
    // flag whether a run longer than one was observed.
    std::map<std::pair<int, std::vector<GroupKey>>, std::vector<bool>> found;
    for (int k = 1; k <= max_children; ++k)
        for (int lo = 0; lo <= 2 * k; ++lo)
            for (int hi = lo; hi <= 2 * k; ++hi)
                for (int st = lo; st <= hi; ++st)
                    for (int en = lo; en <= hi; ++en) {
                        auto res = merged_type(k, lo, st, en, hi);
                        if (!is_relevant(res)) continue;
                        std::vector<GroupKey> groups;
                        std::vector<int> runs;
                        bool ok = true;
                        for (int c = 0; c < k && ok; ++c) {
                            auto v = view_child(2 * c + 1, lo, st, en, hi);
                            if (!v.q_ok && !v.non_q_ok) ok = false;
                            GroupKey g{type_index(v.type), v.q_ok, v.non_q_ok};
                            if (!groups.empty() && groups.back() == g) {
                                ++runs.back();
                            } else {
                                groups.push_back(g);
                                runs.push_back(1);
                            }
                        }
                        if (!ok) continue;
                        auto& flags = found[{type_index(res), groups}];
                        flags.resize(groups.size(), false);
                        for (size_t i = 0; i < runs.size(); ++i) flags[i] = flags[i] || runs[i] > 1;
                    }
    std::vector<PPattern> out;
    for (const auto& [key, flags] : found) {
        PPattern p;
        p.result = all_types()[key.first];
        for (size_t i = 0; i < key.second.size(); ++i) {
            auto [ti, q, nq] = key.second[i];
            p.groups.push_back({all_types()[ti], q, nq, static_cast<bool>(flags[i])});
        }
        out.push_back(std::move(p));
    }
    return out;
}

const std::vector<PPattern>& p_patterns() {
    static const std::vector<PPattern> patterns = derive_p_patterns(12);
    return patterns;
}

namespace {

bool group_accepts(const PGroup& g, const TypeSet& set, bool is_q) {
    if (is_q ? !g.allow_q : !g.allow_non_q) return false;
    return set.contains(g.type);
}

// Can the children be distributed over the pattern's groups in some order?
bool pattern_feasible(const PPattern& p, const std::vector<TypeSet>& children, const std::vector<bool>& is_q) {
    const int k = static_cast<int>(children.size());
    const int m = static_cast<int>(p.groups.size());
    if (m > k) return false;
    int bounded = 0;
    for (const auto& g : p.groups) bounded += g.unbounded ? 0 : 1;
    if (bounded == m && m != k) return false;
    for (int c = 0; c < k; ++c) {
        bool any = false;
        for (const auto& g : p.groups) any = any || group_accepts(g, children[c], flag(is_q, c));
        if (!any) return false;
    }
    for (const auto& g : p.groups) {
        bool any = false;
        for (int c = 0; c < k && !any; ++c) any = group_accepts(g, children[c], flag(is_q, c));
        if (!any) return false;
    }
    FlowNetwork net;
    net.source = net.add_node();
    net.sink = net.add_node();
    std::vector<int> child_node(k), group_node(m);
    for (int c = 0; c < k; ++c) child_node[c] = net.add_node();
    for (int i = 0; i < m; ++i) group_node[i] = net.add_node();
    for (int c = 0; c < k; ++c) {
        net.add_arc(net.source, child_node[c], 1, 1);
        for (int i = 0; i < m; ++i)
            if (group_accepts(p.groups[i], children[c], flag(is_q, c))) net.add_arc(child_node[c], group_node[i], 0, 1);
    }
    for (int i = 0; i < m; ++i) net.add_arc(group_node[i], net.sink, 1, p.groups[i].unbounded ? kFlowInfinity : 1);
    return feasible_flow(net).has_value();
}

TypeSet relevant_variable_types(const std::vector<TypeSet>& children, const std::vector<bool>& is_q) {
    TypeSet out;
    for (const auto& p : p_patterns()) {
        if (out.contains(p.result)) continue;
        if (pattern_feasible(p, children, is_q)) out.insert(p.result);
    }
    return out;
}

}  // namespace

TypeSet p_node_types_variable(const std::vector<TypeSet>& children, const std::vector<bool>& is_q) {
    if (children.empty()) return {};
    // The result depends only on the multiset of (set, is Q) pairs.
    std::vector<std::uint32_t> key;
    for (size_t c = 0; c < children.size(); ++c) key.push_back(children[c].mask() << 1 | flag(is_q, c));
    std::sort(key.begin(), key.end());
    static thread_local std::map<std::vector<std::uint32_t>, TypeSet> cache;
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    TypeSet out = relevant_variable_types(children, is_q);
    std::vector<TypeSet> mirrored;
    for (const auto& c : children) mirrored.push_back(c.mirrored_horizontal());
    out |= relevant_variable_types(mirrored, is_q).mirrored_horizontal();
    cache.emplace(std::move(key), out);
    return out;
}

}  // namespace ube
