#include <algorithm>
#include <numeric>

#include "../common/fixtures.hpp"
#include "doctest.h"
#include "ube/flow.hpp"
#include "ube/generators.hpp"
#include "ube/types.hpp"

using namespace ube;

namespace {

EmbeddingType T(const char* s) { return parse_type(s); }

TypeSet random_set(Rng& rng) {
    TypeSet s;
    int n = rng.range(1, 4);
    for (int i = 0; i < n; ++i) s.insert(all_types()[rng.below(kNumTypes)]);
    return s;
}

}  // namespace

TEST_CASE("the eighteen admissible types") {
    int by_spine[4] = {0, 0, 0, 0};
    int admissible = 0;
    for (Vis s : {Vis::L, Vis::R, Vis::N, Vis::B})
        for (Vis sp : {Vis::L, Vis::R, Vis::N, Vis::B})
            for (Vis t : {Vis::L, Vis::R, Vis::N, Vis::B})
                if (is_admissible({s, sp, t})) {
                    ++admissible;
                    ++by_spine[static_cast<int>(sp)];
                }
    CHECK(admissible == kNumTypes);
    CHECK(by_spine[static_cast<int>(Vis::L)] == 4);
    CHECK(by_spine[static_cast<int>(Vis::R)] == 4);
    CHECK(by_spine[static_cast<int>(Vis::B)] == 9);
    CHECK(by_spine[static_cast<int>(Vis::N)] == 1);
    for (int i = 0; i < kNumTypes; ++i) CHECK(type_index(all_types()[i]) == i);
    CHECK_FALSE(is_admissible({Vis::R, Vis::L, Vis::L}));
    CHECK_FALSE(is_admissible({Vis::L, Vis::R, Vis::N}));
    CHECK_FALSE(is_admissible({Vis::L, Vis::N, Vis::N}));
}

TEST_CASE("mirrors are involutions on the admissible types") {
    for (auto t : all_types()) {
        CHECK(is_admissible(mirror_horizontal(t)));
        CHECK(is_admissible(mirror_vertical(t)));
        CHECK(mirror_horizontal(mirror_horizontal(t)) == t);
        CHECK(mirror_vertical(mirror_vertical(t)) == t);
    }
    CHECK(mirror_horizontal(T("LBN")) == T("RBN"));
    CHECK(mirror_vertical(T("LBN")) == T("NBL"));
    auto r = relevant_types();
    TypeSet closure;
    for (auto t : r) {
        closure.insert(t);
        closure.insert(mirror_horizontal(t));
    }
    CHECK(closure == TypeSet::all());
}

TEST_CASE("classify_embedding_type examples") {
    auto k2 = fixtures::k2();
    CHECK(classify_embedding_type(k2.g, {2, {0, 1}, {2}}) == T("LLL"));
    CHECK(classify_embedding_type(k2.g, {2, {0, 1}, {1}}) == T("RRR"));
    auto d = fixtures::diamond();
    CHECK(classify_embedding_type(d.g, {2, {0, 1, 2, 3}, {1, 2, 1, 2}}) == T("NNN"));
    auto p = fixtures::path3();
    CHECK(classify_embedding_type(p.g, {2, {0, 1, 2}, {1, 1}}) == T("RRR"));
    CHECK(classify_embedding_type(p.g, {2, {0, 1, 2}, {1, 2}}) == T("RBL"));
    // (s,t) on the left around a right-page path.
    auto t3 = fixtures::t3();
    CHECK(classify_embedding_type(t3.g, {2, {0, 1, 2}, {2, 2, 1}}) == T("NNN"));
    CHECK(classify_embedding_type(t3.g, {2, {0, 1, 2}, {1, 1, 1}}) == T("RRR"));
}

TEST_CASE("classification always lands on an admissible type") {
    for (const auto& level : exhaustive_upto(5))
        for (const auto& g : level)
            for_each_kube(g.g, 2, nullptr, kDefaultBudget, [&](const BookEmbedding& be) {
                CHECK(type_index(classify_embedding_type(g.g, be)) >= 0);
                return true;
            });
}

TEST_CASE("s_node_compose examples") {
    CHECK(s_node_compose({T("RRR")}, {T("RRR")}) == TypeSet{T("RRR")});
    CHECK(s_node_compose({T("LLL")}, {T("RRR")}) == TypeSet{T("LBR")});
    CHECK(s_node_compose({T("NNN")}, {T("NNN")}) == TypeSet{T("NNN")});
    CHECK(s_node_compose({T("NRN")}, {T("NLN")}) == TypeSet{T("NBN")});
    CHECK(s_node_compose({T("RRN")}, {T("NNN")}) == TypeSet{T("RRN")});
    CHECK(s_node_compose({}, {T("NNN")}).empty());
}

TEST_CASE("p_node_types_fixed examples") {
    CHECK(p_node_types_fixed({{T("NRR")}, {T("NBR")}}).empty());
    // The left child covers every interval from the left, so the right
    // child's left-visible portion is hidden.
    CHECK(p_node_types_fixed({{T("RRR")}, {T("RBR")}}) == TypeSet{T("RRR")});
    // A left part seen only from the left leaves no room for a right child
    // with an inner vertex.
    CHECK(p_node_types_fixed({{T("LLL")}, TypeSet::all()}).empty());
    CHECK(p_node_types_fixed({{T("LLL")}, TypeSet::q_node()}, {false, true}) == TypeSet{T("LLL")});
    // The diamond: one path left of the spine, one right.
    CHECK(p_node_types_fixed({{T("RRR")}, {T("LLL")}}).contains(T("NNN")));
    // A single edge left of a path that turns around it.
    CHECK(p_node_types_fixed({TypeSet::q_node(), {T("LBR")}}, {true, false}).contains(T("NRR")));
}

TEST_CASE("fixed fold equals the enumerated spine-walk model") {
    Rng rng(11);
    for (int iter = 0; iter < 3000; ++iter) {
        int k = rng.range(1, 5);
        std::vector<TypeSet> ch;
        std::vector<bool> q(k, false);
        for (int i = 0; i < k; ++i) ch.push_back(random_set(rng));
        if (rng.coin()) {
            int i = rng.below(k);
            q[i] = true;
            ch[i] = TypeSet::q_node();
        }
        REQUIRE(p_node_types_fixed(ch, q) == p_node_types_fixed_enumerated(ch, q));
    }
}

TEST_CASE("p_node_types_variable examples") {
    auto r = p_node_types_variable({TypeSet::q_node(), {T("NRR")}}, {true, false});
    CHECK(r.contains(T("NRR")));
    CHECK_FALSE(p_node_types_variable({{T("NBR")}, {T("NBR")}}).contains(T("NRR")));
    CHECK(p_node_types_variable({{T("LBR")}, {T("LBR")}, {T("LBR")}}).contains(T("LBR")));
    CHECK_FALSE(p_node_types_variable({{T("LBR")}, {T("LBR")}, {T("RBR")}}).contains(T("LBR")));
}

TEST_CASE("pattern derivation is saturated") {
    auto a = derive_p_patterns(11);
    auto b = derive_p_patterns(12);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].result == b[i].result);
        REQUIRE(a[i].groups.size() == b[i].groups.size());
        for (size_t j = 0; j < a[i].groups.size(); ++j) {
            CHECK(a[i].groups[j].type == b[i].groups[j].type);
            CHECK(a[i].groups[j].unbounded == b[i].groups[j].unbounded);
        }
    }
}

TEST_CASE("variable P-node equals the union of fixed folds over all orders") {
    Rng rng(5);
    for (int iter = 0; iter < 1500; ++iter) {
        int k = rng.range(1, 5);
        std::vector<TypeSet> ch;
        std::vector<bool> q(k, false);
        for (int i = 0; i < k; ++i) ch.push_back(random_set(rng));
        if (rng.coin(1, 3)) {
            int i = rng.below(k);
            q[i] = true;
            ch[i] = TypeSet::q_node();
        }
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        TypeSet expect;
        do {
            std::vector<TypeSet> pc;
            std::vector<bool> pq;
            for (int i : perm) {
                pc.push_back(ch[i]);
                pq.push_back(q[i]);
            }
            expect |= p_node_types_fixed(pc, pq);
        } while (std::next_permutation(perm.begin(), perm.end()));
        REQUIRE(p_node_types_variable(ch, q) == expect);
    }
}

TEST_CASE("feasible_flow") {
    SUBCASE("assignment network carries one unit per child") {
        FlowNetwork net;
        net.source = net.add_node();
        net.sink = net.add_node();
        const int k = 5;
        int slot = net.add_node();
        std::vector<int> arcs;
        for (int i = 0; i < k; ++i) {
            int c = net.add_node();
            arcs.push_back(net.add_arc(net.source, c, 1, 1));
            net.add_arc(c, slot, 0, 1);
        }
        int out = net.add_arc(slot, net.sink, 1, kFlowInfinity);
        auto f = feasible_flow(net);
        REQUIRE(f);
        CHECK((*f)[out] == k);
        for (int a : arcs) CHECK((*f)[a] == 1);
    }
    SUBCASE("forced unit with no route") {
        FlowNetwork net;
        net.source = net.add_node();
        net.sink = net.add_node();
        int a = net.add_node();
        net.add_arc(net.source, a, 1, 1);
        CHECK_FALSE(feasible_flow(net));
    }
    SUBCASE("zero lower bounds admit the zero flow") {
        FlowNetwork net;
        net.source = net.add_node();
        net.sink = net.add_node();
        net.add_arc(net.source, net.sink, 0, 3);
        auto f = feasible_flow(net);
        REQUIRE(f);
    }
    SUBCASE("lower bounds along a chain") {
        FlowNetwork net;
        net.source = net.add_node();
        net.sink = net.add_node();
        int a = net.add_node();
        net.add_arc(net.source, a, 2, 5);
        net.add_arc(a, net.sink, 0, 1);
        CHECK_FALSE(feasible_flow(net));
        net.add_arc(a, net.sink, 1, 1);
        auto f = feasible_flow(net);
        REQUIRE(f);
        CHECK((*f)[0] == 2);
    }
}
