#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "../common/relabel.hpp"
#include "doctest.h"
#include "ube/generators.hpp"
#include "ube/reduction.hpp"

using namespace ube;

namespace {

BetweennessInstance instance(int s, std::vector<std::array<int, 3>> r) {
    BetweennessInstance inst;
    for (int i = 0; i < s; ++i) inst.S.push_back(std::string(1, static_cast<char>('a' + i)));
    inst.R = std::move(r);
    return inst;
}

// Satisfying orders collected independently of the solver's search order.
std::vector<std::vector<int>> all_solutions(const BetweennessInstance& inst) {
    const int n = static_cast<int>(inst.S.size());
    std::vector<std::vector<int>> out;
    std::vector<int> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    do {
        std::vector<int> rank(n);
        for (int i = 0; i < n; ++i) rank[tau[i]] = i;
        bool ok = true;
        for (const auto& [a, b, c] : inst.R)
            ok = ok && (rank[a] - rank[b]) * (rank[c] - rank[b]) < 0;
        if (ok) out.push_back(tau);
    } while (std::next_permutation(tau.begin(), tau.end()));
    return out;
}

std::array<int, 3> random_triplet(Rng& rng, int s) {
    std::array<int, 3> t{};
    t[0] = rng.below(s);
    do t[1] = rng.below(s);
    while (t[1] == t[0]);
    do t[2] = rng.below(s);
    while (t[2] == t[0] || t[2] == t[1]);
    return t;
}

std::vector<int> sources(const Digraph& g) {
    std::vector<int> indeg(g.n, 0), out;
    for (auto [u, v] : g.edges) ++indeg[v];
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) out.push_back(v);
    return out;
}

std::vector<int> sinks(const Digraph& g) {
    std::vector<int> outdeg(g.n, 0), out;
    for (auto [u, v] : g.edges) ++outdeg[u];
    for (int v = 0; v < g.n; ++v)
        if (outdeg[v] == 0) out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("betweenness brute force examples") {
    CHECK(solve_betweenness_brute(instance(3, {{0, 1, 2}})) == std::vector<int>{0, 1, 2});
    CHECK_FALSE(solve_betweenness_brute(instance(3, {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}})));
    CHECK(solve_betweenness_brute(instance(4, {})) == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(solve_betweenness_brute(instance(11, {})), std::invalid_argument);
    CHECK_THROWS_AS(validate_instance(instance(3, {{0, 0, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(validate_instance(instance(3, {{0, 1, 3}})), std::invalid_argument);
}

TEST_CASE("betweenness brute force returns the least satisfying order") {
    Rng rng(41);
    for (int iter = 0; iter < 200; ++iter) {
        const int s = rng.range(3, 6);
        std::vector<std::array<int, 3>> r;
        for (int j = rng.range(0, 4); j > 0; --j) r.push_back(random_triplet(rng, s));
        auto inst = instance(s, r);
        auto sols = all_solutions(inst);
        auto got = solve_betweenness_brute(inst);
        REQUIRE(got.has_value() == !sols.empty());
        if (got) {
            CHECK(*got == *std::min_element(sols.begin(), sols.end()));
            CHECK(satisfies(inst, *got));
        }
    }
}

TEST_CASE("betweenness JSON") {
    auto j = nlohmann::json::parse(R"({"S": [1, 2, 3], "R": [[1, 2, 3]]})");
    auto inst = instance_from_json(j);
    CHECK(inst.S == std::vector<std::string>{"1", "2", "3"});
    REQUIRE(inst.R.size() == 1);
    CHECK(inst.R[0] == std::array<int, 3>{0, 1, 2});
    auto back = instance_from_json(instance_to_json(inst));
    CHECK(back.S == inst.S);
    CHECK(back.R == inst.R);
    CHECK_THROWS_AS(instance_from_json(nlohmann::json::parse(R"({"S": ["a"], "R": [["a", "b", "a"]]})")),
                    std::invalid_argument);
}

TEST_CASE("gadget graph sizes") {
    CHECK(build_shell(0).graph.n == 9);
    for (int h = 0; h <= 6; ++h) {
        auto g = build_shell(h);
        CHECK(g.graph.n == 9 + 7 * h);
        std::set<std::string> names(g.names.begin(), g.names.end());
        CHECK(static_cast<int>(names.size()) == g.graph.n);
        for (int s = 1; s <= 3; ++s) CHECK(build_filled(h, s).graph.n == 9 + 7 * h + (h + 2) * s);
    }
    for (int h = 0; h <= 6; h += 2)
        for (int s = 1; s <= 3; ++s) CHECK(build_lambda_filled(h, s).graph.n == 9 + 7 * h + (h + 2) * s + 5 * (h / 2));
    CHECK_THROWS_AS(build_lambda_filled(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_lambda_filled(2, 0), std::invalid_argument);
}

TEST_CASE("named edge roles") {
    auto gg = build_lambda_filled(2, 2);
    const auto& G = gg.graph;
    auto edge = [&](const std::string& a, const std::string& b) { return G.find_edge(gg.vertex(a), gg.vertex(b)); };
    CHECK(static_cast<int>(gg.roles.size()) == G.m());
    std::set<Edge> distinct(G.edges.begin(), G.edges.end());
    CHECK(static_cast<int>(distinct.size()) == G.m());
    for (int i = 0; i <= 2; ++i) {
        const std::string I = std::to_string(i), P = std::to_string(i - 1);
        const auto& L = gg.levels[i];
        CHECK(L.forcing == std::vector<int>{edge("s_" + I, "sp_" + I), edge("q_" + I, "qp_" + I)});
        CHECK(L.channel[0] == edge("p_" + P, "t_" + I));
        CHECK(L.channel[1] == edge("t_" + P, "p_" + I));
        CHECK(L.closing == edge("tp_" + I, "t_" + I));
        for (int e : L.forcing) CHECK(gg.roles[e] == EdgeRole::Forcing);
        for (int e : L.channel) CHECK(gg.roles[e] == EdgeRole::Channel);
        CHECK(gg.roles[L.closing] == EdgeRole::Closing);
        CHECK((edge("tp_" + I, "p_" + I) >= 0) == (i % 2 == 0));
    }
    const LambdaGadget* g = gg.gadget(1);
    REQUIRE(g != nullptr);
    CHECK(g->x == gg.vertex("lambda_1_x"));
    CHECK(g->conflict == std::vector<int>{edge("lambda_1_u", "lambda_1_z"), edge("lambda_1_w", "p_1")});
    CHECK(edge("lambda_1_w", "lambda_1_x") >= 0);
    CHECK(edge("lambda_1_y", "lambda_1_z") >= 0);
    CHECK(gg.group(1)[2 - 1] == gg.vertex("alpha_1_2"));
    CHECK(gg.gadget(0) == nullptr);
}

TEST_CASE("reduction examples") {
    auto inst = instance(3, {{0, 1, 2}});
    auto gg = reduce_betweenness(inst, 3);
    CHECK(gg.h == 2);
    CHECK(gg.s == 3);
    CHECK(sources(gg.graph) == std::vector<int>{gg.source()});
    CHECK(sinks(gg.graph) == std::vector<int>{gg.sink()});
    CHECK(gg.names[gg.source()] == "s_2");
    CHECK(gg.names[gg.sink()] == "t_2");
    CHECK(gg.graph.topological_order().has_value());
    int triplet = 0, sink = 0;
    for (auto r : gg.roles) {
        triplet += r == EdgeRole::Triplet;
        sink += r == EdgeRole::Sink;
    }
    CHECK(triplet == 4);
    CHECK(sink == 3);
    CHECK_THROWS_AS(reduce_betweenness(instance(3, {}), 3), std::invalid_argument);
    CHECK_THROWS_AS(reduce_betweenness(instance(2, {}), 3), std::invalid_argument);
    CHECK_THROWS_AS(reduce_betweenness(inst, 2), std::invalid_argument);
}

TEST_CASE("bundles for more pages mutually conflict under the forced order") {
    Rng rng(3);
    for (int k = 4; k <= 6; ++k) {
        auto inst = instance(4, {{0, 1, 2}, {3, 1, 0}});
        auto gg = reduce_betweenness(inst, k);
        CHECK(sources(gg.graph).size() == 1);
        CHECK(sinks(gg.graph).size() == 1);
        auto tau = *solve_betweenness_brute(inst);
        BookEmbedding be{k, forced_order(gg, tau), {}};
        REQUIRE(gg.graph.topological_order());
        auto pos = be.positions(gg.graph.n);
        for (auto [u, v] : gg.graph.edges) REQUIRE(pos[u] < pos[v]);
        std::vector<std::vector<int>> bundles;
        for (const auto& L : gg.levels) bundles.push_back(L.forcing);
        for (const auto& g : gg.gadgets) bundles.push_back(g.conflict);
        for (const auto& b : bundles) {
            REQUIRE(static_cast<int>(b.size()) == k - 1);
            for (int e : b) CHECK(gg.roles[e] == EdgeRole::Bundle);
            for (size_t i = 0; i < b.size(); ++i)
                for (size_t j = i + 1; j < b.size(); ++j)
                    CHECK(edges_conflict(pos, gg.graph.edges[b[i]], gg.graph.edges[b[j]]));
        }
        // Triplet edges cross every gadget bundle edge.
        for (int e = 0; e < gg.graph.m(); ++e) {
            if (gg.roles[e] != EdgeRole::Triplet) continue;
            for (int c : gg.gadget(gg.edge_level[e])->conflict)
                CHECK(edges_conflict(pos, gg.graph.edges[e], gg.graph.edges[c]));
        }
    }
}

TEST_CASE("witness construction examples") {
    auto inst = instance(3, {{0, 1, 2}});
    auto gg = reduce_betweenness(inst, 3);
    const LambdaGadget& g = *gg.gadget(1);
    std::map<std::vector<int>, bool> x_first;
    for (auto tau : {std::vector<int>{0, 1, 2}, std::vector<int>{2, 1, 0}}) {
        auto be = construct_3ube_from_witness(inst, tau);
        CHECK(verify_kube(gg.graph, be).valid);
        auto pos = be.positions(gg.graph.n);
        x_first[tau] = pos[g.x] < pos[g.y];
        for (int e = 0; e < gg.graph.m(); ++e)
            if (gg.roles[e] == EdgeRole::Triplet) CHECK(be.page[e] == 3);
        CHECK(check_structural_conditions(gg, be).all_pass());
    }
    CHECK(x_first[{0, 1, 2}] != x_first[{2, 1, 0}]);
    CHECK_THROWS_AS(construct_3ube_from_witness(inst, {1, 0, 2}), std::invalid_argument);
}

TEST_CASE("witness construction on random satisfiable instances") {
    Rng rng(17);
    int built = 0;
    for (int iter = 0; iter < 60; ++iter) {
        const int s = rng.range(3, 5);
        std::vector<std::array<int, 3>> r;
        for (int j = rng.range(1, 3); j > 0; --j) r.push_back(random_triplet(rng, s));
        auto inst = instance(s, r);
        auto sols = all_solutions(inst);
        if (sols.empty()) continue;
        auto gg = reduce_betweenness(inst, 3);
        for (const auto& tau : {sols.front(), sols.back()}) {
            auto be = construct_3ube_from_witness(inst, tau);
            REQUIRE(verify_kube(gg.graph, be).valid);
            CHECK(check_structural_conditions(gg, be).all_pass());
            ++built;
        }
    }
    CHECK(built > 40);
}

TEST_CASE("structural conditions on the base shell") {
    auto gg = build_shell(0);
    auto v = [&](const char* name) { return gg.vertex(name); };
    BookEmbedding be;
    be.k = 3;
    be.order = {v("s_0"), v("q_0"), v("p_-1"), v("t_-1"), v("sp_0"), v("qp_0"), v("tp_0"), v("p_0"), v("t_0")};
    be.page.assign(gg.graph.m(), 1);
    const auto& L = gg.levels[0];
    be.page[L.forcing[1]] = 2;
    for (int e : L.channel) be.page[e] = 3;
    REQUIRE(verify_kube(gg.graph, be).valid);
    auto rep = check_structural_conditions(gg, be);
    CHECK(rep.all_pass());
    CHECK(rep.count("S1") == 1);
    CHECK(rep.count("S2") == 1);
    CHECK(rep.count("S3") == 0);
    // Splitting the channel edges needs a fourth page.
    auto split = be;
    split.k = 4;
    split.page[L.channel[0]] = 4;
    REQUIRE(verify_kube(gg.graph, split).valid);
    auto bad = check_structural_conditions(gg, split);
    CHECK_FALSE(bad.passes("S2"));
    CHECK(bad.passes("S1"));
    auto broken = be;
    broken.page[L.channel[0]] = 1;
    CHECK_THROWS_AS(check_structural_conditions(gg, broken), std::invalid_argument);
}

TEST_CASE("solver-found embeddings of lambda-filled shells satisfy the lemmas") {
    Rng rng(9);
    for (int h : {0, 2})
        for (int s = 1; s <= 3; ++s) {
            auto gg = build_lambda_filled(h, s);
            for (int rep = 0; rep < 8; ++rep) {
                auto r = rep == 0 ? solve_kube_brute(gg.graph, 3) : fixtures::solve_relabeled(gg.graph, 3, rng);
                REQUIRE(r.status == SolveStatus::Found);
                auto report = check_structural_conditions(gg, *r.embedding);
                for (const auto& c : report.results) {
                    INFO(c.name << " level " << c.level << " " << c.detail);
                    CHECK(c.pass);
                }
                if (h == 2) CHECK(report.count("G2") == 1);
            }
        }
}

TEST_CASE("reduction equivalence on small instances") {
    std::vector<std::array<int, 3>> triplets;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                if (a != b && b != c && a != c) triplets.push_back({a, b, c});
    int yes = 0, no = 0;
    for (size_t i = 0; i < triplets.size(); ++i)
        for (size_t j = i + 1; j < triplets.size(); ++j) {
            auto inst = instance(3, {triplets[i], triplets[j]});
            auto gg = reduce_betweenness(inst, 3);
            auto r = solve_kube_brute(gg.graph, 3, 100'000'000);
            REQUIRE(r.status != SolveStatus::Unknown);
            bool sat = solve_betweenness_brute(inst).has_value();
            CHECK((r.status == SolveStatus::Found) == sat);
            ++(sat ? yes : no);
            if (r.embedding) CHECK(check_structural_conditions(gg, *r.embedding).all_pass());
        }
    CHECK(yes > 0);
    CHECK(no > 0);
}
