#include <stdexcept>

#include "../common/fixtures.hpp"
#include "doctest.h"
#include "ube/constructions.hpp"
#include "ube/generators.hpp"

using namespace ube;

namespace {

// Checks the completion contract and returns the derived 2UBE.
BookEmbedding check_completion(const PlaneStGraph& g, const HpCompletion& hc) {
    REQUIRE(validate_plane_st_graph(hc.graph).ok());
    REQUIRE(static_cast<int>(hc.path.size()) == g.n());
    for (size_t i = 0; i + 1 < hc.path.size(); ++i) CHECK(hc.graph.g.find_edge(hc.path[i], hc.path[i + 1]) >= 0);
    // The completion restricted to the original edges is the original embedding.
    auto lr = lr_orders(hc.graph);
    auto orig = lr_orders(g);
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> out, in;
        for (int e : lr.out[v])
            if (e < g.m()) out.push_back(e);
        for (int e : lr.in[v])
            if (e < g.m()) in.push_back(e);
        CHECK(out == orig.out[v]);
        CHECK(in == orig.in[v]);
    }
    auto be = hp_completion_to_2ube(g, hc.graph, hc.path);
    CHECK(verify_kube(g.g, be).valid);
    CHECK(is_embedding_preserving(g, be));
    return be;
}

// s=0, a=1, t=2, b=3, c=4: left path s-a-t, right path s-b-c-t.
PlaneStGraph one_long_face() {
    LrOrders lr;
    lr.out = {{0, 2}, {1}, {}, {3}, {4}};
    lr.in = {{}, {0}, {1, 4}, {2}, {3}};
    return plane_from_lr(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 2}}, lr);
}

}  // namespace

TEST_CASE("hp_complete_long_right examples") {
    SUBCASE("single face") {
        auto g = one_long_face();
        ConstructionStats st;
        auto hc = hp_complete_long_right(g, &st);
        CHECK(st.faces == 1);
        CHECK(st.cases[1] == 1);
        // The first left edge is bypassed; (s,b) is already a real edge.
        CHECK(hc.path == std::vector<int>{0, 3, 4, 1, 2});
        REQUIRE(hc.dummy_edges.size() == 1);
        CHECK(hc.graph.g.edges[hc.dummy_edges[0]] == Edge{4, 1});
        check_completion(g, hc);
    }
    SUBCASE("left boundary alone") {
        auto g = fixtures::path3();
        auto hc = hp_complete_long_right(g);
        CHECK(hc.path == std::vector<int>{0, 1, 2});
        CHECK(hc.dummy_edges.empty());
    }
    SUBCASE("generated instance") {
        auto g = long_right_path(30, 3);
        ConstructionStats st;
        check_completion(g, hp_complete_long_right(g, &st));
        CHECK(st.invariant_checks == st.faces);
    }
    SUBCASE("precondition names the face") {
        try {
            hp_complete_long_right(fixtures::diamond());
            FAIL("expected an error");
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find("face") != std::string::npos);
        }
    }
}

TEST_CASE("hp_complete_rhombi examples") {
    auto d = fixtures::diamond();
    auto hc = hp_complete_rhombi(d);
    REQUIRE(hc.dummy_edges.size() == 1);
    auto dummy = hc.graph.g.edges[hc.dummy_edges[0]];
    CHECK((dummy == Edge{1, 2} || dummy == Edge{2, 1}));
    check_completion(d, hc);
    auto grid = rhombus_grid(2, 2);
    ConstructionStats st;
    auto g2 = hp_complete_rhombi(grid, &st);
    check_completion(grid, g2);
    CHECK(g2.dummy_edges.size() == static_cast<size_t>(st.faces));
    CHECK(st.cases[1] > 0);
    CHECK(st.cases[2] > 0);
    auto a = hp_complete_rhombi(rhombus_grid(1, 1)), b = hp_complete_rhombi(rhombus_grid(1, 1));
    CHECK(a.path == b.path);
    CHECK(a.graph.g.edges == b.graph.g.edges);
    CHECK_THROWS_AS(hp_complete_rhombi(fixtures::t3()), std::invalid_argument);
}

TEST_CASE("constructions on generated families") {
    Rng rng(12);
    std::array<int, 5> cases{};
    for (int iter = 0; iter < 60; ++iter) {
        auto g = long_right_path(rng.range(4, 40), rng.next());
        ConstructionStats st;
        auto hc = hp_complete_long_right(g, &st);
        check_completion(g, hc);
        for (int c = 1; c <= 4; ++c) cases[c] += st.cases[c];
        if (g.n() <= 12) CHECK(solve_kube_brute(g, 2, EmbeddingMode::Fixed).status == SolveStatus::Found);
    }
    for (int c = 1; c <= 4; ++c) CHECK(cases[c] > 0);
    for (int iter = 0; iter < 60; ++iter) {
        // Rhombi over random pairs of right-boundary edges.
        StBuilder b(rng.range(2, 4));
        int faces = rng.range(1, 25);
        while (faces > 0) {
            int len = static_cast<int>(b.right_boundary().size());
            int i = rng.range(0, len - 3);
            if (b.add_face(i, i + 2, 1)) --faces;
        }
        auto g = b.build();
        ConstructionStats st;
        check_completion(g, hp_complete_rhombi(g, &st));
        CHECK(st.invariant_checks == st.faces);
    }
    for (int r = 1; r <= 4; ++r)
        for (int c = 1; c <= 4; ++c) {
            auto g = rhombus_grid(r, c);
            check_completion(g, hp_complete_rhombi(g));
            if (g.n() <= 12) CHECK(solve_kube_brute(g, 2, EmbeddingMode::Fixed).status == SolveStatus::Found);
        }
}
