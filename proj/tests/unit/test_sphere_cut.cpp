#include <algorithm>

#include "../common/skeletons.hpp"
#include "doctest.h"
#include "ube/generators.hpp"
#include "ube/sphere_cut.hpp"

using namespace ube;
using fixtures::brute_branchwidth;
using fixtures::c4;
using fixtures::k4;

namespace {

std::vector<PlaneMultigraph> random_skeletons(int count, int min_edges, int max_edges, std::uint64_t seed) {
    std::vector<PlaneMultigraph> out;
    Rng rng(seed);
    for (int iter = 0; static_cast<int>(out.size()) < count && iter < 5000; ++iter) {
        auto g = random_planar_st(rng.range(5, 14), rng.next(), {rng.range(1, 2), true});
        auto tree = build_spqr(g);
        for (const auto& nd : tree.nodes) {
            if (nd.type != SpqrType::R) continue;
            auto sk = skeleton_plus(nd);
            if (sk.m() >= min_edges && sk.m() <= max_edges && static_cast<int>(out.size()) < count)
                out.push_back(sk);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("faces of skeletons satisfy Euler's formula") {
    for (const auto& sk : random_skeletons(40, 6, 60, 1))
        CHECK(sk.n - sk.m() + static_cast<int>(sk.faces().size()) == 2);
}

TEST_CASE("sphere-cut examples") {
    SUBCASE("K4 has width 3") {
        auto g = k4();
        auto d = build_sphere_cut(g, 0);
        CHECK(validate_sphere_cut(g, d).empty());
        CHECK(d.exact);
        CHECK(d.width == 3);
        CHECK(brute_branchwidth(g) == 3);
    }
    SUBCASE("C4 has width 2") {
        auto g = c4();
        auto d = build_sphere_cut(g, 0);
        CHECK(validate_sphere_cut(g, d).empty());
        CHECK(d.width == 2);
        CHECK(brute_branchwidth(g) == 2);
    }
    SUBCASE("swapping two leaves breaks the middle sets") {
        auto g = k4();
        auto d = build_sphere_cut(g, 0);
        // Swap a leaf with the leaf of a disjoint edge.
        int a = -1, b = -1;
        for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i)
            if (d.nodes[i].edge == 1) a = i;
            else if (d.nodes[i].edge == 3) b = i;
        REQUIRE(a >= 0);
        REQUIRE(b >= 0);
        std::swap(d.nodes[a].edge, d.nodes[b].edge);
        CHECK_FALSE(validate_sphere_cut(g, d).empty());
    }
    SUBCASE("a disconnected side is reported") {
        auto g = c4();
        SphereCutDecomposition d;
        d.nodes.resize(7);
        auto link = [&](int p, int c) {
            d.nodes[p].children.push_back(c);
            d.nodes[c].parent = p;
        };
        d.root = 0;
        d.nodes[0].edge = 3;
        link(0, 1);
        link(1, 2);
        link(1, 3);
        d.nodes[3].edge = 1;
        link(2, 4);
        link(2, 5);
        d.nodes[4].edge = 0;
        d.nodes[5].edge = 2;
        d.nodes.pop_back();
        auto issues = validate_sphere_cut(g, d);
        REQUIRE_FALSE(issues.empty());
        CHECK(std::any_of(issues.begin(), issues.end(),
                          [](const std::string& s) { return s.find("noose condition violated") != std::string::npos; }));
    }
    SUBCASE("a degree-one vertex is rejected") {
        PlaneMultigraph g;
        g.n = 3;
        g.edges = {{0, 1}, {1, 2}};
        g.rotation = {{0}, {0, 1}, {1}};
        CHECK_THROWS(build_sphere_cut(g, 0));
    }
}

TEST_CASE("exact sphere-cut width equals the brute-force branchwidth") {
    auto sks = random_skeletons(25, 6, 8, 2);
    REQUIRE(sks.size() >= 10);
    for (const auto& g : sks) {
        auto d = build_sphere_cut(g, g.m() - 1);
        CHECK(validate_sphere_cut(g, d).empty());
        CHECK(d.width == brute_branchwidth(g));
    }
}

TEST_CASE("greedy decompositions are valid and close to optimal") {
    for (const auto& g : random_skeletons(40, 6, 11, 3)) {
        auto exact = build_sphere_cut(g, g.m() - 1);
        auto greedy = build_sphere_cut(g, g.m() - 1, {0});
        CHECK(validate_sphere_cut(g, greedy).empty());
        CHECK_FALSE(greedy.exact);
        CHECK(greedy.width <= exact.width + 1);
        CHECK(greedy.width >= exact.width);
    }
    for (const auto& g : random_skeletons(30, 12, 80, 4)) {
        auto d = build_sphere_cut(g, g.m() - 1);
        CHECK(validate_sphere_cut(g, d).empty());
    }
}
