#include <set>

#include "../common/fixtures.hpp"
#include "doctest.h"
#include "ube/generators.hpp"
#include "ube/graph.hpp"

using namespace ube;

TEST_CASE("validate: small valid graphs") {
    CHECK(validate_plane_st_graph(fixtures::k2()).ok());
    CHECK(validate_plane_st_graph(fixtures::diamond()).ok());
    CHECK(validate_plane_st_graph(fixtures::t3()).ok());
    CHECK(validate_plane_st_graph(fixtures::forbidden_configuration()).ok());
}

TEST_CASE("validate: two sinks reported") {
    auto g = plane_from_rotation(3, {{0, 1}, {0, 2}}, 0, 1, {{0, 1}, {0}, {1}});
    auto rep = validate_plane_st_graph(g);
    REQUIRE_FALSE(rep.ok());
    bool found = false;
    for (const auto& s : rep.issues) found |= (s == "2 sinks");
    CHECK(found);
}

TEST_CASE("validate: cycle and nonplanar rotation") {
    // Triangle with a cycle.
    auto cyc = plane_from_rotation(3, {{0, 1}, {1, 2}, {2, 0}}, 0, 2, {{0, 2}, {1, 0}, {2, 1}});
    auto rep = validate_plane_st_graph(cyc);
    CHECK_FALSE(rep.ok());
    CHECK(rep.issues.front() == "cycle found");
    // K4 with a rotation that is not planar.
    std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto bad = plane_from_rotation(4, e, 0, 3, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 5, 4}});
    bool nonplanar = false;
    for (const auto& s : validate_plane_st_graph(bad).issues) nonplanar |= s.rfind("rotation system is not planar", 0) == 0;
    CHECK(nonplanar);
}

TEST_CASE("faces: K2") {
    auto fs = compute_faces(fixtures::k2());
    REQUIRE(fs.faces.size() == 1);
    CHECK(fs.faces[0].is_outer);
    CHECK(fs.faces[0].left_path == std::vector<int>{0, 1});
    CHECK(fs.faces[0].right_path == std::vector<int>{0, 1});
}

TEST_CASE("faces: diamond") {
    auto fs = compute_faces(fixtures::diamond());
    REQUIRE(fs.faces.size() == 2);
    auto internal = fs.internal();
    REQUIRE(internal.size() == 1);
    const auto& f = fs.faces[internal[0]];
    CHECK(f.left_path == std::vector<int>{0, 1, 3});
    CHECK(f.right_path == std::vector<int>{0, 2, 3});
    CHECK(f.source == 0);
    CHECK(f.sink == 3);
    const auto& o = fs.faces[fs.outer];
    CHECK(o.left_path == std::vector<int>{0, 1, 3});
    CHECK(o.right_path == std::vector<int>{0, 2, 3});
}

TEST_CASE("faces: T3") {
    auto fs = compute_faces(fixtures::t3());
    auto internal = fs.internal();
    REQUIRE(internal.size() == 1);
    const auto& f = fs.faces[internal[0]];
    CHECK(f.left_path == std::vector<int>{0, 1, 2});
    CHECK(f.right_path == std::vector<int>{0, 2});
    CHECK(f.right_edges == std::vector<int>{2});
}

namespace {
std::multiset<Edge> dual_edges(const DualGraph& d) { return {d.edges.begin(), d.edges.end()}; }
}  // namespace

TEST_CASE("dual graph examples") {
    auto d3 = dual_graph(fixtures::t3());
    CHECK(d3.n == 3);
    CHECK(dual_edges(d3) == std::multiset<Edge>{{d3.s_star, 0}, {d3.s_star, 0}, {0, d3.t_star}});
    auto dd = dual_graph(fixtures::diamond());
    CHECK(dual_edges(dd) == std::multiset<Edge>{{dd.s_star, 0}, {dd.s_star, 0}, {0, dd.t_star}, {0, dd.t_star}});
    auto dk = dual_graph(fixtures::k2());
    CHECK(dk.n == 2);
    CHECK(dual_edges(dk) == std::multiset<Edge>{{dk.s_star, dk.t_star}});
}

TEST_CASE("classify faces") {
    auto d = classify_faces(fixtures::diamond());
    REQUIRE(d.classes.size() == 1);
    CHECK(d.classes[0].kind == FaceKind::Rhombus);
    CHECK_FALSE(d.has_forbidden);
    auto t = classify_faces(fixtures::t3());
    CHECK(t.classes[0].kind == FaceKind::GeneralizedTriangle);
    CHECK(t.classes[0].single_edge_side == 2);
    CHECK_FALSE(t.has_forbidden);
    auto fc = classify_faces(fixtures::forbidden_configuration());
    CHECK(fc.has_forbidden);
    CHECK(fc.forbidden_edges == std::vector<int>{2});
}

TEST_CASE("generators: rhombus grid and determinism") {
    CHECK(canonical_code(rhombus_grid(1, 1)) == canonical_code(fixtures::diamond()));
    auto g = rhombus_grid(2, 3);
    CHECK(validate_plane_st_graph(g).ok());
    for (const auto& c : classify_faces(g).classes) CHECK(c.kind == FaceKind::Rhombus);
    CHECK(canonical_code(random_planar_st(20, 7)) == canonical_code(random_planar_st(20, 7)));
    CHECK(random_planar_st(20, 7).g.edges == random_planar_st(20, 7).g.edges);
    for (int seed = 0; seed < 30; ++seed) {
        CHECK(validate_plane_st_graph(random_planar_st(12, seed)).ok());
        CHECK(validate_plane_st_graph(random_planar_st(12, seed, {3, true})).ok());
        CHECK(validate_plane_st_graph(series_parallel(12, seed)).ok());
        auto lr = long_right_path(20, seed);
        CHECK(lr.n() == 20);
        auto fs = compute_faces(lr);
        for (const auto& f : fs.faces) {
            if (f.is_outer) continue;
            CHECK(f.left_edges.size() >= 2);
            CHECK(f.right_edges.size() >= 3);
        }
    }
}

TEST_CASE("exhaustive_small(3) has the path and T3") {
    auto gs = exhaustive_small(3);
    REQUIRE(gs.size() == 2);
    std::set<std::vector<int>> codes;
    for (const auto& g : gs) codes.insert(canonical_code_up_to_mirror(g));
    CHECK(codes.count(canonical_code_up_to_mirror(fixtures::path3())) == 1);
    CHECK(codes.count(canonical_code_up_to_mirror(fixtures::t3())) == 1);
    CHECK(exhaustive_small(3, true).size() == 3);
}

TEST_CASE("properties over small exhaustive sets") {
    auto pool = exhaustive_upto(7);
    for (int n = 2; n <= 7; ++n)
        for (const auto& g : pool[n]) {
            REQUIRE(validate_plane_st_graph(g).ok());
            auto fs = compute_faces(g);
            CHECK(g.n() - g.m() + static_cast<int>(fs.faces.size()) == 2);
            auto d = dual_graph(g, fs);
            // Acyclicity and unique source/sink of the dual (multi-edges allowed).
            std::vector<int> indeg(d.n, 0), outdeg(d.n, 0);
            for (auto [a, b] : d.edges) {
                ++outdeg[a];
                ++indeg[b];
            }
            for (int v = 0; v < d.n; ++v) {
                CHECK((indeg[v] == 0) == (v == d.s_star));
                CHECK((outdeg[v] == 0) == (v == d.t_star));
            }
            CHECK(face_schedule(g, fs).size() + 1 == fs.faces.size());
            for (const auto& c : classify_faces(g).classes)
                CHECK_FALSE((c.kind == FaceKind::Rhombus && c.single_edge_side != 0));
            auto r = reverse(g);
            REQUIRE(validate_plane_st_graph(r).ok());
            auto fr = compute_faces(r);
            CHECK(fr.faces.size() == fs.faces.size());
            for (const auto& f : fs.faces) {
                // The same region, traversed by the other dart.
                const auto& f2 = fr.faces[fr.dart_face[f.darts[0] ^ 1]];
                std::vector<int> lp(f.left_path.rbegin(), f.left_path.rend());
                CHECK(f2.right_path == lp);
            }
        }
}
