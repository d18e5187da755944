#include <regex>

#include "../common/fixtures.hpp"
#include "doctest.h"
#include "ube/book.hpp"
#include "ube/generators.hpp"
#include "ube/render.hpp"

using namespace ube;

namespace {

int count_of(const std::string& text, const std::string& needle) {
    int c = 0;
    for (std::size_t at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("diamond arc diagram has two arcs per side") {
    auto g = fixtures::diamond();
    BookEmbedding be{2, {0, 1, 2, 3}, {1, 2, 1, 2}};
    REQUIRE(verify_kube(g.g, be).valid);
    auto svg = render_arc_diagram(g.g, be);
    CHECK(count_of(svg, "class=\"arc page1\"") == 2);
    CHECK(count_of(svg, "class=\"arc page2\"") == 2);
    CHECK(count_of(svg, "<circle") == 4);
    CHECK(count_of(svg, "stroke-dasharray") == 0);
    int left = 0;
    for (const auto& a : arc_layout(g.g, be)) left += a.left;
    CHECK(left == 2);
}

TEST_CASE("K2 renders one arc") {
    auto g = fixtures::k2();
    BookEmbedding be{1, {0, 1}, {1}};
    auto svg = render_arc_diagram(g.g, be, {"s", "t"});
    CHECK(count_of(svg, "<path") == 1);
    CHECK(svg.find(">s</text>") != std::string::npos);
}

TEST_CASE("third page is drawn right and dashed") {
    Digraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    BookEmbedding be{3, {0, 1, 2, 3}, {1, 1, 3, 1, 2, 1}};
    REQUIRE(verify_kube(k4, be).valid);
    auto svg = render_arc_diagram(k4, be);
    CHECK(count_of(svg, "class=\"arc page3\"") == 1);
    CHECK(count_of(svg, "stroke-dasharray") == 1);
    for (const auto& a : arc_layout(k4, be)) CHECK(a.left == (a.page == 1));
}

TEST_CASE("rendering rejects an invalid embedding") {
    auto g = fixtures::diamond();
    BookEmbedding be{1, {0, 1, 2, 3}, {1, 1, 1, 1}};
    CHECK_THROWS_AS(render_arc_diagram(g.g, be), std::invalid_argument);
}

TEST_CASE("same-page arcs never interleave and output is reproducible") {
    for (int seed = 0; seed < 40; ++seed) {
        auto g = random_planar_st(9, seed);
        auto res = solve_kube_brute(g.g, 3);
        REQUIRE(res.status == SolveStatus::Found);
        const auto& be = *res.embedding;
        auto arcs = arc_layout(g.g, be);
        for (std::size_t i = 0; i < arcs.size(); ++i)
            for (std::size_t j = 0; j < arcs.size(); ++j) {
                const auto &a = arcs[i], &b = arcs[j];
                if (i == j || a.page != b.page) continue;
                CHECK_FALSE((a.low < b.low && b.low < a.high && a.high < b.high));
            }
        auto svg = render_arc_diagram(g.g, be);
        CHECK(svg == render_arc_diagram(g.g, be));
        CHECK(count_of(svg, "<path") == g.m());
        static const std::regex header("^<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"[0-9.]+\"");
        CHECK(std::regex_search(svg, header));
    }
}
