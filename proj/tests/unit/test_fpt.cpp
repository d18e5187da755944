#include <string>

#include "../common/fixtures.hpp"
#include "doctest.h"
#include "ube/fpt.hpp"
#include "ube/generators.hpp"

using namespace ube;

namespace {

// Types of every 2UBE of a graph, embedding-preserving when fixed is given.
TypeSet oracle_types(const Digraph& g, const PlaneStGraph* fixed) {
    TypeSet out;
    auto st = for_each_kube(g, 2, fixed, kDefaultBudget, [&](const BookEmbedding& be) {
        out.insert(classify_embedding_type(g, be));
        return true;
    });
    REQUIRE(st == SolveStatus::None);
    return out;
}

TypeSet oracle_node(const SpqrTree& tree, int id, EmbeddingMode mode) {
    if (mode == EmbeddingMode::Fixed) {
        auto pp = pertinent_plane(tree, id);
        return oracle_types(pp.g, &pp);
    }
    return oracle_types(pertinent_graph(tree, id).graph, nullptr);
}

bool brute(const PlaneStGraph& g, EmbeddingMode mode) {
    auto r = solve_kube_brute(g, 2, mode);
    REQUIRE(r.status != SolveStatus::Unknown);
    return r.status == SolveStatus::Found;
}

std::string describe(const PlaneStGraph& g) {
    std::string out;
    for (int x : canonical_code(g)) out += std::to_string(x) + " ";
    return out;
}

std::string join(const TypeSet& t) {
    std::string out;
    for (const auto& n : t.names()) out += n + " ";
    return out;
}

}  // namespace

TEST_CASE("test_2ube_fpt examples") {
    CHECK(test_2ube_fpt(fixtures::diamond(), EmbeddingMode::Variable).answer);
    CHECK(test_2ube_fpt(fixtures::diamond(), EmbeddingMode::Fixed).answer);
    CHECK_FALSE(test_2ube_fpt(fixtures::forbidden_configuration(), EmbeddingMode::Fixed).answer);
    CHECK(test_2ube_fpt(fixtures::forbidden_configuration(), EmbeddingMode::Variable).answer);
    CHECK(test_2ube_fpt(fixtures::forbidden_configuration().g).answer);
    auto k2 = test_2ube_fpt(fixtures::k2(), EmbeddingMode::Fixed);
    CHECK(k2.node_types[k2.tree.root] == TypeSet::q_node());
}

TEST_CASE("r_node_types on a K4 skeleton of real edges") {
    LrOrders lr;
    lr.out = {{0, 1}, {3, 2}, {4}, {}};
    lr.in = {{}, {0}, {2, 1}, {3, 4}};
    auto g = plane_from_lr(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}, lr);
    auto tree = build_spqr(g);
    const auto& r = tree.root_child();
    REQUIRE(r.type == SpqrType::R);
    std::vector<TypeSet> ch(r.children.size(), TypeSet::q_node());
    std::vector<bool> q(r.children.size(), true);
    CHECK(r_node_types(r, ch, q, EmbeddingMode::Fixed) == oracle_types(g.g, &g));
    CHECK(r_node_types(r, ch, q, EmbeddingMode::Variable) == oracle_types(g.g, nullptr));
    ch[2] = TypeSet{};
    CHECK(r_node_types(r, ch, q, EmbeddingMode::Variable).empty());
}

TEST_CASE("node types equal the types of all 2UBEs of each pertinent graph") {
    for (auto mode : {EmbeddingMode::Fixed, EmbeddingMode::Variable})
        for_each_plane_st_graph(6, false, [&](const PlaneStGraph& g) {
                auto r = test_2ube_fpt(g, mode);
                for (int id = 0; id < static_cast<int>(r.tree.nodes.size()); ++id) {
                    if (id == r.tree.root) continue;
                    auto expect = oracle_node(r.tree, id, mode);
                    if (r.node_types[id] != expect) {
                        INFO(describe(g), " node ", id, " ", to_string(r.tree.nodes[id].type), " mode ",
                             mode == EmbeddingMode::Fixed ? "fixed" : "variable");
                        INFO("got ", join(r.node_types[id]), " expected ", join(expect));
                        FAIL_CHECK("type set mismatch");
                    }
                }
            });
}

TEST_CASE("test_2ube_fpt agrees with the brute-force solver on small graphs") {
    for (auto mode : {EmbeddingMode::Fixed, EmbeddingMode::Variable})
        for_each_plane_st_graph(6, false, [&](const PlaneStGraph& g) {
            if (test_2ube_fpt(g, mode).answer != brute(g, mode)) {
                INFO(describe(g));
                FAIL_CHECK("decision mismatch");
            }
        });
}

TEST_CASE("test_2ube_fpt agrees with the brute-force solver on random graphs") {
    Rng rng(2024);
    int yes = 0, no = 0;
    for (int iter = 0; iter < 120; ++iter) {
        int n = rng.range(6, 16);
        PlaneStGraph g = iter % 3 == 0 ? series_parallel(n, rng.next())
                                       : random_planar_st(n, rng.next(), {rng.range(1, 3), iter % 3 == 2});
        for (auto mode : {EmbeddingMode::Fixed, EmbeddingMode::Variable}) {
            bool expect = brute(g, mode);
            (expect ? yes : no) += 1;
            if (test_2ube_fpt(g, mode).answer != expect) {
                INFO(describe(g), " mode ", mode == EmbeddingMode::Fixed ? "fixed" : "variable");
                FAIL_CHECK("decision mismatch");
            }
        }
    }
    CHECK(yes > 20);
    CHECK(no > 20);
}

TEST_CASE("types of restricted 2UBEs are among the computed node types") {
    Rng rng(77);
    long visited = 0;
    for (int iter = 0; iter < 30; ++iter) {
        auto g = random_planar_st(rng.range(5, 8), rng.next(), {2, iter % 2 == 0});
        for (auto mode : {EmbeddingMode::Fixed, EmbeddingMode::Variable}) {
            auto r = test_2ube_fpt(g, mode);
            std::vector<Pertinent> pert;
            for (int id = 0; id < static_cast<int>(r.tree.nodes.size()); ++id)
                if (id != r.tree.root) pert.push_back(pertinent_graph(r.tree, id));
            for_each_kube(g.g, 2, mode == EmbeddingMode::Fixed ? &g : nullptr, kDefaultBudget,
                          [&](const BookEmbedding& be) {
                              ++visited;
                              int idx = 0;
                              for (int id = 0; id < static_cast<int>(r.tree.nodes.size()); ++id) {
                                  if (id == r.tree.root) continue;
                                  const auto& p = pert[idx++];
                                  BookEmbedding sub{2, {}, {}};
                                  std::vector<int> local(g.n(), -1);
                                  for (size_t i = 0; i < p.vertex.size(); ++i) local[p.vertex[i]] = static_cast<int>(i);
                                  for (int v : be.order)
                                      if (local[v] >= 0) sub.order.push_back(local[v]);
                                  for (int e : p.edge) sub.page.push_back(be.page[e]);
                                  if (!r.node_types[id].contains(classify_embedding_type(p.graph, sub)))
                                      FAIL_CHECK("restricted type missing at node " << id);
                              }
                              return true;
                          });
        }
    }
    CHECK(visited > 100);
}
