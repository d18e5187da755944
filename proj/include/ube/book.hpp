#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ube/graph.hpp"

namespace ube {

// k-page upward book embedding: spine order (bottom to top) and a page in
// 1..k for every edge. Page 1 is drawn left of the spine, page 2 right.
struct BookEmbedding {
    int k = 1;
    std::vector<int> order;
    std::vector<int> page;

    // pos[v] = index of v in order.
    std::vector<int> positions(int n) const;
};

bool edges_conflict(const std::vector<int>& pos, Edge a, Edge b);

struct VerifyReport {
    bool valid = false;
    std::string message;
    int edge_a = -1;
    int edge_b = -1;
};

VerifyReport verify_kube(const Digraph& g, const BookEmbedding& be);

// Embedding of the canonical drawing of a 1- or 2-page embedding. Throws on
// invalid input.
PlaneStGraph induced_embedding(const Digraph& g, const BookEmbedding& be);

// Same rotation system and outer face, compared as left-to-right orders.
bool same_embedding(const PlaneStGraph& a, const PlaneStGraph& b);
bool is_embedding_preserving(const PlaneStGraph& g, const BookEmbedding& be);

// Moves every edge between spine-consecutive vertices to page 1.
void normalize_spine_edges(const Digraph& g, BookEmbedding& be);

enum class EmbeddingMode { Variable, Fixed };
enum class SolveStatus { Found, None, Unknown };
const char* to_string(SolveStatus s);

inline constexpr std::int64_t kDefaultBudget = 10'000'000;

struct SolveResult {
    SolveStatus status = SolveStatus::Unknown;
    std::optional<BookEmbedding> embedding;
    std::int64_t nodes = 0;
};

// Exact backtracking search. Vertices are appended to the spine smallest
// eligible id first; pages are tried 1..k. The budget counts search nodes.
SolveResult solve_kube_brute(const Digraph& g, int k, std::int64_t budget = kDefaultBudget);
// Fixed mode requires k <= 2 and an embedding-preserving result.
SolveResult solve_kube_brute(const PlaneStGraph& g, int k, EmbeddingMode mode,
                             std::int64_t budget = kDefaultBudget);

// Visits every valid (order, page) pair without normalization or symmetry
// breaking; fixed != nullptr restricts to embedding-preserving ones. The
// visitor returns false to stop. Returns None when the search completed,
// Found when stopped by the visitor, Unknown when out of budget.
SolveStatus for_each_kube(const Digraph& g, int k, const PlaneStGraph* fixed, std::int64_t budget,
                          const std::function<bool(const BookEmbedding&)>& visit);

struct HpCompletion {
    PlaneStGraph graph;
    std::vector<int> path;
    std::vector<int> dummy_edges;
};

HpCompletion two_ube_to_hp_completion(const PlaneStGraph& g, const BookEmbedding& be);
BookEmbedding hp_completion_to_2ube(const PlaneStGraph& g, const PlaneStGraph& completion,
                                    const std::vector<int>& path);

}  // namespace ube
