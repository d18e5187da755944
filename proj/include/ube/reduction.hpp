#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ube/book.hpp"
#include "ube/graph.hpp"

namespace ube {

// Elements are referred to by index; R holds ordered triplets (a, b, c)
// asking for b between a and c.
struct BetweennessInstance {
    std::vector<std::string> S;
    std::vector<std::array<int, 3>> R;
};

// Throws std::invalid_argument on out-of-range or repeated triplet entries.
void validate_instance(const BetweennessInstance& inst);
// tau lists element indices from first to last.
bool satisfies(const BetweennessInstance& inst, const std::vector<int>& tau);
// Lexicographically least satisfying tau; requires |S| <= 10.
std::optional<std::vector<int>> solve_betweenness_brute(const BetweennessInstance& inst);

// {"S": [...], "R": [[a, b, c], ...]} with entries naming elements of S.
BetweennessInstance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const BetweennessInstance& inst);

enum class EdgeRole { Path, Forcing, Channel, Closing, Group, Gadget, Triplet, Bundle, Sink };
const char* to_string(EdgeRole r);

// Vertices of shell level i; s1, q1, t1 stand for s'_i, q'_i, t'_i.
struct ShellLevel {
    int s = -1, q = -1, s1 = -1, q1 = -1, t1 = -1, p = -1, t = -1;
    std::vector<int> extra;    // bundle endpoints beyond s, q (lower side) and s', q' (upper side)
    std::vector<int> forcing;  // (s_i,s'_i), (q_i,q'_i), then extra bundle edges
    std::array<int, 2> channel{-1, -1};  // (p_{i-1},t_i), (t_{i-1},p_i)
    int closing = -1;
};

// Gadget replacing (t'_i, p_i): the path t'_i, u..., w, {x | y}, z..., p_i
// with x and y parallel between w and z. conflict holds (u_j, z_j) for every
// j and (w, p_i); these edges mutually conflict.
struct LambdaGadget {
    int level = -1;
    std::vector<int> u;
    int w = -1, x = -1, y = -1;
    std::vector<int> z;
    std::vector<int> conflict;
    std::vector<int> edges;
};

struct GadgetGraph {
    Digraph graph;
    int k = 3;
    int h = 0;
    int s = 0;
    int p_minus = -1, t_minus = -1;
    std::vector<ShellLevel> levels;
    std::vector<std::vector<int>> groups;  // groups[i + 1] is alpha_i
    std::vector<LambdaGadget> gadgets;     // ordered by level
    std::vector<std::string> names;
    std::vector<EdgeRole> roles;
    std::vector<int> edge_level;
    std::vector<std::array<int, 3>> triplets;  // triplet j is encoded at level 2j+1

    const std::vector<int>& group(int i) const { return groups[i + 1]; }
    const LambdaGadget* gadget(int level) const;
    int vertex(const std::string& name) const;
    int source() const { return levels.back().s; }
    int sink() const { return levels.back().t; }
};

GadgetGraph build_shell(int h);
GadgetGraph build_filled(int h, int s);
// Requires even h >= 0 and s >= 1; k >= 3 selects the bundle width.
GadgetGraph build_lambda_filled(int h, int s, int k = 3);
GadgetGraph reduce_betweenness(const BetweennessInstance& inst, int k = 3);

// Spine order forced by the structural lemmas: odd groups follow tau, even
// groups the reverse, and x precedes y at a triplet level exactly when c
// precedes a in tau. Without triplets x precedes y.
std::vector<int> forced_order(const GadgetGraph& gg, const std::vector<int>& tau);

// 3UBE of reduce_betweenness(inst, 3) built from a satisfying tau.
BookEmbedding construct_3ube_from_witness(const BetweennessInstance& inst, const std::vector<int>& tau);
BookEmbedding construct_3ube_from_witness(const GadgetGraph& gg, const std::vector<int>& tau);

struct ConditionResult {
    std::string name;
    int level = 0;
    bool pass = false;
    std::string detail;
};

struct StructuralReport {
    std::vector<ConditionResult> results;
    bool all_pass() const;
    // Every result of the named condition passes (vacuously true if none).
    bool passes(const std::string& name) const;
    int count(const std::string& name) const;
};

// Checks S1-S3, F1-F3 and G1-G2 at every applicable level. The exchange
// part of G2 is checked on the graph without triplet and sink edges. Throws
// std::invalid_argument if be is not a valid embedding of gg.graph.
StructuralReport check_structural_conditions(const GadgetGraph& gg, const BookEmbedding& be);

}  // namespace ube
