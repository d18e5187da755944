#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ube/graph.hpp"

namespace ube {

enum class SpqrType { S, P, Q, R };
const char* to_string(SpqrType t);

// Node of a rooted SPQR-tree. The skeleton omits the virtual edge towards
// the parent; skeleton edge i is realized by children[i].
struct SpqrNode {
    SpqrType type = SpqrType::Q;
    int parent = -1;
    int pole_s = -1;
    int pole_t = -1;
    int edge = -1;  // Q-nodes: edge index in the augmented graph
    std::vector<int> children;
    std::vector<int> vertices;  // skeleton vertices, global ids
    std::vector<Edge> skeleton_edges;  // global endpoints, parallel to children
    // R-nodes: left-to-right orders of skeleton edge indices, indexed by
    // position in `vertices`, inherited from the embedding of the graph.
    LrOrders skeleton_lr;
};

// SPQR-tree of G + e*, where e* = (s,t) is added as the leftmost edge of the
// outer face and gets index m. The root is the Q-node of e*; S-nodes are
// binary. P-node children are stored in the embedding's left-to-right
// order.
struct SpqrTree {
    int n = 0;
    std::vector<Edge> edges;  // edges of the graph followed by e*
    int ref_edge = -1;
    int root = -1;
    LrOrders lr;  // of the augmented graph
    std::vector<SpqrNode> nodes;

    const SpqrNode& root_child() const { return nodes[nodes[root].children.front()]; }
    int root_child_id() const { return nodes[root].children.front(); }
};

SpqrTree build_spqr(const PlaneStGraph& g);

// Edge indices of the Q-node leaves below a node.
std::vector<int> pertinent_edges(const SpqrTree& tree, int node);

struct Pertinent {
    Digraph graph;
    std::vector<int> vertex;  // local -> global vertex
    std::vector<int> edge;    // local -> global edge
    int s = -1;
    int t = -1;
};

Pertinent pertinent_graph(const SpqrTree& tree, int node);
// Same, embedded as in the augmented graph.
PlaneStGraph pertinent_plane(const SpqrTree& tree, int node);

// Expands every skeleton into its real edges; returns the edge multiset of
// the augmented graph as it is reassembled, sorted.
std::vector<int> reassemble(const SpqrTree& tree);
// Checks poles, skeleton shapes and reassembly; empty on success.
std::vector<std::string> validate_spqr(const SpqrTree& tree);

// Number of planar embeddings of the augmented graph that the tree
// represents: product of (children)! over P-nodes times 2 per R-node.
std::uint64_t count_embeddings(const SpqrTree& tree);

struct SpqrStats {
    int s = 0, p = 0, q = 0, r = 0;
    int max_r_skeleton = 0;
};
SpqrStats spqr_stats(const SpqrTree& tree);

}  // namespace ube
