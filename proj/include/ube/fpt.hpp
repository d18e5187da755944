#pragma once

#include <map>
#include <vector>

#include "ube/book.hpp"
#include "ube/sphere_cut.hpp"
#include "ube/spqr.hpp"
#include "ube/types.hpp"

namespace ube {

// Types of an R-node from the type sets of its children (one per skeleton
// edge). The spine is swept upwards across the skeleton: a state is the
// current cut of skeleton edges, the spine position within it and the
// visibility seen so far by every active child and by the whole node.
// Fixed mode uses the inherited skeleton embedding, variable mode both flips.
TypeSet r_node_types(const SpqrNode& node, const std::vector<TypeSet>& child_types,
                     const std::vector<bool>& child_is_q, EmbeddingMode mode);

// Types of every node of the tree, children before parents. The root entry
// repeats its child's set.
std::vector<TypeSet> spqr_node_types(const SpqrTree& tree, EmbeddingMode mode);

struct FptResult {
    bool answer = false;
    SpqrTree tree;
    std::vector<TypeSet> node_types;
    SpqrStats stats;
    // Sphere-cut width of every R-node skeleton, keyed by node id.
    std::map<int, int> widths;
};

// Whether g has a 2UBE (embedding-preserving in fixed mode).
FptResult test_2ube_fpt(const PlaneStGraph& g, EmbeddingMode mode);
// Planar st-graph without an embedding: any planar embedding is allowed.
FptResult test_2ube_fpt(const Digraph& g);

}  // namespace ube
