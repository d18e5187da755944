#pragma once

#include <string>
#include <vector>

#include "ube/graph.hpp"
#include "ube/spqr.hpp"

namespace ube {

// Embedded planar multigraph without loops. rotation[v] lists the edges at
// v clockwise; dart 2e runs along edge e, 2e+1 against it, and the face of a
// dart lies on its right.
struct PlaneMultigraph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> rotation;

    int m() const { return static_cast<int>(edges.size()); }
    int dart_head(int d) const;
    int next_dart(int d) const;
    // Face boundaries as dart cycles.
    std::vector<std::vector<int>> faces() const;
};

PlaneMultigraph to_multigraph(const PlaneStGraph& g);
// Skeleton of an R-node plus the edge (pole_s, pole_t) as the last edge,
// placed on the left of the skeleton.
PlaneMultigraph skeleton_plus(const SpqrNode& node);

// Rooted ternary tree: the root is the leaf of the reference edge and has a
// single child, other inner nodes have two children. The arc of a non-root
// node joins it to its parent; its side is the set of edges at the leaves
// below it.
struct ScNode {
    int parent = -1;
    std::vector<int> children;
    int edge = -1;          // leaves only
    std::vector<int> mid;   // noose vertices of the arc to the parent, in noose order
};

struct SphereCutDecomposition {
    std::vector<ScNode> nodes;
    int root = -1;
    int width = 0;
    bool exact = false;  // width is optimal
};

// Noose order of the cut between `side` and the remaining edges: the
// vertices met by a closed curve through faces with `side` on its right.
// Empty when no such curve exists (a side is empty or disconnected, a
// face is crossed twice, or the crossings do not close into one cycle).
std::vector<int> noose_order(const PlaneMultigraph& g, const std::vector<std::vector<int>>& faces,
                             const std::vector<char>& side);

struct SphereCutOptions {
    int exact_limit = 10;  // exhaustive search up to this many edges
};

SphereCutDecomposition build_sphere_cut(const PlaneMultigraph& g, int root_edge, SphereCutOptions opt = {});
// Empty on success.
std::vector<std::string> validate_sphere_cut(const PlaneMultigraph& g, const SphereCutDecomposition& d);

}  // namespace ube
