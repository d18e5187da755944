#pragma once

#include <optional>
#include <vector>

#include "ube/book.hpp"
#include "ube/graph.hpp"

namespace ube {

// The graph plus one undirected edge per rhombus face, joining the face's
// left and right middle vertices.
struct MixedGraph {
    Digraph directed;
    int s = -1;
    int t = -1;
    std::vector<Edge> undirected;  // (left middle, right middle)
    std::vector<int> face;         // rhombus face of each undirected edge
};

// Throws std::invalid_argument unless every internal face is a generalized
// triangle or a rhombus.
MixedGraph build_mixed_graph(const PlaneStGraph& g);

struct Orientation {
    std::vector<Edge> oriented;  // parallel to MixedGraph::undirected
    std::vector<int> path;       // Hamiltonian path of the oriented graph
};

// Orientation of the undirected edges under which the digraph has a
// Hamiltonian path, found by backtracking over spine prefixes.
std::optional<Orientation> orient_unilateral(const MixedGraph& m);

// Embedding-preserving 2UBE of a graph whose internal faces are generalized
// triangles or rhombi, if one exists. The witness is verified.
std::optional<BookEmbedding> test_2ube_special_faces(const PlaneStGraph& g);

}  // namespace ube
