#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ube/graph.hpp"

namespace ube {

// Deterministic RNG helper independent of the standard library's
// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next() { return eng_(); }
    // Uniform in [0, n).
    int below(int n);
    // Uniform in [lo, hi].
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool coin(int num = 1, int den = 2) { return below(den) < num; }

private:
    std::mt19937_64 eng_;
};

// Incremental plane st-graph construction by attaching faces to the right
// boundary. Every plane st-graph arises this way from its left boundary.
class StBuilder {
public:
    // Directed path with `len` edges.
    explicit StBuilder(int len);
    explicit StBuilder(const PlaneStGraph& g);

    int n() const { return n_; }
    const std::vector<int>& right_boundary() const { return right_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const LrOrders& lr() const { return lr_; }
    bool has_edge(int u, int v) const;
    // Attach a path with k new vertices from right_boundary()[i] to
    // right_boundary()[j], i < j. Returns false when it would create a
    // parallel edge.
    bool add_face(int i, int j, int k);
    PlaneStGraph build() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    LrOrders lr_;
    std::vector<int> right_;
    int new_vertex();
    int new_edge(int u, int v);
};

PlaneStGraph rhombus_grid(int rows, int cols);
PlaneStGraph long_right_path(int n, std::uint64_t seed);
PlaneStGraph series_parallel(int n, std::uint64_t seed);

struct RandomStOptions {
    int max_new_vertices = 3;
    bool triangulated = false;
};
PlaneStGraph random_planar_st(int n, std::uint64_t seed, RandomStOptions opt = {});
// Every internal face is a generalized triangle or a rhombus.
PlaneStGraph random_special_faces(int n, std::uint64_t seed);

// Canonical code of the embedded graph; equal codes <=> isomorphic as
// plane st-graphs (orientation-preserving).
std::vector<int> canonical_code(const PlaneStGraph& g);
// Canonical code up to reflection.
std::vector<int> canonical_code_up_to_mirror(const PlaneStGraph& g);

// Streams every plane st-graph with 2..nmax vertices exactly once, up to
// isomorphism of the embedding. Each graph is generated from the parent
// obtained by deleting its topmost face on the right boundary, so no
// isomorphism table is kept.
void for_each_plane_st_graph(int nmax, bool include_mirrors,
                             const std::function<void(const PlaneStGraph&)>& visit);

// All plane st-graphs with exactly n vertices, up to isomorphism of the
// embedding; mirror images identified unless include_mirrors is set.
std::vector<PlaneStGraph> exhaustive_small(int n, bool include_mirrors = false);
// Same, for all sizes 2..n, grouped by size.
std::vector<std::vector<PlaneStGraph>> exhaustive_upto(int n, bool include_mirrors = false);

}  // namespace ube
