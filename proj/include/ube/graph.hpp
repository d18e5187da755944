#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ube {

using Edge = std::pair<int, int>;

// Simple digraph on vertices 0..n-1. No loops, no parallel edges.
struct Digraph {
    int n = 0;
    std::vector<Edge> edges;

    Digraph() = default;
    Digraph(int n, std::vector<Edge> edges);

    int m() const { return static_cast<int>(edges.size()); }
    int find_edge(int u, int v) const;
    std::vector<std::vector<int>> out_edges() const;
    std::vector<std::vector<int>> in_edges() const;
    // Lexicographically least topological order, nullopt if cyclic.
    std::optional<std::vector<int>> topological_order() const;
};

// Darts: 2e runs tail->head, 2e+1 runs head->tail. The face of a dart lies on
// its right-hand side.
inline int dart_of(int e, bool reversed) { return 2 * e + (reversed ? 1 : 0); }
inline int dart_edge(int d) { return d >> 1; }
inline bool dart_reversed(int d) { return (d & 1) != 0; }

// Plane st-graph: rotation[v] lists incident edges in clockwise order.
struct PlaneStGraph {
    Digraph g;
    int s = 0;
    int t = 0;
    std::vector<std::vector<int>> rotation;
    int outer_dart = -1;

    int n() const { return g.n; }
    int m() const { return g.m(); }
    int dart_tail(int d) const;
    int dart_head(int d) const;
    int next_dart(int d) const;
};

// Left-to-right orders of out- and in-edges at every vertex.
struct LrOrders {
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> in;
};

// Builds a plane st-graph from left-to-right edge orders. s and t are the
// unique source and sink; the outer face is left of the leftmost edge of s.
PlaneStGraph plane_from_lr(int n, std::vector<Edge> edges, const LrOrders& lr);

// Builds from a raw rotation system; outer_dart < 0 selects the face left of
// rotation[s][0].
PlaneStGraph plane_from_rotation(int n, std::vector<Edge> edges, int s, int t,
                                 std::vector<std::vector<int>> rotation,
                                 int outer_dart = -1);

LrOrders lr_orders(const PlaneStGraph& g);

// Same graph, left and right exchanged.
PlaneStGraph mirror(const PlaneStGraph& g);
// Edges reversed, s and t exchanged.
PlaneStGraph reverse(const PlaneStGraph& g);

struct ValidationReport {
    std::vector<std::string> issues;
    bool ok() const { return issues.empty(); }
};

ValidationReport validate_plane_st_graph(const PlaneStGraph& g);
void require_valid(const PlaneStGraph& g);

struct Face {
    int id = -1;
    std::vector<int> darts;
    std::vector<int> left_path;
    std::vector<int> right_path;
    std::vector<int> left_edges;
    std::vector<int> right_edges;
    int source = -1;
    int sink = -1;
    bool is_outer = false;
};

struct FaceSet {
    std::vector<Face> faces;
    std::vector<int> dart_face;
    int outer = -1;

    int left_face(int e) const { return dart_face[dart_of(e, true)]; }
    int right_face(int e) const { return dart_face[dart_of(e, false)]; }
    std::vector<int> internal() const;
};

// Raw face tracing without validation; used by the validator itself.
std::vector<std::vector<int>> trace_face_darts(const PlaneStGraph& g, std::vector<int>& dart_face);

FaceSet compute_faces(const PlaneStGraph& g);

struct DualGraph {
    int n = 0;
    int s_star = -1;
    int t_star = -1;
    std::vector<int> face_of;  // dual vertex -> face id (-1 for s*, t*)
    std::vector<int> vertex_of_face;
    std::vector<Edge> edges;
    std::vector<int> primal_edge;
};

DualGraph dual_graph(const PlaneStGraph& g);
DualGraph dual_graph(const PlaneStGraph& g, const FaceSet& faces);
// Lexicographically least topological order of the internal faces.
std::vector<int> face_schedule(const PlaneStGraph& g, const FaceSet& faces);

enum class FaceKind { GeneralizedTriangle, Rhombus, Other };
const char* to_string(FaceKind k);

struct FaceClass {
    int face = -1;
    FaceKind kind = FaceKind::Other;
    // 0: none, 1: left path is the single edge, 2: right path is.
    int single_edge_side = 0;
};

struct FaceClassification {
    std::vector<FaceClass> classes;  // internal faces only
    bool has_forbidden = false;
    std::vector<int> forbidden_edges;
};

FaceClassification classify_faces(const PlaneStGraph& g);
FaceClassification classify_faces(const PlaneStGraph& g, const FaceSet& faces);

}  // namespace ube
