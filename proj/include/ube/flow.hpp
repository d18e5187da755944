#pragma once

#include <optional>
#include <vector>

namespace ube {

inline constexpr int kFlowInfinity = 1 << 28;

struct FlowArc {
    int from = 0;
    int to = 0;
    int lower = 0;
    int upper = 0;
};

// Network with lower and upper bounds on every arc. Flow is conserved at
// every node except source and sink.
struct FlowNetwork {
    int nodes = 0;
    int source = 0;
    int sink = 0;
    std::vector<FlowArc> arcs;

    int add_node() { return nodes++; }
    int add_arc(int from, int to, int lower, int upper) {
        arcs.push_back({from, to, lower, upper});
        return static_cast<int>(arcs.size()) - 1;
    }
};

// A flow meeting every bound, one value per arc, or nullopt. Lower bounds
// are removed by the usual circulation transform and the resulting
// max-flow problem is solved with augmenting paths.
std::optional<std::vector<int>> feasible_flow(const FlowNetwork& net);

}  // namespace ube
