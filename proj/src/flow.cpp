#include "ube/flow.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>
#include <stdexcept>

namespace ube {

std::optional<std::vector<int>> feasible_flow(const FlowNetwork& net) {
    using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
    using G = boost::adjacency_list<
        boost::vecS, boost::vecS, boost::directedS, boost::no_property,
        boost::property<boost::edge_capacity_t, long,
                        boost::property<boost::edge_residual_capacity_t, long,
                                        boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
    using EdgeDesc = Traits::edge_descriptor;

    if (net.source < 0 || net.source >= net.nodes || net.sink < 0 || net.sink >= net.nodes)
        throw std::invalid_argument("flow network terminals out of range");
    const int super_s = net.nodes, super_t = net.nodes + 1;
    G g(net.nodes + 2);
    auto cap = boost::get(boost::edge_capacity, g);
    auto rev = boost::get(boost::edge_reverse, g);
    auto add = [&](int u, int v, long c) {
        EdgeDesc e = boost::add_edge(u, v, g).first;
        EdgeDesc r = boost::add_edge(v, u, g).first;
        cap[e] = c;
        cap[r] = 0;
        rev[e] = r;
        rev[r] = e;
        return e;
    };

    std::vector<long> excess(net.nodes, 0);
    std::vector<EdgeDesc> arc_edge;
    for (const auto& a : net.arcs) {
        if (a.from < 0 || a.from >= net.nodes || a.to < 0 || a.to >= net.nodes)
            throw std::invalid_argument("flow arc endpoint out of range");
        if (a.lower < 0 || a.lower > a.upper) throw std::invalid_argument("flow arc bounds are inconsistent");
        arc_edge.push_back(add(a.from, a.to, a.upper - a.lower));
        excess[a.to] += a.lower;
        excess[a.from] -= a.lower;
    }
    add(net.sink, net.source, kFlowInfinity);
    long demand = 0;
    for (int v = 0; v < net.nodes; ++v) {
        if (excess[v] > 0) {
            add(super_s, v, excess[v]);
            demand += excess[v];
        } else if (excess[v] < 0) {
            add(v, super_t, -excess[v]);
        }
    }
    long f = boost::edmonds_karp_max_flow(g, super_s, super_t);
    if (f != demand) return std::nullopt;
    auto res = boost::get(boost::edge_residual_capacity, g);
    std::vector<int> flow(net.arcs.size());
    for (size_t i = 0; i < net.arcs.size(); ++i)
        flow[i] = net.arcs[i].lower + static_cast<int>(cap[arc_edge[i]] - res[arc_edge[i]]);
    return flow;
}

}  // namespace ube
