#pragma once

#include <cstddef>
#include <vector>

namespace fiberplan {

/// Successive-shortest-paths min-cost max-flow with Dijkstra + potentials.
/// All edge costs must be non-negative. Sized for the small bipartite
/// assignment graphs the oracles build, not for large networks.
class MinCostFlow {
public:
    explicit MinCostFlow(std::size_t node_count);

    /// Returns the arc index (querying residual flow later uses it).
    std::size_t add_edge(std::size_t from, std::size_t to, int capacity, double cost);

    /// Sends up to `want` units from s to t. Returns (flow sent, total cost).
    std::pair<int, double> solve(std::size_t source, std::size_t sink, int want);

    /// Units actually routed through the arc returned by add_edge.
    int flow_on(std::size_t arc) const;

private:
    struct Arc {
        std::size_t to;
        int cap;
        double cost;
        std::size_t rev;
    };
    std::vector<std::vector<Arc>> graph_;
    std::vector<std::pair<std::size_t, std::size_t>> arc_index_;  ///< node, offset
    std::vector<int> initial_cap_;
};

}  // namespace fiberplan
