#include "fiberplan/min_cost_flow.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace fiberplan {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

MinCostFlow::MinCostFlow(std::size_t node_count) : graph_(node_count) {}

std::size_t MinCostFlow::add_edge(std::size_t from, std::size_t to, int capacity, double cost) {
    if (cost < 0.0) {
        throw std::invalid_argument("MinCostFlow: negative cost arc");
    }
    graph_[from].push_back({to, capacity, cost, graph_[to].size()});
    graph_[to].push_back({from, 0, -cost, graph_[from].size() - 1});
    arc_index_.emplace_back(from, graph_[from].size() - 1);
    initial_cap_.push_back(capacity);
    return arc_index_.size() - 1;
}

std::pair<int, double> MinCostFlow::solve(std::size_t source, std::size_t sink, int want) {
    const std::size_t n = graph_.size();
    std::vector<double> potential(n, 0.0);  // valid: all original costs >= 0
    int flow = 0;
    double cost = 0.0;

    while (flow < want) {
        std::vector<double> dist(n, kInf);
        std::vector<std::size_t> prev_node(n), prev_arc(n);
        std::priority_queue<std::pair<double, std::size_t>,
                            std::vector<std::pair<double, std::size_t>>, std::greater<>>
            heap;
        dist[source] = 0.0;
        heap.push({0.0, source});
        while (!heap.empty()) {
            const auto [d, u] = heap.top();
            heap.pop();
            if (d > dist[u]) {
                continue;
            }
            for (std::size_t i = 0; i < graph_[u].size(); ++i) {
                const Arc& arc = graph_[u][i];
                if (arc.cap <= 0) {
                    continue;
                }
                const double nd = d + arc.cost + potential[u] - potential[arc.to];
                if (nd < dist[arc.to]) {
                    dist[arc.to] = nd;
                    prev_node[arc.to] = u;
                    prev_arc[arc.to] = i;
                    heap.push({nd, arc.to});
                }
            }
        }
        if (dist[sink] == kInf) {
            break;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (dist[v] < kInf) {
                potential[v] += dist[v];
            }
        }
        int push = want - flow;
        for (std::size_t v = sink; v != source; v = prev_node[v]) {
            push = std::min(push, graph_[prev_node[v]][prev_arc[v]].cap);
        }
        for (std::size_t v = sink; v != source; v = prev_node[v]) {
            Arc& arc = graph_[prev_node[v]][prev_arc[v]];
            arc.cap -= push;
            graph_[v][arc.rev].cap += push;
            cost += push * arc.cost;
        }
        flow += push;
    }
    return {flow, cost};
}

int MinCostFlow::flow_on(std::size_t arc) const {
    const auto [node, offset] = arc_index_[arc];
    return initial_cap_[arc] - graph_[node][offset].cap;
}

}  // namespace fiberplan
