#include "fiberplan/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "fiberplan/geometry.hpp"

namespace fiberplan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

RootPath dijkstra_to_root(const NetworkMap& map, std::size_t source) {
    const std::size_t n = map.nodes().size();
    std::vector<double> dist(n, kInf);
    std::vector<std::int64_t> pred_node(n, -1);
    std::vector<std::int64_t> pred_edge(n, -1);
    std::vector<char> settled(n, 0);

    // Heap keyed by (distance, node id) so equal-length fronts pop in id
    // order; relaxation prefers the smaller-id predecessor on exact ties.
    using Item = std::pair<double, std::size_t>;
    auto cmp = [&map](const Item& a, const Item& b) {
        if (a.first != b.first) {
            return a.first > b.first;
        }
        return map.nodes()[a.second].id > map.nodes()[b.second].id;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);

    dist[source] = 0.0;
    heap.push({0.0, source});
    const std::size_t target = map.root_index();

    while (!heap.empty()) {
        const auto [d, u] = heap.top();
        heap.pop();
        if (settled[u]) {
            continue;
        }
        settled[u] = 1;
        if (u == target) {
            break;
        }
        for (const auto& adj : map.neighbours(u)) {
            if (settled[adj.node]) {
                continue;
            }
            const double nd = d + adj.length_m;
            if (nd < dist[adj.node]) {
                dist[adj.node] = nd;
                pred_node[adj.node] = static_cast<std::int64_t>(u);
                pred_edge[adj.node] = static_cast<std::int64_t>(adj.edge);
                heap.push({nd, adj.node});
            } else if (nd == dist[adj.node] && pred_node[adj.node] >= 0 &&
                       map.nodes()[u].id < map.nodes()[pred_node[adj.node]].id) {
                pred_node[adj.node] = static_cast<std::int64_t>(u);
                pred_edge[adj.node] = static_cast<std::int64_t>(adj.edge);
                heap.push({nd, adj.node});
            }
        }
    }

    if (dist[target] == kInf) {
        throw InfeasibleRouteError("node " + std::to_string(map.nodes()[source].id) +
                                   " cannot reach the olt root");
    }

    RootPath path;
    path.distance_m = dist[target];
    for (std::size_t v = target; v != source;) {
        path.edges.push_back(static_cast<std::uint32_t>(pred_edge[v]));
        v = static_cast<std::size_t>(pred_node[v]);
    }
    std::reverse(path.edges.begin(), path.edges.end());
    return path;
}

}  // namespace

const RootPath& PathCache::root_path(const NetworkMap& map, std::size_t node_index) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = paths_.find(node_index);
    if (it == paths_.end()) {
        it = paths_.emplace(node_index, dijkstra_to_root(map, node_index)).first;
    }
    return it->second;
}

std::size_t PathCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return paths_.size();
}

std::pair<double, std::vector<std::uint32_t>> shortest_path(const NetworkMap& map,
                                                            PathCache& cache, NodeId from) {
    const RootPath& p = cache.root_path(map, map.index_of(from));
    return {p.distance_m, p.edges};
}

DropTable::DropTable(std::vector<std::vector<DropOption>> options)
    : options_(std::move(options)) {
    by_id_.reserve(options_.size());
    for (std::size_t i = 0; i < options_.size(); ++i) {
        if (options_[i].empty()) {
            unservable_.push_back(i);
        }
        auto row = options_[i];
        std::sort(row.begin(), row.end(),
                  [](const DropOption& a, const DropOption& b) { return a.candidate < b.candidate; });
        by_id_.push_back(std::move(row));
    }
}

double DropTable::distance_to(std::size_t client_pos, NodeId candidate) const {
    const auto& row = by_id_[client_pos];
    auto it = std::lower_bound(row.begin(), row.end(), candidate,
                               [](const DropOption& o, NodeId id) { return o.candidate < id; });
    if (it == row.end() || it->candidate != candidate) {
        return -1.0;
    }
    return it->distance_m;
}

DropTable build_drop_table(const NetworkMap& map, const BusinessRules& rules) {
    std::vector<std::vector<DropOption>> rows(map.clients().size());
    for (std::size_t c = 0; c < map.clients().size(); ++c) {
        const MapNode& client = map.nodes()[map.clients()[c]];
        auto& row = rows[c];
        for (std::size_t cand_idx : map.candidates()) {
            const MapNode& cand = map.nodes()[cand_idx];
            const double d = distance(client.position, cand.position);
            if (d <= rules.drop_limit_m) {
                row.push_back({cand.id, d});
            }
        }
        std::sort(row.begin(), row.end(), [](const DropOption& a, const DropOption& b) {
            if (a.distance_m != b.distance_m) {
                return a.distance_m < b.distance_m;
            }
            return a.candidate < b.candidate;
        });
    }
    return DropTable(std::move(rows));
}

EdgeUnion distribution_union(const NetworkMap& map, std::span<const RootPath* const> paths) {
    std::vector<char> seen(map.edges().size(), 0);
    EdgeUnion out;
    for (const RootPath* p : paths) {
        for (std::uint32_t e : p->edges) {
            if (!seen[e]) {
                seen[e] = 1;
                out.edges.push_back(e);
                out.length_m += map.edges()[e].length_m;
            }
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

}  // namespace fiberplan
