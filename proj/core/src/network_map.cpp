#include "fiberplan/network_map.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace fiberplan {

namespace {

bool is_route_node(NodeKind kind) {
    return kind == NodeKind::EquipmentCandidate || kind == NodeKind::OltRoot;
}

}  // namespace

NetworkMap::NetworkMap(std::vector<MapNode> nodes, std::vector<MapEdge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    by_id_.reserve(nodes_.size());

    std::size_t root_count = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const MapNode& n = nodes_[i];
        if (n.id < 0) {
            throw MapIntegrityError("node id " + std::to_string(n.id) + " is negative");
        }
        if (!by_id_.emplace(n.id, i).second) {
            throw MapIntegrityError("duplicate node id " + std::to_string(n.id));
        }
        switch (n.kind) {
            case NodeKind::OltRoot:
                ++root_count;
                root_idx_ = i;
                [[fallthrough]];
            case NodeKind::EquipmentCandidate:
                if (n.demand != 0) {
                    throw MapIntegrityError("node " + std::to_string(n.id) +
                                            ": route nodes carry no demand");
                }
                break;
            case NodeKind::ClientSdu:
                if (n.demand != 1) {
                    throw MapIntegrityError("node " + std::to_string(n.id) +
                                            ": sdu demand must be 1");
                }
                break;
            case NodeKind::ClientMdu:
                if (n.demand < 1) {
                    throw MapIntegrityError("node " + std::to_string(n.id) +
                                            ": mdu demand must be >= 1");
                }
                break;
        }
        if (n.kind == NodeKind::EquipmentCandidate) {
            candidate_pos_[n.id] = static_cast<int>(candidate_idx_.size());
            candidate_idx_.push_back(i);
        } else if (n.is_client()) {
            client_pos_[n.id] = static_cast<int>(client_idx_.size());
            client_idx_.push_back(i);
            total_demand_ += n.demand;
        }
    }
    if (root_count != 1) {
        throw MapIntegrityError("map must contain exactly one olt root, found " +
                                std::to_string(root_count));
    }

    adjacency_.resize(nodes_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const MapEdge& edge = edges_[e];
        auto ia = by_id_.find(edge.a);
        auto ib = by_id_.find(edge.b);
        if (ia == by_id_.end() || ib == by_id_.end()) {
            throw MapIntegrityError("edge " + std::to_string(edge.a) + "-" +
                                    std::to_string(edge.b) + " references unknown node");
        }
        if (edge.a == edge.b) {
            throw MapIntegrityError("edge on node " + std::to_string(edge.a) +
                                    " is a self-loop");
        }
        if (!is_route_node(nodes_[ia->second].kind) || !is_route_node(nodes_[ib->second].kind)) {
            throw MapIntegrityError("edge " + std::to_string(edge.a) + "-" +
                                    std::to_string(edge.b) +
                                    " must join equipment candidates or the olt root");
        }
        if (!(edge.length_m >= 0.0) || !std::isfinite(edge.length_m)) {
            throw MapIntegrityError("edge " + std::to_string(edge.a) + "-" +
                                    std::to_string(edge.b) + " has invalid length");
        }
        adjacency_[ia->second].push_back({ib->second, e, edge.length_m});
        adjacency_[ib->second].push_back({ia->second, e, edge.length_m});
        total_route_length_m_ += edge.length_m;
    }
}

std::size_t NetworkMap::index_of(NodeId id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) {
        throw MapIntegrityError("unknown node id " + std::to_string(id));
    }
    return it->second;
}

int NetworkMap::candidate_position(NodeId id) const {
    auto it = candidate_pos_.find(id);
    return it == candidate_pos_.end() ? -1 : it->second;
}

int NetworkMap::client_position(NodeId id) const {
    auto it = client_pos_.find(id);
    return it == client_pos_.end() ? -1 : it->second;
}

PreprocessResult preprocess(const NetworkMap& map) {
    std::vector<char> reachable(map.nodes().size(), 0);
    std::queue<std::size_t> frontier;
    frontier.push(map.root_index());
    reachable[map.root_index()] = 1;
    while (!frontier.empty()) {
        const std::size_t u = frontier.front();
        frontier.pop();
        for (const auto& adj : map.neighbours(u)) {
            if (!reachable[adj.node]) {
                reachable[adj.node] = 1;
                frontier.push(adj.node);
            }
        }
    }

    std::vector<NodeId> removed;
    std::vector<MapNode> kept_nodes;
    kept_nodes.reserve(map.nodes().size());
    for (std::size_t i = 0; i < map.nodes().size(); ++i) {
        const MapNode& n = map.nodes()[i];
        if (n.kind == NodeKind::EquipmentCandidate && !reachable[i]) {
            removed.push_back(n.id);
        } else {
            kept_nodes.push_back(n);
        }
    }
    if (!map.candidates().empty() && removed.size() == map.candidates().size()) {
        throw UnusableMapError("olt root is isolated from every equipment candidate");
    }

    std::vector<MapEdge> kept_edges;
    kept_edges.reserve(map.edges().size());
    for (const MapEdge& e : map.edges()) {
        if (reachable[map.index_of(e.a)] && reachable[map.index_of(e.b)]) {
            kept_edges.push_back(e);
        }
    }
    return {NetworkMap(std::move(kept_nodes), std::move(kept_edges)), std::move(removed)};
}

const char* to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::EquipmentCandidate: return "candidate";
        case NodeKind::ClientSdu: return "sdu";
        case NodeKind::ClientMdu: return "mdu";
        case NodeKind::OltRoot: return "olt";
    }
    return "?";
}

const char* to_string(RouteKind route) {
    return route == RouteKind::Aerial ? "aerial" : "buried";
}

}  // namespace fiberplan
