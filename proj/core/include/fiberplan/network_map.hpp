#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "fiberplan/types.hpp"

namespace fiberplan {

/// Street-route graph plus the client premises hanging off it.
///
/// Route edges connect equipment candidates and the OLT root; clients are
/// off-graph points reached by straight drop cables. Index-based views
/// (candidates(), clients()) define the positions used by the genotype and
/// stay stable for the lifetime of the object.
class NetworkMap {
public:
    NetworkMap(std::vector<MapNode> nodes, std::vector<MapEdge> edges);

    const std::vector<MapNode>& nodes() const { return nodes_; }
    const std::vector<MapEdge>& edges() const { return edges_; }

    /// Candidate node indices in document order; genotype mask position i
    /// refers to candidates()[i].
    const std::vector<std::size_t>& candidates() const { return candidate_idx_; }
    /// Client node indices in document order; assignment position i refers
    /// to clients()[i].
    const std::vector<std::size_t>& clients() const { return client_idx_; }

    std::size_t root_index() const { return root_idx_; }
    const MapNode& root() const { return nodes_[root_idx_]; }

    bool has_node(NodeId id) const { return by_id_.count(id) != 0; }
    std::size_t index_of(NodeId id) const;
    const MapNode& node(NodeId id) const { return nodes_[index_of(id)]; }

    /// Mask position of a candidate node id, or -1 if the id is not a
    /// candidate in this map.
    int candidate_position(NodeId id) const;
    /// Assignment position of a client node id, or -1.
    int client_position(NodeId id) const;

    int total_demand() const { return total_demand_; }
    double total_route_length_m() const { return total_route_length_m_; }

    struct Adjacent {
        std::size_t node;   ///< neighbour node index
        std::size_t edge;   ///< edge index
        double length_m;
    };
    const std::vector<Adjacent>& neighbours(std::size_t node_index) const {
        return adjacency_[node_index];
    }

private:
    std::vector<MapNode> nodes_;
    std::vector<MapEdge> edges_;
    std::vector<std::vector<Adjacent>> adjacency_;
    std::unordered_map<NodeId, std::size_t> by_id_;
    std::unordered_map<NodeId, int> candidate_pos_;
    std::unordered_map<NodeId, int> client_pos_;
    std::vector<std::size_t> candidate_idx_;
    std::vector<std::size_t> client_idx_;
    std::size_t root_idx_ = 0;
    int total_demand_ = 0;
    double total_route_length_m_ = 0.0;
};

struct PreprocessResult {
    NetworkMap map;
    std::vector<NodeId> removed_candidates;
};

/// Drops every equipment candidate that cannot reach the OLT root over route
/// edges. Clients are never removed. Throws UnusableMapError when the map had
/// candidates but none of them survives.
PreprocessResult preprocess(const NetworkMap& map);

}  // namespace fiberplan
