#pragma once

#include <cstdint>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "fiberplan/network_map.hpp"
#include "fiberplan/rules.hpp"

namespace fiberplan {

/// Shortest route from one node to the OLT root.
struct RootPath {
    double distance_m = 0.0;
    std::vector<std::uint32_t> edges;  ///< edge indices, source first
};

/// Lazily filled store of root paths, one per requested source node.
/// Entries are immutable once inserted; concurrent readers may race with a
/// fill, so lookups are serialized on a mutex (fills are idempotent anyway).
class PathCache {
public:
    /// Shortest path from the node at `node_index` to the root. Computed with
    /// Dijkstra on first use, then served from the cache. Ties between equal
    /// route lengths are broken toward smaller node ids so the tree is
    /// reproducible. Throws InfeasibleRouteError when the root is unreachable.
    const RootPath& root_path(const NetworkMap& map, std::size_t node_index);

    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::unordered_map<std::size_t, RootPath> paths_;
};

/// (distance, edge sequence) from the node with id `from` to the OLT root.
std::pair<double, std::vector<std::uint32_t>> shortest_path(const NetworkMap& map,
                                                            PathCache& cache, NodeId from);

struct DropOption {
    NodeId candidate;
    double distance_m;
};

/// Per-client candidate lists: ascending Euclidean distance, truncated at the
/// drop-cable limit. Clients whose list is empty can never be served.
class DropTable {
public:
    DropTable() = default;
    DropTable(std::vector<std::vector<DropOption>> options);

    const std::vector<DropOption>& options(std::size_t client_pos) const {
        return options_[client_pos];
    }
    bool unservable(std::size_t client_pos) const { return options_[client_pos].empty(); }
    std::size_t client_count() const { return options_.size(); }
    const std::vector<std::size_t>& unservable_clients() const { return unservable_; }

    /// Drop distance from a client to one candidate, or a negative value when
    /// the candidate is beyond the drop limit for that client.
    double distance_to(std::size_t client_pos, NodeId candidate) const;

private:
    std::vector<std::vector<DropOption>> options_;
    std::vector<std::vector<DropOption>> by_id_;  ///< same rows, sorted by candidate id
    std::vector<std::size_t> unservable_;
};

DropTable build_drop_table(const NetworkMap& map, const BusinessRules& rules);

struct EdgeUnion {
    double length_m = 0.0;
    std::vector<std::uint32_t> edges;  ///< unique edge indices, ascending
};

/// Set-union of route edges over a collection of root paths; shared segments
/// are counted once.
EdgeUnion distribution_union(const NetworkMap& map, std::span<const RootPath* const> paths);

}  // namespace fiberplan
