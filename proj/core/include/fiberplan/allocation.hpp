#pragma once

#include <cstdint>
#include <vector>

#include "fiberplan/network_map.hpp"
#include "fiberplan/paths.hpp"
#include "fiberplan/rules.hpp"

namespace fiberplan {

struct AllocationResult {
    std::vector<NodeId> assignment;      ///< per client position; kUnassigned when unserved
    std::vector<std::size_t> misplaced;  ///< clients served, but not by their nearest active PDO
};

/// Closest-first allocation. Clients are processed in ascending position;
/// each takes the nearest active PDO that still has room for its whole
/// demand within the drop limit. Clients that fit nowhere stay unassigned
/// and are charged through the fitness penalty instead.
AllocationResult allocate(const std::vector<std::uint8_t>& pdo_mask, const NetworkMap& map,
                          const BusinessRules& rules, const DropTable& drop_table);

/// Hill-climbing pass over the misplaced clients: swap two clients' drop
/// links whenever that strictly shortens total drop distance without
/// breaking the range or port constraints. The displaced client goes back
/// on the queue; the loop ends when the queue drains.
void local_search(std::vector<NodeId>& assignment, const std::vector<std::size_t>& misplaced,
                  const std::vector<std::uint8_t>& pdo_mask, const NetworkMap& map,
                  const BusinessRules& rules, const DropTable& drop_table);

}  // namespace fiberplan
