#pragma once

#include <map>
#include <vector>

#include "fiberplan/paths.hpp"
#include "fiberplan/solution.hpp"

namespace fiberplan {

/// Post-design equipment sizing: splitters for the whole demand, cables per
/// distribution branch out of the OLT root.
struct EquipmentBill {
    struct Branch {
        NodeId first_hop;          ///< root neighbour identifying the branch
        int demand_fibres = 0;
        std::map<int, int> cables; ///< capacity -> count
        int spare_fibres = 0;
    };
    int total_demand_fibres = 0;
    std::map<int, int> splitters;  ///< ratio -> count
    std::map<int, int> cables;     ///< capacity -> count, summed over branches
    std::vector<Branch> branches;
};

/// Fibre demand per branch, keyed by the root neighbour on the first edge of
/// each serving PDO's route. Throws MapIntegrityError if a served client's
/// PDO has no route out of the root.
std::map<NodeId, int> branch_demands(const Genotype& genotype, const NetworkMap& map,
                                     PathCache& paths);

/// Cheapest multiset of cables covering `demand` fibres: as many of the
/// largest capacity as fit wholly, then the smallest single cable that covers
/// the remainder.
std::map<int, int> select_cables(int demand, const std::vector<int>& capacities);

/// ceil(total_demand / ratio) splitters of the given ratio.
int select_splitters(int total_demand, int ratio);

EquipmentBill build_bill(const Genotype& genotype, const NetworkMap& map,
                         const BusinessRules& rules, PathCache& paths,
                         const std::vector<int>& cable_capacities = {16, 32});

}  // namespace fiberplan
