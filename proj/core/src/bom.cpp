#include "fiberplan/bom.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fiberplan {

std::map<NodeId, int> branch_demands(const Genotype& genotype, const NetworkMap& map,
                                     PathCache& paths) {
    std::map<NodeId, int> out;
    for (std::size_t c = 0; c < genotype.assignment.size(); ++c) {
        const NodeId pdo = genotype.assignment[c];
        if (pdo == kUnassigned) {
            continue;
        }
        const RootPath& path = paths.root_path(map, map.index_of(pdo));
        if (path.edges.empty()) {
            throw MapIntegrityError("client " + std::to_string(map.nodes()[map.clients()[c]].id) +
                                    " is served by a pdo with no route out of the root");
        }
        // Path edges run pdo -> root, so the branch edge is the last one.
        const MapEdge& first = map.edges()[path.edges.back()];
        const NodeId root_id = map.root().id;
        const NodeId hop = first.a == root_id ? first.b : first.a;
        out[hop] += map.nodes()[map.clients()[c]].demand;
    }
    return out;
}

std::map<int, int> select_cables(int demand, const std::vector<int>& capacities) {
    if (capacities.empty()) {
        throw ConfigError("select_cables: no cable capacities configured");
    }
    if (demand < 0) {
        throw std::invalid_argument("select_cables: negative demand");
    }
    std::vector<int> caps = capacities;
    std::sort(caps.begin(), caps.end());
    const int largest = caps.back();

    std::map<int, int> out;
    if (demand == 0) {
        return out;
    }
    const int full = demand / largest;
    if (full > 0) {
        out[largest] = full;
    }
    const int remainder = demand - full * largest;
    if (remainder > 0) {
        for (int cap : caps) {
            if (cap >= remainder) {
                out[cap] += 1;
                break;
            }
        }
    }
    return out;
}

int select_splitters(int total_demand, int ratio) {
    if (ratio <= 0) {
        throw std::invalid_argument("select_splitters: ratio must be positive");
    }
    if (total_demand < 0) {
        throw std::invalid_argument("select_splitters: negative demand");
    }
    return (total_demand + ratio - 1) / ratio;
}

EquipmentBill build_bill(const Genotype& genotype, const NetworkMap& map,
                         const BusinessRules& rules, PathCache& paths,
                         const std::vector<int>& cable_capacities) {
    EquipmentBill bill;
    const std::map<NodeId, int> branches = branch_demands(genotype, map, paths);
    for (const auto& [hop, demand] : branches) {
        EquipmentBill::Branch branch;
        branch.first_hop = hop;
        branch.demand_fibres = demand;
        branch.cables = select_cables(demand, cable_capacities);
        int capacity = 0;
        for (const auto& [cap, count] : branch.cables) {
            capacity += cap * count;
            bill.cables[cap] += count;
        }
        branch.spare_fibres = capacity - demand;
        bill.total_demand_fibres += demand;
        bill.branches.push_back(std::move(branch));
    }
    if (bill.total_demand_fibres > 0) {
        bill.splitters[rules.splitter_ratio] =
            select_splitters(bill.total_demand_fibres, rules.splitter_ratio);
    }
    return bill;
}

}  // namespace fiberplan
