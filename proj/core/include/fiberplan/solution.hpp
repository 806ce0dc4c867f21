#pragma once

#include <vector>

#include "fiberplan/fitness.hpp"
#include "fiberplan/genotype.hpp"
#include "fiberplan/network_map.hpp"

namespace fiberplan {

/// External, minimal form of a design: the active PDO node ids plus the
/// client-to-PDO links. Everything else (routes, costs, feasibility) is
/// derivable against the map and rules.
struct DesignSolution {
    struct Link {
        NodeId client;
        NodeId pdo;
    };
    std::vector<NodeId> pdos;
    std::vector<Link> assignments;
};

/// Throws MapIntegrityError for ids that are not candidates/clients of the
/// map, duplicate client links, or links to PDOs outside `pdos`.
Genotype solution_to_genotype(const DesignSolution& solution, const NetworkMap& map);

DesignSolution genotype_to_solution(const Genotype& genotype, const NetworkMap& map);

/// Per-PDO port usage for the occupancy report.
struct PortOccupancy {
    NodeId pdo;
    int ports_used = 0;
    int port_limit = 0;
    int clients_served = 0;
    bool serves_mdu = false;
};

std::vector<PortOccupancy> port_occupancy(const Genotype& genotype, const NetworkMap& map,
                                          const BusinessRules& rules);

}  // namespace fiberplan
