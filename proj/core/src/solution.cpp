#include "fiberplan/solution.hpp"

#include <string>

namespace fiberplan {

Genotype solution_to_genotype(const DesignSolution& solution, const NetworkMap& map) {
    Genotype g;
    g.pdo_mask.assign(map.candidates().size(), 0);
    for (NodeId pdo : solution.pdos) {
        const int pos = map.candidate_position(pdo);
        if (pos < 0) {
            throw MapIntegrityError("solution places a pdo on node " + std::to_string(pdo) +
                                    ", which is not an equipment candidate");
        }
        g.pdo_mask[pos] = 1;
    }
    g.assignment.assign(map.clients().size(), kUnassigned);
    for (const DesignSolution::Link& link : solution.assignments) {
        const int cpos = map.client_position(link.client);
        if (cpos < 0) {
            throw MapIntegrityError("solution references unknown client " +
                                    std::to_string(link.client));
        }
        if (g.assignment[cpos] != kUnassigned) {
            throw MapIntegrityError("client " + std::to_string(link.client) +
                                    " is assigned more than once");
        }
        const int ppos = map.candidate_position(link.pdo);
        if (ppos < 0 || !g.pdo_mask[ppos]) {
            throw MapIntegrityError("client " + std::to_string(link.client) +
                                    " is linked to node " + std::to_string(link.pdo) +
                                    ", which is not an active pdo");
        }
        g.assignment[cpos] = link.pdo;
    }
    return g;
}

DesignSolution genotype_to_solution(const Genotype& genotype, const NetworkMap& map) {
    DesignSolution out;
    for (std::size_t m = 0; m < genotype.pdo_mask.size(); ++m) {
        if (genotype.pdo_mask[m]) {
            out.pdos.push_back(map.nodes()[map.candidates()[m]].id);
        }
    }
    for (std::size_t c = 0; c < genotype.assignment.size(); ++c) {
        if (genotype.assignment[c] != kUnassigned) {
            out.assignments.push_back({map.nodes()[map.clients()[c]].id, genotype.assignment[c]});
        }
    }
    return out;
}

std::vector<PortOccupancy> port_occupancy(const Genotype& genotype, const NetworkMap& map,
                                          const BusinessRules& rules) {
    std::vector<PortOccupancy> out;
    std::vector<int> row(genotype.pdo_mask.size(), -1);
    for (std::size_t m = 0; m < genotype.pdo_mask.size(); ++m) {
        if (genotype.pdo_mask[m]) {
            row[m] = static_cast<int>(out.size());
            out.push_back({map.nodes()[map.candidates()[m]].id, 0, rules.port_limit, 0, false});
        }
    }
    for (std::size_t c = 0; c < genotype.assignment.size(); ++c) {
        const NodeId pdo = genotype.assignment[c];
        if (pdo == kUnassigned) {
            continue;
        }
        const int pos = map.candidate_position(pdo);
        if (pos < 0 || row[pos] < 0) {
            continue;
        }
        const MapNode& client = map.nodes()[map.clients()[c]];
        PortOccupancy& occ = out[row[pos]];
        occ.ports_used += client.demand;
        occ.clients_served += 1;
        occ.serves_mdu = occ.serves_mdu || client.kind == NodeKind::ClientMdu;
    }
    return out;
}

}  // namespace fiberplan
