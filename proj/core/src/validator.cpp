#include "fiberplan/validator.hpp"

#include <string>

#include "fiberplan/geometry.hpp"

namespace fiberplan {

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Coverage: return "coverage";
        case ViolationKind::Capacity: return "capacity";
        case ViolationKind::DropRange: return "drop_range";
        case ViolationKind::NetworkRange: return "network_range";
        case ViolationKind::OpticalBudget: return "optical_budget";
        case ViolationKind::Crossing: return "crossing";
    }
    return "?";
}

std::vector<Violation> check_capacity(const Genotype& genotype, const NetworkMap& map,
                                      const BusinessRules& rules) {
    const int usable = usable_ports(rules);
    std::vector<int> load(genotype.pdo_mask.size(), 0);
    for (std::size_t c = 0; c < genotype.assignment.size(); ++c) {
        if (genotype.assignment[c] == kUnassigned) {
            continue;
        }
        const int pos = map.candidate_position(genotype.assignment[c]);
        if (pos >= 0) {
            load[pos] += map.nodes()[map.clients()[c]].demand;
        }
    }
    std::vector<Violation> out;
    for (std::size_t m = 0; m < genotype.pdo_mask.size(); ++m) {
        if (load[m] > usable) {
            const NodeId id = map.nodes()[map.candidates()[m]].id;
            out.push_back({ViolationKind::Capacity, id, static_cast<double>(load[m]),
                           static_cast<double>(usable),
                           "pdo " + std::to_string(id) + " carries " + std::to_string(load[m]) +
                               " ports, usable limit " + std::to_string(usable)});
        }
    }
    return out;
}

std::vector<Violation> check_drop_range(const Genotype& genotype, const NetworkMap& map,
                                        const BusinessRules& rules) {
    std::vector<Violation> out;
    for (std::size_t c = 0; c < genotype.assignment.size(); ++c) {
        const NodeId pdo = genotype.assignment[c];
        if (pdo == kUnassigned) {
            continue;
        }
        const MapNode& client = map.nodes()[map.clients()[c]];
        const double d = distance(client.position, map.node(pdo).position);
        if (d > rules.drop_limit_m) {
            out.push_back({ViolationKind::DropRange, client.id, d, rules.drop_limit_m,
                           "client " + std::to_string(client.id) + " drop is " +
                               std::to_string(d) + " m, limit " +
                               std::to_string(rules.drop_limit_m)});
        }
    }
    return out;
}

std::vector<Violation> check_network_range(const Genotype& genotype, const NetworkMap& map,
                                           const BusinessRules& rules, PathCache& paths) {
    std::vector<Violation> out;
    for (std::size_t c = 0; c < genotype.assignment.size(); ++c) {
        const NodeId pdo = genotype.assignment[c];
        if (pdo == kUnassigned) {
            continue;
        }
        const MapNode& client = map.nodes()[map.clients()[c]];
        const double drop = distance(client.position, map.node(pdo).position);
        const double route = paths.root_path(map, map.index_of(pdo)).distance_m;
        const double total = route + drop;
        if (total > rules.network_range_m) {
            out.push_back({ViolationKind::NetworkRange, client.id, total, rules.network_range_m,
                           "client " + std::to_string(client.id) + " is " + std::to_string(total) +
                               " m from the olt, range " + std::to_string(rules.network_range_m)});
        }
    }
    return out;
}

std::vector<BudgetMargin> check_optical_budget(const Genotype& genotype, const NetworkMap& map,
                                               const BusinessRules& rules, PathCache& paths,
                                               std::vector<Violation>* violations) {
    double splitter_db = 0.0;
    if (auto it = rules.splitter_loss_db.find(rules.splitter_ratio);
        it != rules.splitter_loss_db.end()) {
        splitter_db = it->second;
    } else {
        throw ConfigError("no splitter loss configured for ratio 1:" +
                          std::to_string(rules.splitter_ratio));
    }

    std::vector<BudgetMargin> out;
    for (std::size_t c = 0; c < genotype.assignment.size(); ++c) {
        const NodeId pdo = genotype.assignment[c];
        if (pdo == kUnassigned) {
            continue;
        }
        const MapNode& client = map.nodes()[map.clients()[c]];
        const double drop = distance(client.position, map.node(pdo).position);
        const double route = paths.root_path(map, map.index_of(pdo)).distance_m;
        const double loss = rules.fiber_loss_db_per_km * (route + drop) / 1000.0 + splitter_db;
        const double margin = rules.budget_db - loss;
        out.push_back({client.id, loss, margin});
        if (margin < 0.0 && violations != nullptr) {
            violations->push_back({ViolationKind::OpticalBudget, client.id, loss, rules.budget_db,
                                   "client " + std::to_string(client.id) + " loss " +
                                       std::to_string(loss) + " dB exceeds budget " +
                                       std::to_string(rules.budget_db) + " dB"});
        }
    }
    return out;
}

std::vector<Violation> check_intersections(const Genotype& genotype, const NetworkMap& map,
                                           const BusinessRules& rules, PathCache& paths) {
    std::vector<const RootPath*> used;
    for (std::size_t m = 0; m < genotype.pdo_mask.size(); ++m) {
        if (genotype.pdo_mask[m]) {
            used.push_back(&paths.root_path(map, map.candidates()[m]));
        }
    }
    const EdgeUnion dist = distribution_union(map, used);

    std::vector<Violation> out;
    for (std::size_t c = 0; c < genotype.assignment.size(); ++c) {
        const NodeId pdo = genotype.assignment[c];
        if (pdo == kUnassigned) {
            continue;
        }
        const MapNode& client = map.nodes()[map.clients()[c]];
        const Segment drop{client.position, map.node(pdo).position};
        if (drop.a == drop.b) {
            continue;  // client sits on the pdo, nothing to cross
        }
        for (std::uint32_t e : dist.edges) {
            const MapEdge& edge = map.edges()[e];
            const Segment street{map.nodes()[map.index_of(edge.a)].position,
                                 map.nodes()[map.index_of(edge.b)].position};
            if (street.a == street.b) {
                continue;  // degenerate stacked edge
            }
            const bool hit = rules.drop_touch_is_crossing ? segments_touch(drop, street)
                                                          : segments_intersect(drop, street);
            if (hit) {
                out.push_back({ViolationKind::Crossing, client.id, 0.0, 0.0,
                               "drop of client " + std::to_string(client.id) +
                                   " crosses distribution edge " + std::to_string(edge.a) + "-" +
                                   std::to_string(edge.b)});
            }
        }
    }
    return out;
}

FeasibilityReport validate(const Genotype& genotype, const NetworkMap& map,
                           const BusinessRules& rules, PathCache& paths) {
    FeasibilityReport report;
    for (std::size_t c = 0; c < genotype.assignment.size(); ++c) {
        if (genotype.assignment[c] == kUnassigned) {
            ++report.missing_clients;
            const NodeId id = map.nodes()[map.clients()[c]].id;
            report.violations.push_back({ViolationKind::Coverage, id, 0.0, 0.0,
                                         "client " + std::to_string(id) + " is not connected"});
        }
    }
    auto append = [&report](std::vector<Violation> found) {
        report.violations.insert(report.violations.end(),
                                 std::make_move_iterator(found.begin()),
                                 std::make_move_iterator(found.end()));
    };
    append(check_capacity(genotype, map, rules));
    append(check_drop_range(genotype, map, rules));
    append(check_network_range(genotype, map, rules, paths));
    report.budget = check_optical_budget(genotype, map, rules, paths, &report.violations);
    append(check_intersections(genotype, map, rules, paths));
    report.feasible = report.violations.empty();
    return report;
}

}  // namespace fiberplan
