#pragma once

#include <string>
#include <vector>

#include "fiberplan/paths.hpp"
#include "fiberplan/solution.hpp"

namespace fiberplan {

enum class ViolationKind {
    Coverage,
    Capacity,
    DropRange,
    NetworkRange,
    OpticalBudget,
    Crossing,
};

struct Violation {
    ViolationKind kind;
    NodeId subject;  ///< the pdo or client the finding is about
    double value;    ///< measured quantity (load, metres, dB, ...)
    double bound;    ///< the limit it was checked against
    std::string detail;
};

struct BudgetMargin {
    NodeId client;
    double loss_db;
    double margin_db;
};

struct FeasibilityReport {
    bool feasible = false;
    int missing_clients = 0;
    std::vector<Violation> violations;
    std::vector<BudgetMargin> budget;
};

const char* to_string(ViolationKind kind);

std::vector<Violation> check_capacity(const Genotype& genotype, const NetworkMap& map,
                                      const BusinessRules& rules);

std::vector<Violation> check_drop_range(const Genotype& genotype, const NetworkMap& map,
                                        const BusinessRules& rules);

/// Distribution path from the root to the serving PDO plus the drop must
/// stay within the network range (inclusive bound).
std::vector<Violation> check_network_range(const Genotype& genotype, const NetworkMap& map,
                                           const BusinessRules& rules, PathCache& paths);

/// Optical loss per served client (fibre length plus the configured splitter
/// stage) against the power budget; reports every margin, flags negatives.
std::vector<BudgetMargin> check_optical_budget(const Genotype& genotype, const NetworkMap& map,
                                               const BusinessRules& rules, PathCache& paths,
                                               std::vector<Violation>* violations = nullptr);

/// Drop segments against every distribution edge actually in use.
std::vector<Violation> check_intersections(const Genotype& genotype, const NetworkMap& map,
                                           const BusinessRules& rules, PathCache& paths);

/// All checks plus full coverage; feasible iff every check passes.
FeasibilityReport validate(const Genotype& genotype, const NetworkMap& map,
                           const BusinessRules& rules, PathCache& paths);

}  // namespace fiberplan
