#pragma once

#include <map>

namespace fiberplan {

/// Material weights and constraint parameters. Defaults follow the
/// telecom-partner configuration this tool ships with; everything is
/// overridable through the rules document.
struct BusinessRules {
    double cost_pdo = 300.0;          ///< currency per installed PDO
    double cost_drop_per_m = 2.0;     ///< currency per metre of drop cable
    double cost_dist_per_m = 5.0;     ///< currency per metre of distribution cable

    int port_limit = 12;              ///< physical ports per PDO
    double port_margin = 0.10;        ///< fraction of ports kept open for expansion

    double drop_limit_m = 85.0;       ///< hard drop-cable length limit
    double network_range_m = 20000.0; ///< OLT-to-client path bound (inclusive)

    double penalty_per_missing = 300.0;  ///< per unconnected client, defaults to cost_pdo
    double mdu_drop_factor = 10.0;       ///< drop-cost multiplier for building clients
    double buried_cost_multiplier = 2.0; ///< distribution-cost multiplier on buried edges

    // Optical budget. Splitter losses are engineering defaults, not vendor data.
    double fiber_loss_db_per_km = 0.35;
    double budget_db = 28.0;
    int splitter_ratio = 64;
    std::map<int, double> splitter_loss_db = {
        {4, 7.4}, {8, 10.5}, {16, 13.7}, {32, 17.1}, {64, 20.5},
    };

    // Crossing handling: drops crossing distribution edges are reported by
    // the validator; they only affect fitness when the per-violation penalty
    // is non-zero. drop_touch_is_crossing widens "crossing" to any contact.
    double crossing_penalty = 0.0;
    bool drop_touch_is_crossing = false;
};

/// Operational ports per PDO: port_limit - floor(port_limit * port_margin).
/// Throws ConfigError when the result would drop below 1.
int usable_ports(const BusinessRules& rules);

}  // namespace fiberplan
