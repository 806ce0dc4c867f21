#pragma once

#include "fiberplan/genotype.hpp"
#include "fiberplan/network_map.hpp"
#include "fiberplan/paths.hpp"
#include "fiberplan/rules.hpp"

namespace fiberplan {

/// Everything an evaluation needs, bundled so the GA loop can pass one
/// handle around. The map, rules and drop table are immutable; the path
/// cache fills itself as new PDO placements are costed.
struct EvalContext {
    const NetworkMap& map;
    const BusinessRules& rules;
    PathCache& paths;
    const DropTable& drops;
};

/// Material cost of a repaired genotype: drop cable (MDU-weighted), the
/// union of distribution routes (buried-weighted), and one PDO cost per
/// active mask bit. No penalty terms.
CostBreakdown material_cost(const Genotype& genotype, const EvalContext& ctx);

/// Full evaluation: material cost plus the per-missing-client penalty, and
/// the hard-constraint feasibility verdict.
Individual evaluate(Genotype genotype, const EvalContext& ctx);

}  // namespace fiberplan
