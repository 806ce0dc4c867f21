#pragma once

#include <string>
#include <vector>

#include "fiberplan/bench.hpp"
#include "fiberplan/bom.hpp"
#include "fiberplan/genotype.hpp"
#include "fiberplan/network_map.hpp"
#include "fiberplan/solution.hpp"
#include "fiberplan/validator.hpp"

namespace fiberplan::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Map document: JSON with `nodes` [{id, x_m, y_m, kind, demand}] and
/// `edges` [{a, b, length_m, route}]. Throws MapFormatError naming the
/// offending field, MapIntegrityError for referential problems.
NetworkMap load_map(const std::string& text);
NetworkMap load_map_file(const std::string& path);
std::string map_to_json(const NetworkMap& map);

/// Rules document: flat `key = value` lines with an optional [ga] section.
/// Missing keys keep their defaults; penalty_per_missing follows cost_pdo
/// unless set explicitly.
struct RulesDoc {
    BusinessRules rules;
    GAConfig ga;
};
RulesDoc parse_rules(const std::string& text);
RulesDoc load_rules_file(const std::string& path);
std::string rules_to_text(const RulesDoc& doc);

/// Solution document: JSON {"pdos": [...], "assignments": [{"client","pdo"}]}.
DesignSolution parse_solution(const std::string& text);
DesignSolution load_solution_file(const std::string& path);
std::string solution_to_json(const DesignSolution& solution);

std::string report_to_json(const CostBreakdown& cost, const FeasibilityReport& report,
                           const EquipmentBill& bill, const std::vector<PortOccupancy>& occupancy);

std::string geojson_export(const NetworkMap& map, const Genotype& genotype, PathCache& paths);
std::string svg_export(const NetworkMap& map, const Genotype& genotype, PathCache& paths);

std::string metrics_csv(const StatsReport& report);
std::string trace_csv(const StatsReport& report);

}  // namespace fiberplan::io
