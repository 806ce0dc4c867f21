#include "fiberplan/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fiberplan/geometry.hpp"

namespace fiberplan::io {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw MapFormatError("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw MapFormatError("cannot write " + path);
    }
    out << content;
}

namespace {

json parse_json(const std::string& text, const char* what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) {
        throw MapFormatError(std::string(what) + ": not valid JSON");
    }
    return doc;
}

double require_number(const json& obj, const std::string& field, const std::string& where) {
    if (!obj.contains(field) || !obj[field].is_number()) {
        throw MapFormatError(where + "." + field + ": missing or not a number");
    }
    return obj[field].get<double>();
}

NodeId require_id(const json& obj, const std::string& field, const std::string& where) {
    if (!obj.contains(field) || !obj[field].is_number_integer()) {
        throw MapFormatError(where + "." + field + ": missing or not an integer");
    }
    return obj[field].get<NodeId>();
}

}  // namespace

NetworkMap load_map(const std::string& text) {
    const json doc = parse_json(text, "map document");
    if (!doc.is_object() || !doc.contains("nodes") || !doc["nodes"].is_array()) {
        throw MapFormatError("map document: missing `nodes` array");
    }
    if (!doc.contains("edges") || !doc["edges"].is_array()) {
        throw MapFormatError("map document: missing `edges` array");
    }

    std::vector<MapNode> nodes;
    nodes.reserve(doc["nodes"].size());
    std::size_t i = 0;
    for (const json& jn : doc["nodes"]) {
        const std::string where = "nodes[" + std::to_string(i++) + "]";
        MapNode n;
        n.id = require_id(jn, "id", where);
        n.position = {require_number(jn, "x_m", where), require_number(jn, "y_m", where)};
        if (!jn.contains("kind") || !jn["kind"].is_string()) {
            throw MapFormatError(where + ".kind: missing or not a string");
        }
        const std::string kind = jn["kind"].get<std::string>();
        if (kind == "candidate") {
            n.kind = NodeKind::EquipmentCandidate;
        } else if (kind == "sdu") {
            n.kind = NodeKind::ClientSdu;
        } else if (kind == "mdu") {
            n.kind = NodeKind::ClientMdu;
        } else if (kind == "olt") {
            n.kind = NodeKind::OltRoot;
        } else {
            throw MapFormatError(where + ".kind: unknown value '" + kind + "'");
        }
        if (jn.contains("demand")) {
            if (!jn["demand"].is_number_integer()) {
                throw MapFormatError(where + ".demand: not an integer");
            }
            n.demand = jn["demand"].get<int>();
        } else {
            n.demand = n.kind == NodeKind::ClientSdu ? 1 : 0;
            if (n.kind == NodeKind::ClientMdu) {
                throw MapFormatError(where + ".demand: required for mdu nodes");
            }
        }
        nodes.push_back(n);
    }

    std::vector<MapEdge> edges;
    edges.reserve(doc["edges"].size());
    i = 0;
    for (const json& je : doc["edges"]) {
        const std::string where = "edges[" + std::to_string(i++) + "]";
        MapEdge e;
        e.a = require_id(je, "a", where);
        e.b = require_id(je, "b", where);
        e.length_m = require_number(je, "length_m", where);
        if (!je.contains("route") || !je["route"].is_string()) {
            throw MapFormatError(where + ".route: missing or not a string");
        }
        const std::string route = je["route"].get<std::string>();
        if (route == "aerial") {
            e.route = RouteKind::Aerial;
        } else if (route == "buried") {
            e.route = RouteKind::Buried;
        } else {
            throw MapFormatError(where + ".route: unknown value '" + route + "'");
        }
        edges.push_back(e);
    }
    return NetworkMap(std::move(nodes), std::move(edges));
}

NetworkMap load_map_file(const std::string& path) { return load_map(read_file(path)); }

std::string map_to_json(const NetworkMap& map) {
    json doc;
    doc["nodes"] = json::array();
    for (const MapNode& n : map.nodes()) {
        doc["nodes"].push_back({{"id", n.id},
                                {"x_m", n.position.x},
                                {"y_m", n.position.y},
                                {"kind", to_string(n.kind)},
                                {"demand", n.demand}});
    }
    doc["edges"] = json::array();
    for (const MapEdge& e : map.edges()) {
        doc["edges"].push_back(
            {{"a", e.a}, {"b", e.b}, {"length_m", e.length_m}, {"route", to_string(e.route)}});
    }
    return doc.dump(2) + "\n";
}

namespace {

struct IniLine {
    std::string section;
    std::string key;
    std::string value;
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<IniLine> parse_ini(const std::string& text) {
    std::vector<IniLine> out;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') {
            continue;
        }
        if (t.front() == '[') {
            if (t.back() != ']') {
                throw ConfigError("rules line " + std::to_string(lineno) + ": unterminated section");
            }
            section = trim(t.substr(1, t.size() - 2));
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("rules line " + std::to_string(lineno) + ": expected key = value");
        }
        out.push_back({section, trim(t.substr(0, eq)), trim(t.substr(eq + 1))});
    }
    return out;
}

double to_number(const IniLine& line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(line.value, &used);
        if (used != line.value.size()) {
            throw std::invalid_argument("");
        }
        return v;
    } catch (const std::exception&) {
        throw ConfigError("rules key " + line.key + ": '" + line.value + "' is not a number");
    }
}

int to_int(const IniLine& line) {
    const double v = to_number(line);
    if (v != std::floor(v)) {
        throw ConfigError("rules key " + line.key + ": expected an integer");
    }
    return static_cast<int>(v);
}

bool to_bool(const IniLine& line) {
    if (line.value == "true" || line.value == "1") {
        return true;
    }
    if (line.value == "false" || line.value == "0") {
        return false;
    }
    throw ConfigError("rules key " + line.key + ": expected true/false");
}

}  // namespace

RulesDoc parse_rules(const std::string& text) {
    RulesDoc doc;
    bool penalty_set = false;
    for (const IniLine& line : parse_ini(text)) {
        if (line.section.empty()) {
            BusinessRules& r = doc.rules;
            if (line.key == "cost_pdo") {
                r.cost_pdo = to_number(line);
            } else if (line.key == "cost_drop_per_m") {
                r.cost_drop_per_m = to_number(line);
            } else if (line.key == "cost_dist_per_m") {
                r.cost_dist_per_m = to_number(line);
            } else if (line.key == "port_limit") {
                r.port_limit = to_int(line);
            } else if (line.key == "port_margin") {
                r.port_margin = to_number(line);
            } else if (line.key == "drop_limit_m") {
                r.drop_limit_m = to_number(line);
            } else if (line.key == "network_range_m") {
                r.network_range_m = to_number(line);
            } else if (line.key == "penalty_per_missing") {
                r.penalty_per_missing = to_number(line);
                penalty_set = true;
            } else if (line.key == "mdu_drop_factor") {
                r.mdu_drop_factor = to_number(line);
            } else if (line.key == "buried_cost_multiplier") {
                r.buried_cost_multiplier = to_number(line);
            } else if (line.key == "fiber_loss_db_per_km") {
                r.fiber_loss_db_per_km = to_number(line);
            } else if (line.key == "budget_db") {
                r.budget_db = to_number(line);
            } else if (line.key == "splitter_ratio") {
                r.splitter_ratio = to_int(line);
            } else if (line.key == "crossing_penalty") {
                r.crossing_penalty = to_number(line);
            } else if (line.key == "drop_touch_is_crossing") {
                r.drop_touch_is_crossing = to_bool(line);
            } else if (line.key.rfind("splitter_loss_", 0) == 0) {
                const std::string ratio = line.key.substr(std::string("splitter_loss_").size());
                try {
                    r.splitter_loss_db[std::stoi(ratio)] = to_number(line);
                } catch (const ConfigError&) {
                    throw;
                } catch (const std::exception&) {
                    throw ConfigError("rules key " + line.key + ": bad splitter ratio suffix");
                }
            } else {
                throw ConfigError("rules key " + line.key + " is not recognised");
            }
        } else if (line.section == "ga") {
            GAConfig& g = doc.ga;
            if (line.key == "population_size") {
                g.population_size = to_int(line);
            } else if (line.key == "generations") {
                g.generations = to_int(line);
            } else if (line.key == "mutation_rate") {
                if (line.value == "auto") {
                    g.mutation_rate.reset();
                } else {
                    g.mutation_rate = to_number(line);
                }
            } else if (line.key == "crossover_rate") {
                g.crossover_rate = to_number(line);
            } else if (line.key == "crossover_gene_prob") {
                g.crossover_gene_prob = to_number(line);
            } else if (line.key == "tournament_size") {
                g.tournament_size = to_int(line);
            } else if (line.key == "elitism_fraction") {
                g.elitism_fraction = to_number(line);
            } else if (line.key == "init_density") {
                g.init_density = to_number(line);
            } else if (line.key == "seed") {
                g.rng_seed = static_cast<std::uint64_t>(to_number(line));
            } else {
                throw ConfigError("rules key ga." + line.key + " is not recognised");
            }
        } else {
            throw ConfigError("rules section [" + line.section + "] is not recognised");
        }
    }
    if (!penalty_set) {
        doc.rules.penalty_per_missing = doc.rules.cost_pdo;
    }
    return doc;
}

RulesDoc load_rules_file(const std::string& path) { return parse_rules(read_file(path)); }

std::string rules_to_text(const RulesDoc& doc) {
    std::ostringstream out;
    const BusinessRules& r = doc.rules;
    out << "cost_pdo = " << r.cost_pdo << "\n"
        << "cost_drop_per_m = " << r.cost_drop_per_m << "\n"
        << "cost_dist_per_m = " << r.cost_dist_per_m << "\n"
        << "port_limit = " << r.port_limit << "\n"
        << "port_margin = " << r.port_margin << "\n"
        << "drop_limit_m = " << r.drop_limit_m << "\n"
        << "network_range_m = " << r.network_range_m << "\n"
        << "penalty_per_missing = " << r.penalty_per_missing << "\n"
        << "mdu_drop_factor = " << r.mdu_drop_factor << "\n"
        << "buried_cost_multiplier = " << r.buried_cost_multiplier << "\n"
        << "fiber_loss_db_per_km = " << r.fiber_loss_db_per_km << "\n"
        << "budget_db = " << r.budget_db << "\n"
        << "splitter_ratio = " << r.splitter_ratio << "\n";
    for (const auto& [ratio, loss] : r.splitter_loss_db) {
        out << "splitter_loss_" << ratio << " = " << loss << "\n";
    }
    out << "crossing_penalty = " << r.crossing_penalty << "\n"
        << "drop_touch_is_crossing = " << (r.drop_touch_is_crossing ? "true" : "false") << "\n";

    const GAConfig& g = doc.ga;
    out << "\n[ga]\n"
        << "population_size = " << g.population_size << "\n"
        << "generations = " << g.generations << "\n"
        << "mutation_rate = ";
    if (g.mutation_rate) {
        out << *g.mutation_rate;
    } else {
        out << "auto";
    }
    out << "\n"
        << "crossover_rate = " << g.crossover_rate << "\n"
        << "crossover_gene_prob = " << g.crossover_gene_prob << "\n"
        << "tournament_size = " << g.tournament_size << "\n"
        << "elitism_fraction = " << g.elitism_fraction << "\n"
        << "init_density = " << g.init_density << "\n"
        << "seed = " << g.rng_seed << "\n";
    return out.str();
}

DesignSolution parse_solution(const std::string& text) {
    const json doc = parse_json(text, "solution document");
    if (!doc.is_object() || !doc.contains("pdos") || !doc["pdos"].is_array()) {
        throw MapFormatError("solution document: missing `pdos` array");
    }
    DesignSolution out;
    std::size_t i = 0;
    for (const json& jp : doc["pdos"]) {
        if (!jp.is_number_integer()) {
            throw MapFormatError("pdos[" + std::to_string(i) + "]: not an integer node id");
        }
        out.pdos.push_back(jp.get<NodeId>());
        ++i;
    }
    if (doc.contains("assignments")) {
        if (!doc["assignments"].is_array()) {
            throw MapFormatError("solution document: `assignments` is not an array");
        }
        i = 0;
        for (const json& ja : doc["assignments"]) {
            const std::string where = "assignments[" + std::to_string(i++) + "]";
            out.assignments.push_back(
                {require_id(ja, "client", where), require_id(ja, "pdo", where)});
        }
    }
    return out;
}

DesignSolution load_solution_file(const std::string& path) {
    return parse_solution(read_file(path));
}

std::string solution_to_json(const DesignSolution& solution) {
    json doc;
    doc["pdos"] = solution.pdos;
    doc["assignments"] = json::array();
    for (const DesignSolution::Link& link : solution.assignments) {
        doc["assignments"].push_back({{"client", link.client}, {"pdo", link.pdo}});
    }
    return doc.dump(2) + "\n";
}

std::string report_to_json(const CostBreakdown& cost, const FeasibilityReport& report,
                           const EquipmentBill& bill, const std::vector<PortOccupancy>& occupancy) {
    json doc;
    doc["cost"] = {{"drop_m", cost.drop_m},
                   {"drop_weighted_m", cost.drop_weighted_m},
                   {"dist_m", cost.dist_m},
                   {"dist_weighted_m", cost.dist_weighted_m},
                   {"n_pdo", cost.n_pdo},
                   {"c_mat", cost.c_mat},
                   {"h_missing", cost.h_missing},
                   {"fitness", cost.fitness}};
    doc["feasibility"] = {{"feasible", report.feasible},
                          {"missing_clients", report.missing_clients}};
    doc["feasibility"]["violations"] = json::array();
    for (const Violation& v : report.violations) {
        doc["feasibility"]["violations"].push_back({{"kind", to_string(v.kind)},
                                                    {"subject", v.subject},
                                                    {"value", v.value},
                                                    {"bound", v.bound},
                                                    {"detail", v.detail}});
    }
    doc["feasibility"]["optical_budget"] = json::array();
    for (const BudgetMargin& m : report.budget) {
        doc["feasibility"]["optical_budget"].push_back(
            {{"client", m.client}, {"loss_db", m.loss_db}, {"margin_db", m.margin_db}});
    }
    doc["equipment"] = json::object();
    doc["equipment"]["total_demand_fibres"] = bill.total_demand_fibres;
    doc["equipment"]["splitters"] = json::array();
    for (const auto& [ratio, count] : bill.splitters) {
        doc["equipment"]["splitters"].push_back({{"ratio", ratio}, {"count", count}});
    }
    doc["equipment"]["cables"] = json::array();
    for (const auto& [cap, count] : bill.cables) {
        doc["equipment"]["cables"].push_back({{"capacity_fo", cap}, {"count", count}});
    }
    doc["equipment"]["branches"] = json::array();
    for (const EquipmentBill::Branch& b : bill.branches) {
        json jb = {{"first_hop", b.first_hop},
                   {"demand_fibres", b.demand_fibres},
                   {"spare_fibres", b.spare_fibres}};
        jb["cables"] = json::array();
        for (const auto& [cap, count] : b.cables) {
            jb["cables"].push_back({{"capacity_fo", cap}, {"count", count}});
        }
        doc["equipment"]["branches"].push_back(jb);
    }
    doc["port_occupancy"] = json::array();
    for (const PortOccupancy& occ : occupancy) {
        doc["port_occupancy"].push_back({{"pdo", occ.pdo},
                                         {"ports_used", occ.ports_used},
                                         {"port_limit", occ.port_limit},
                                         {"clients_served", occ.clients_served},
                                         {"serves_mdu", occ.serves_mdu}});
    }
    return doc.dump(2) + "\n";
}

namespace {

std::vector<char> used_edge_flags(const NetworkMap& map, const Genotype& genotype,
                                  PathCache& paths) {
    std::vector<const RootPath*> active;
    for (std::size_t m = 0; m < genotype.pdo_mask.size(); ++m) {
        if (genotype.pdo_mask[m]) {
            active.push_back(&paths.root_path(map, map.candidates()[m]));
        }
    }
    std::vector<char> used(map.edges().size(), 0);
    for (std::uint32_t e : distribution_union(map, active).edges) {
        used[e] = 1;
    }
    return used;
}

}  // namespace

namespace {

json line_feature(const Point& a, const Point& b, json properties) {
    json geometry;
    geometry["type"] = "LineString";
    geometry["coordinates"] = json::array({json::array({a.x, a.y}), json::array({b.x, b.y})});
    json feature;
    feature["type"] = "Feature";
    feature["geometry"] = std::move(geometry);
    feature["properties"] = std::move(properties);
    return feature;
}

json point_feature(const Point& p, json properties) {
    json geometry;
    geometry["type"] = "Point";
    geometry["coordinates"] = json::array({p.x, p.y});
    json feature;
    feature["type"] = "Feature";
    feature["geometry"] = std::move(geometry);
    feature["properties"] = std::move(properties);
    return feature;
}

}  // namespace

std::string geojson_export(const NetworkMap& map, const Genotype& genotype, PathCache& paths) {
    const std::vector<char> used = used_edge_flags(map, genotype, paths);
    json features = json::array();

    for (std::size_t e = 0; e < map.edges().size(); ++e) {
        const MapEdge& edge = map.edges()[e];
        json props;
        props["layer"] = used[e] ? "distribution" : "route";
        props["route"] = to_string(edge.route);
        props["length_m"] = edge.length_m;
        features.push_back(line_feature(map.nodes()[map.index_of(edge.a)].position,
                                        map.nodes()[map.index_of(edge.b)].position,
                                        std::move(props)));
    }
    for (std::size_t c = 0; c < genotype.assignment.size(); ++c) {
        const NodeId pdo = genotype.assignment[c];
        if (pdo == kUnassigned) {
            continue;
        }
        const MapNode& client = map.nodes()[map.clients()[c]];
        const Point& pp = map.node(pdo).position;
        json props;
        props["layer"] = "drop";
        props["client"] = client.id;
        props["pdo"] = pdo;
        props["length_m"] = distance(client.position, pp);
        features.push_back(line_feature(client.position, pp, std::move(props)));
    }
    for (const MapNode& n : map.nodes()) {
        json props;
        props["id"] = n.id;
        props["kind"] = to_string(n.kind);
        props["demand"] = n.demand;
        if (n.kind == NodeKind::EquipmentCandidate) {
            const int pos = map.candidate_position(n.id);
            props["layer"] = (pos >= 0 && genotype.pdo_mask[pos]) ? "pdo" : "candidate";
        } else if (n.kind == NodeKind::OltRoot) {
            props["layer"] = "olt";
        } else {
            props["layer"] = "client";
        }
        features.push_back(point_feature(n.position, std::move(props)));
    }
    json doc;
    doc["type"] = "FeatureCollection";
    doc["features"] = std::move(features);
    return doc.dump(2) + "\n";
}

std::string svg_export(const NetworkMap& map, const Genotype& genotype, PathCache& paths) {
    double min_x = 0.0, min_y = 0.0, max_x = 1.0, max_y = 1.0;
    bool first = true;
    for (const MapNode& n : map.nodes()) {
        if (first) {
            min_x = max_x = n.position.x;
            min_y = max_y = n.position.y;
            first = false;
        } else {
            min_x = std::min(min_x, n.position.x);
            max_x = std::max(max_x, n.position.x);
            min_y = std::min(min_y, n.position.y);
            max_y = std::max(max_y, n.position.y);
        }
    }
    const double pad = 0.05 * std::max(max_x - min_x, max_y - min_y) + 1.0;
    min_x -= pad;
    min_y -= pad;
    max_x += pad;
    max_y += pad;
    const double width = 1000.0;
    const double scale = width / (max_x - min_x);
    const double height = (max_y - min_y) * scale;

    auto sx = [&](double x) { return (x - min_x) * scale; };
    auto sy = [&](double y) { return height - (y - min_y) * scale; };

    std::ostringstream out;
    char buf[160];
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << static_cast<int>(width)
        << "\" height=\"" << static_cast<int>(height) << "\" viewBox=\"0 0 "
        << static_cast<int>(width) << " " << static_cast<int>(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const std::vector<char> used = used_edge_flags(map, genotype, paths);
    auto line = [&](const Point& a, const Point& b, const char* style) {
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" %s/>\n", sx(a.x),
                      sy(a.y), sx(b.x), sy(b.y), style);
        out << buf;
    };

    // Layer order: idle routes, distribution, drops, then nodes on top.
    for (std::size_t e = 0; e < map.edges().size(); ++e) {
        if (!used[e]) {
            const MapEdge& edge = map.edges()[e];
            line(map.nodes()[map.index_of(edge.a)].position,
                 map.nodes()[map.index_of(edge.b)].position,
                 edge.route == RouteKind::Buried
                     ? "stroke=\"#c8c8c8\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\""
                     : "stroke=\"#c8c8c8\" stroke-width=\"1.5\"");
        }
    }
    for (std::size_t e = 0; e < map.edges().size(); ++e) {
        if (used[e]) {
            const MapEdge& edge = map.edges()[e];
            line(map.nodes()[map.index_of(edge.a)].position,
                 map.nodes()[map.index_of(edge.b)].position,
                 edge.route == RouteKind::Buried
                     ? "stroke=\"#1f77b4\" stroke-width=\"3\" stroke-dasharray=\"6 3\""
                     : "stroke=\"#1f77b4\" stroke-width=\"3\"");
        }
    }
    for (std::size_t c = 0; c < genotype.assignment.size(); ++c) {
        if (genotype.assignment[c] == kUnassigned) {
            continue;
        }
        line(map.nodes()[map.clients()[c]].position, map.node(genotype.assignment[c]).position,
             "stroke=\"#2ca02c\" stroke-width=\"1\"");
    }
    for (const MapNode& n : map.nodes()) {
        if (n.kind == NodeKind::EquipmentCandidate) {
            const int pos = map.candidate_position(n.id);
            if (pos >= 0 && genotype.pdo_mask[pos]) {
                std::snprintf(buf, sizeof(buf),
                              "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"5\" fill=\"#ff7f0e\" "
                              "stroke=\"black\"/>\n",
                              sx(n.position.x), sy(n.position.y));
            } else {
                std::snprintf(buf, sizeof(buf),
                              "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"2\" fill=\"#bbbbbb\"/>\n",
                              sx(n.position.x), sy(n.position.y));
            }
            out << buf;
        } else if (n.kind == NodeKind::ClientSdu) {
            std::snprintf(buf, sizeof(buf),
                          "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"2.5\" fill=\"#555555\"/>\n",
                          sx(n.position.x), sy(n.position.y));
            out << buf;
        } else if (n.kind == NodeKind::ClientMdu) {
            std::snprintf(buf, sizeof(buf),
                          "<rect x=\"%.1f\" y=\"%.1f\" width=\"7\" height=\"7\" "
                          "fill=\"#d62728\"/>\n",
                          sx(n.position.x) - 3.5, sy(n.position.y) - 3.5);
            out << buf;
        } else {
            std::snprintf(buf, sizeof(buf),
                          "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"7\" fill=\"#9467bd\" "
                          "stroke=\"black\" stroke-width=\"2\"/>\n",
                          sx(n.position.x), sy(n.position.y));
            out << buf;
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string metrics_csv(const StatsReport& report) {
    std::ostringstream out;
    out << "run,seed,fitness,n_pdo,drop_km,dist_km,feasible\n";
    char buf[160];
    for (std::size_t i = 0; i < report.runs.size(); ++i) {
        const RunRecord& r = report.runs[i];
        std::snprintf(buf, sizeof(buf), "%zu,%llu,%.6f,%d,%.6f,%.6f,%d\n", i,
                      static_cast<unsigned long long>(r.seed), r.fitness, r.n_pdo, r.drop_km,
                      r.dist_km, r.feasible ? 1 : 0);
        out << buf;
    }
    return out.str();
}

std::string trace_csv(const StatsReport& report) {
    std::ostringstream out;
    out << "run,generation,best,mean\n";
    char buf[120];
    for (std::size_t i = 0; i < report.runs.size(); ++i) {
        for (const TracePoint& p : report.runs[i].trace) {
            std::snprintf(buf, sizeof(buf), "%zu,%d,%.6f,%.6f\n", i, p.generation, p.best, p.mean);
            out << buf;
        }
    }
    return out.str();
}

}  // namespace fiberplan::io
