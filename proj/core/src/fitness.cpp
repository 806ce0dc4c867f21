#include "fiberplan/fitness.hpp"

#include <stdexcept>

#include "fiberplan/geometry.hpp"

namespace fiberplan {

CostBreakdown material_cost(const Genotype& genotype, const EvalContext& ctx) {
    if (genotype.assignment_stale) {
        throw std::logic_error("material_cost called on a stale genotype; repair first");
    }
    const NetworkMap& map = ctx.map;
    CostBreakdown out;

    for (std::size_t c = 0; c < genotype.assignment.size(); ++c) {
        const NodeId pdo = genotype.assignment[c];
        if (pdo == kUnassigned) {
            continue;
        }
        const MapNode& client = map.nodes()[map.clients()[c]];
        const double d = distance(client.position, map.node(pdo).position);
        out.drop_m += d;
        out.drop_weighted_m +=
            d * (client.kind == NodeKind::ClientMdu ? ctx.rules.mdu_drop_factor : 1.0);
    }

    std::vector<const RootPath*> paths;
    for (std::size_t m = 0; m < genotype.pdo_mask.size(); ++m) {
        if (genotype.pdo_mask[m]) {
            ++out.n_pdo;
            paths.push_back(&ctx.paths.root_path(map, map.candidates()[m]));
        }
    }
    const EdgeUnion dist = distribution_union(map, paths);
    out.dist_m = dist.length_m;
    for (std::uint32_t e : dist.edges) {
        const MapEdge& edge = map.edges()[e];
        out.dist_weighted_m +=
            edge.length_m *
            (edge.route == RouteKind::Buried ? ctx.rules.buried_cost_multiplier : 1.0);
    }

    out.c_mat = ctx.rules.cost_drop_per_m * out.drop_weighted_m +
                ctx.rules.cost_dist_per_m * out.dist_weighted_m +
                ctx.rules.cost_pdo * out.n_pdo;
    out.fitness = out.c_mat;
    return out;
}

namespace {

int count_crossings(const Genotype& genotype, const EvalContext& ctx) {
    std::vector<const RootPath*> paths;
    for (std::size_t m = 0; m < genotype.pdo_mask.size(); ++m) {
        if (genotype.pdo_mask[m]) {
            paths.push_back(&ctx.paths.root_path(ctx.map, ctx.map.candidates()[m]));
        }
    }
    const EdgeUnion dist = distribution_union(ctx.map, paths);

    int crossings = 0;
    for (std::size_t c = 0; c < genotype.assignment.size(); ++c) {
        if (genotype.assignment[c] == kUnassigned) {
            continue;
        }
        const Segment drop{ctx.map.nodes()[ctx.map.clients()[c]].position,
                           ctx.map.node(genotype.assignment[c]).position};
        if (drop.a == drop.b) {
            continue;
        }
        for (std::uint32_t e : dist.edges) {
            const Segment street{ctx.map.nodes()[ctx.map.index_of(ctx.map.edges()[e].a)].position,
                                 ctx.map.nodes()[ctx.map.index_of(ctx.map.edges()[e].b)].position};
            if (street.a == street.b) {
                continue;
            }
            const bool hit = ctx.rules.drop_touch_is_crossing ? segments_touch(drop, street)
                                                              : segments_intersect(drop, street);
            if (hit) {
                ++crossings;
            }
        }
    }
    return crossings;
}

}  // namespace

Individual evaluate(Genotype genotype, const EvalContext& ctx) {
    Individual ind;
    ind.cost = material_cost(genotype, ctx);

    for (NodeId pdo : genotype.assignment) {
        if (pdo == kUnassigned) {
            ++ind.cost.h_missing;
        }
    }
    ind.cost.fitness = ind.cost.c_mat + ind.cost.h_missing * ctx.rules.penalty_per_missing;
    if (ctx.rules.crossing_penalty > 0.0) {
        ind.cost.crossings = count_crossings(genotype, ctx);
        ind.cost.fitness += ind.cost.crossings * ctx.rules.crossing_penalty;
    }
    ind.fitness = ind.cost.fitness;

    // Hard checks: coverage, per-PDO load, drop range, network range.
    bool ok = ind.cost.h_missing == 0;
    const int usable = usable_ports(ctx.rules);
    std::vector<int> load(genotype.pdo_mask.size(), 0);
    for (std::size_t c = 0; ok && c < genotype.assignment.size(); ++c) {
        const NodeId pdo = genotype.assignment[c];
        if (pdo == kUnassigned) {
            continue;
        }
        const MapNode& client = ctx.map.nodes()[ctx.map.clients()[c]];
        const double drop = distance(client.position, ctx.map.node(pdo).position);
        if (drop > ctx.rules.drop_limit_m) {
            ok = false;
            break;
        }
        const int pos = ctx.map.candidate_position(pdo);
        if (pos < 0 || !genotype.pdo_mask[pos]) {
            ok = false;
            break;
        }
        load[pos] += client.demand;
        if (load[pos] > usable) {
            ok = false;
            break;
        }
        const double route = ctx.paths.root_path(ctx.map, ctx.map.candidates()[pos]).distance_m;
        if (route + drop > ctx.rules.network_range_m) {
            ok = false;
            break;
        }
    }
    ind.feasible = ok;
    ind.genotype = std::move(genotype);
    return ind;
}

}  // namespace fiberplan
