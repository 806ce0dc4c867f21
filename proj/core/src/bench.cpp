#include "fiberplan/bench.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "fiberplan/allocation.hpp"
#include "fiberplan/geometry.hpp"
#include "fiberplan/min_cost_flow.hpp"

namespace fiberplan {

namespace {

std::vector<Point> spanning_tree_positions(int count, double side, Rng& rng) {
    std::uniform_real_distribution<double> coord(0.0, side);
    std::vector<Point> points(count);
    for (Point& p : points) {
        p = {coord(rng), coord(rng)};
    }
    return points;
}

// Prim over the complete Euclidean graph; fine for the few hundred route
// nodes synthetic instances use.
std::vector<std::pair<int, int>> minimum_spanning_tree(const std::vector<Point>& points) {
    const int n = static_cast<int>(points.size());
    std::vector<std::pair<int, int>> edges;
    if (n <= 1) {
        return edges;
    }
    std::vector<char> in_tree(n, 0);
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<int> link(n, 0);
    in_tree[0] = 1;
    for (int v = 1; v < n; ++v) {
        best[v] = distance(points[0], points[v]);
    }
    for (int added = 1; added < n; ++added) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (!in_tree[v] && (pick < 0 || best[v] < best[pick])) {
                pick = v;
            }
        }
        in_tree[pick] = 1;
        edges.emplace_back(link[pick], pick);
        for (int v = 0; v < n; ++v) {
            if (!in_tree[v]) {
                const double d = distance(points[pick], points[v]);
                if (d < best[v]) {
                    best[v] = d;
                    link[v] = pick;
                }
            }
        }
    }
    return edges;
}

}  // namespace

NetworkMap synth_instance(const SynthSpec& spec) {
    if (spec.n_candidates < 0 || spec.n_sdu < 0 || spec.n_mdu < 0) {
        throw GenerationError("synth_instance: negative counts");
    }
    if (!(spec.area_m2 > 0.0)) {
        throw GenerationError("synth_instance: area must be positive");
    }
    if ((spec.n_sdu + spec.n_mdu) > 0 && spec.n_candidates < 1) {
        throw GenerationError("synth_instance: clients need at least one candidate");
    }
    if (spec.n_mdu > 0 &&
        (spec.mdu_demand_min < 1 || spec.mdu_demand_max < spec.mdu_demand_min)) {
        throw GenerationError("synth_instance: bad mdu demand range");
    }

    Rng rng(spec.seed);
    const double side = std::sqrt(spec.area_m2);
    const int n_route = spec.n_candidates + 1;

    std::vector<Point> route_pos;
    std::vector<std::pair<int, int>> route_edges;
    int root_slot = 0;
    if (spec.topology == SynthSpec::Topology::Tree) {
        route_pos = spanning_tree_positions(n_route, side, rng);
        route_pos[0] = {side / 2.0, side / 2.0};  // root at the centre
        route_edges = minimum_spanning_tree(route_pos);
    } else {
        const int rows = std::max(1, static_cast<int>(std::floor(std::sqrt(n_route))));
        const int cols = (n_route + rows - 1) / rows;
        const double sx = cols > 1 ? side / (cols - 1) : 0.0;
        const double sy = rows > 1 ? side / (rows - 1) : 0.0;
        std::uniform_real_distribution<double> jitter(-0.1, 0.1);
        route_pos.resize(n_route);
        for (int i = 0; i < n_route; ++i) {
            const int r = i / cols;
            const int c = i % cols;
            route_pos[i] = {c * sx + jitter(rng) * (sx > 0 ? sx : side * 0.05),
                            r * sy + jitter(rng) * (sy > 0 ? sy : side * 0.05)};
        }
        for (int i = 0; i < n_route; ++i) {
            const int r = i / cols;
            const int c = i % cols;
            if (c + 1 < cols && i + 1 < n_route) {
                route_edges.emplace_back(i, i + 1);
            }
            if (r + 1 < rows && i + cols < n_route) {
                route_edges.emplace_back(i, i + cols);
            }
        }
        root_slot = std::min(n_route - 1, (rows / 2) * cols + cols / 2);
    }

    // Node ids: root 0, candidates 1..n, then clients.
    std::vector<MapNode> nodes;
    nodes.reserve(n_route + spec.n_sdu + spec.n_mdu);
    std::vector<NodeId> slot_id(n_route);
    nodes.push_back({0, route_pos[root_slot], NodeKind::OltRoot, 0});
    slot_id[root_slot] = 0;
    NodeId next_id = 1;
    for (int i = 0; i < n_route; ++i) {
        if (i == root_slot) {
            continue;
        }
        slot_id[i] = next_id;
        nodes.push_back({next_id++, route_pos[i], NodeKind::EquipmentCandidate, 0});
    }

    std::bernoulli_distribution buried(spec.buried_fraction);
    std::vector<MapEdge> edges;
    edges.reserve(route_edges.size());
    for (const auto& [a, b] : route_edges) {
        edges.push_back({slot_id[a], slot_id[b], distance(route_pos[a], route_pos[b]),
                         buried(rng) ? RouteKind::Buried : RouteKind::Aerial});
    }

    std::uniform_int_distribution<int> anchor(0, std::max(0, spec.n_candidates - 1));
    std::bernoulli_distribution on_street(0.95);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    std::uniform_real_distribution<double> mdu_radius(1.0, std::max(1.5, spec.mdu_near_m));
    std::uniform_real_distribution<double> anywhere(0.0, side);
    std::uniform_int_distribution<int> mdu_demand(spec.mdu_demand_min, spec.mdu_demand_max);

    std::vector<int> candidate_slots;
    candidate_slots.reserve(spec.n_candidates);
    for (int i = 0; i < n_route; ++i) {
        if (i != root_slot) {
            candidate_slots.push_back(i);
        }
    }

    // Houses line the streets: pick a route edge (weighted by length), walk a
    // uniform fraction along it and step a plot's depth off to one side.
    // Every branch of the graph ends up with demand on it, as on real maps.
    std::vector<double> cumulative;
    double route_total = 0.0;
    for (const auto& [a, b] : route_edges) {
        route_total += distance(route_pos[a], route_pos[b]);
        cumulative.push_back(route_total);
    }
    std::uniform_real_distribution<double> along(0.0, route_total);
    std::uniform_real_distribution<double> plot_depth(3.0, 0.4 * spec.drop_reach_m);

    auto place_sdu = [&]() -> Point {
        if (route_edges.empty() || !on_street(rng)) {
            return {anywhere(rng), anywhere(rng)};
        }
        const double pick = along(rng);
        const std::size_t e =
            std::lower_bound(cumulative.begin(), cumulative.end(), pick) - cumulative.begin();
        const Point& a = route_pos[route_edges[e].first];
        const Point& b = route_pos[route_edges[e].second];
        const double len = std::max(distance(a, b), 1e-9);
        const double t = (cumulative[e] - pick) / len;
        const double nx = -(b.y - a.y) / len;
        const double ny = (b.x - a.x) / len;
        const double depth = plot_depth(rng) * (on_street(rng) ? 1.0 : -1.0);
        return {a.x + (b.x - a.x) * t + nx * depth, a.y + (b.y - a.y) * t + ny * depth};
    };

    for (int s = 0; s < spec.n_sdu; ++s) {
        nodes.push_back({next_id++, place_sdu(), NodeKind::ClientSdu, 1});
    }

    // Buildings sit at an equipment node (cabinets go on-site) in populated
    // zones, so the on-site PDO is shared with surrounding houses.
    const std::size_t sdu_begin = nodes.size() - static_cast<std::size_t>(spec.n_sdu);
    auto place_mdu = [&]() -> Point {
        int slot = candidate_slots[anchor(rng)];
        if (spec.n_sdu > 0) {
            std::uniform_int_distribution<int> pick_sdu(0, spec.n_sdu - 1);
            const Point near = nodes[sdu_begin + pick_sdu(rng)].position;
            double best = std::numeric_limits<double>::infinity();
            for (int i : candidate_slots) {
                const double d = distance(route_pos[i], near);
                if (d < best) {
                    best = d;
                    slot = i;
                }
            }
        }
        const double a = angle(rng);
        const double r = mdu_radius(rng);
        return {route_pos[slot].x + r * std::cos(a), route_pos[slot].y + r * std::sin(a)};
    };

    for (int m = 0; m < spec.n_mdu; ++m) {
        nodes.push_back({next_id++, place_mdu(), NodeKind::ClientMdu, mdu_demand(rng)});
    }

    return NetworkMap(std::move(nodes), std::move(edges));
}

SynthSpec map1_scale_spec(std::uint64_t seed) {
    SynthSpec spec;
    spec.n_candidates = 79;
    spec.n_sdu = 103;
    spec.n_mdu = 5;
    spec.area_m2 = 120000.0;
    spec.topology = SynthSpec::Topology::Tree;
    spec.seed = seed;
    // Small buildings, as on the reference map (~121 fibres in total).
    // Demands above the usable port count could never be served at all.
    spec.mdu_demand_min = 2;
    spec.mdu_demand_max = 6;
    return spec;
}

SynthSpec tiny_spec(std::uint64_t seed) {
    SynthSpec spec;
    spec.n_candidates = 8;
    spec.n_sdu = 7;
    spec.n_mdu = 0;
    // Dense SDU-only block: full coverage beats abandoning clients (a single
    // drop never outweighs the penalty), so the closest-first decode can
    // reach the exhaustive optimum and the oracle gap measures GA search
    // quality rather than representation limits.
    spec.area_m2 = 8000.0;
    spec.topology = SynthSpec::Topology::Tree;
    spec.seed = seed;
    return spec;
}

Individual greedy_baseline(const EvalContext& ctx) {
    const int usable = usable_ports(ctx.rules);
    const std::size_t n_candidates = ctx.map.candidates().size();
    const std::size_t n_clients = ctx.map.clients().size();

    // Reverse drop table: reachable clients per candidate, nearest first.
    std::vector<std::vector<std::pair<double, std::size_t>>> reach(n_candidates);
    for (std::size_t c = 0; c < n_clients; ++c) {
        for (const DropOption& opt : ctx.drops.options(c)) {
            reach[ctx.map.candidate_position(opt.candidate)].emplace_back(opt.distance_m, c);
        }
    }
    for (auto& list : reach) {
        std::sort(list.begin(), list.end());
    }

    Genotype g;
    g.pdo_mask.assign(n_candidates, 0);
    std::vector<char> served(n_clients, 0);

    auto coverage = [&](std::size_t pos, std::vector<std::size_t>* taken) {
        int cap = usable;
        int covered = 0;
        for (const auto& [d, c] : reach[pos]) {
            const int demand = ctx.map.nodes()[ctx.map.clients()[c]].demand;
            if (!served[c] && demand <= cap) {
                cap -= demand;
                covered += demand;
                if (taken != nullptr) {
                    taken->push_back(c);
                }
            }
        }
        return covered;
    };

    while (true) {
        int best_cover = 0;
        std::size_t best_pos = 0;
        for (std::size_t pos = 0; pos < n_candidates; ++pos) {
            if (g.pdo_mask[pos]) {
                continue;
            }
            const int cover = coverage(pos, nullptr);
            if (cover > best_cover) {
                best_cover = cover;
                best_pos = pos;
            }
        }
        if (best_cover == 0) {
            break;
        }
        std::vector<std::size_t> taken;
        coverage(best_pos, &taken);
        g.pdo_mask[best_pos] = 1;
        for (std::size_t c : taken) {
            served[c] = 1;
        }
    }

    return evaluate(repair(std::move(g), ctx).genotype, ctx);
}

namespace {

struct OracleAccumulator {
    const EvalContext& ctx;
    const std::vector<std::size_t>& atomic;      ///< client positions with demand >= 2
    const std::vector<std::size_t>& units;       ///< client positions with demand 1
    const std::vector<std::size_t>& active;      ///< mask positions of active pdos
    std::vector<int>& caps;                      ///< remaining ports per active pdo slot
    double fixed_cost;
    double& best;

    double unit_assignment_cost() const {
        // Serve-or-miss min-cost flow over the unit-demand clients.
        const std::size_t u = units.size();
        const std::size_t p = active.size();
        MinCostFlow flow(u + p + 3);
        const std::size_t src = u + p;
        const std::size_t miss = u + p + 1;
        const std::size_t sink = u + p + 2;
        for (std::size_t i = 0; i < u; ++i) {
            flow.add_edge(src, i, 1, 0.0);
            const MapNode& client = ctx.map.nodes()[ctx.map.clients()[units[i]]];
            const double factor =
                client.kind == NodeKind::ClientMdu ? ctx.rules.mdu_drop_factor : 1.0;
            for (std::size_t j = 0; j < p; ++j) {
                const NodeId pdo = ctx.map.nodes()[ctx.map.candidates()[active[j]]].id;
                const double d = ctx.drops.distance_to(units[i], pdo);
                if (d >= 0.0) {
                    flow.add_edge(i, u + j, 1, ctx.rules.cost_drop_per_m * d * factor);
                }
            }
            flow.add_edge(i, miss, 1, ctx.rules.penalty_per_missing);
        }
        for (std::size_t j = 0; j < p; ++j) {
            flow.add_edge(u + j, sink, caps[j], 0.0);
        }
        flow.add_edge(miss, sink, static_cast<int>(u), 0.0);
        return flow.solve(src, sink, static_cast<int>(u)).second;
    }

    void place_atomic(std::size_t next, double acc) {
        if (fixed_cost + acc >= best) {
            return;  // assignment costs are non-negative
        }
        if (next == atomic.size()) {
            best = std::min(best, fixed_cost + acc + unit_assignment_cost());
            return;
        }
        const std::size_t c = atomic[next];
        const MapNode& client = ctx.map.nodes()[ctx.map.clients()[c]];
        const double factor = client.kind == NodeKind::ClientMdu ? ctx.rules.mdu_drop_factor : 1.0;
        for (std::size_t j = 0; j < active.size(); ++j) {
            if (caps[j] < client.demand) {
                continue;
            }
            const NodeId pdo = ctx.map.nodes()[ctx.map.candidates()[active[j]]].id;
            const double d = ctx.drops.distance_to(c, pdo);
            if (d < 0.0) {
                continue;
            }
            caps[j] -= client.demand;
            place_atomic(next + 1, acc + ctx.rules.cost_drop_per_m * d * factor);
            caps[j] += client.demand;
        }
        place_atomic(next + 1, acc + ctx.rules.penalty_per_missing);
    }
};

}  // namespace

double brute_force_oracle(const EvalContext& ctx) {
    const std::size_t n = ctx.map.candidates().size();
    const std::size_t n_clients = ctx.map.clients().size();
    if (n > 12 || n_clients > 10) {
        throw OracleSizeError("brute_force_oracle: instance exceeds 12 candidates / 10 clients");
    }
    const int usable = usable_ports(ctx.rules);

    std::vector<std::size_t> atomic;
    std::vector<std::size_t> units;
    for (std::size_t c = 0; c < n_clients; ++c) {
        (ctx.map.nodes()[ctx.map.clients()[c]].demand >= 2 ? atomic : units).push_back(c);
    }

    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<std::size_t> active;
        std::vector<const RootPath*> paths;
        for (std::size_t m = 0; m < n; ++m) {
            if (mask & (std::uint64_t{1} << m)) {
                active.push_back(m);
                paths.push_back(&ctx.paths.root_path(ctx.map, ctx.map.candidates()[m]));
            }
        }
        double dist_cost = 0.0;
        for (std::uint32_t e : distribution_union(ctx.map, paths).edges) {
            const MapEdge& edge = ctx.map.edges()[e];
            dist_cost +=
                ctx.rules.cost_dist_per_m * edge.length_m *
                (edge.route == RouteKind::Buried ? ctx.rules.buried_cost_multiplier : 1.0);
        }
        const double fixed = ctx.rules.cost_pdo * static_cast<double>(active.size()) + dist_cost;
        if (fixed >= best) {
            continue;
        }
        std::vector<int> caps(active.size(), usable);
        OracleAccumulator acc{ctx, atomic, units, active, caps, fixed, best};
        acc.place_atomic(0, 0.0);
    }
    return best;
}

void summarize_runs(StatsReport& report) {
    auto& runs = report.runs;
    if (runs.empty()) {
        return;
    }
    std::vector<std::size_t> order(runs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&runs](std::size_t a, std::size_t b) {
        return runs[a].fitness < runs[b].fitness;
    });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t median = order[(order.size() - 1) / 2];

    auto summarize = [&](auto metric) {
        MetricSummary s;
        s.best = metric(runs[best]);
        s.worst = metric(runs[worst]);
        s.median = metric(runs[median]);
        double sum = 0.0;
        for (const RunRecord& r : runs) {
            sum += metric(r);
        }
        s.mean = sum / static_cast<double>(runs.size());
        if (runs.size() > 1) {
            double sq = 0.0;
            for (const RunRecord& r : runs) {
                const double d = metric(r) - s.mean;
                sq += d * d;
            }
            s.stddev = std::sqrt(sq / static_cast<double>(runs.size() - 1));
        }
        return s;
    };
    report.fitness = summarize([](const RunRecord& r) { return r.fitness; });
    report.n_pdo = summarize([](const RunRecord& r) { return static_cast<double>(r.n_pdo); });
    report.drop_km = summarize([](const RunRecord& r) { return r.drop_km; });
    report.dist_km = summarize([](const RunRecord& r) { return r.dist_km; });

    report.mean_best_trace.clear();
    if (!runs.front().trace.empty()) {
        const std::size_t len = runs.front().trace.size();
        report.mean_best_trace.assign(len, 0.0);
        for (const RunRecord& r : runs) {
            for (std::size_t g = 0; g < len && g < r.trace.size(); ++g) {
                report.mean_best_trace[g] += r.trace[g].best;
            }
        }
        for (double& v : report.mean_best_trace) {
            v /= static_cast<double>(runs.size());
        }
    }
}

StatsReport run_stats(const EvalContext& ctx, const GAConfig& config, int n_runs) {
    if (n_runs < 1) {
        throw ConfigError("run_stats: n_runs must be >= 1");
    }
    StatsReport report;
    double best_fitness = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_runs; ++i) {
        GAConfig run_config = config;
        run_config.rng_seed = config.rng_seed + static_cast<std::uint64_t>(i);
        EvolveResult result = evolve(ctx, run_config);

        RunRecord record;
        record.seed = run_config.rng_seed;
        record.fitness = result.best.fitness;
        record.n_pdo = result.best.cost.n_pdo;
        record.drop_km = result.best.cost.drop_m / 1000.0;
        record.dist_km = result.best.cost.dist_m / 1000.0;
        record.feasible = result.best.feasible;
        record.trace = std::move(result.stats.trace);
        report.runs.push_back(std::move(record));

        if (result.best.fitness < best_fitness) {
            best_fitness = result.best.fitness;
            report.best_individual = std::move(result.best);
        }
    }
    summarize_runs(report);
    return report;
}

}  // namespace fiberplan
