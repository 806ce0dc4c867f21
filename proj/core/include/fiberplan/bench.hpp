#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fiberplan/ga.hpp"
#include "fiberplan/network_map.hpp"

namespace fiberplan {

struct GenerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameters of a synthetic street-route instance. Candidates sit on a
/// random route graph of the requested topology; clients scatter near the
/// candidates so that at least ~95% of them land inside drop reach.
struct SynthSpec {
    int n_candidates = 0;  ///< equipment candidates, excluding the OLT root
    int n_sdu = 0;
    int n_mdu = 0;
    double area_m2 = 100000.0;
    enum class Topology { Tree, Grid } topology = Topology::Tree;
    std::uint64_t seed = 1;
    double drop_reach_m = 85.0;
    int mdu_demand_min = 4;
    int mdu_demand_max = 50;
    /// Buildings sit next to an equipment node (street cabinets go on-site),
    /// so MDUs scatter within this radius of their anchor candidate.
    double mdu_near_m = 12.0;
    double buried_fraction = 0.15;
};

NetworkMap synth_instance(const SynthSpec& spec);

/// Instance matched to the larger of the two benchmark maps this tool is
/// calibrated against: 79 candidates + root, 103 SDUs, 5 MDUs, ~2.1 km of
/// routes on a tree street graph.
SynthSpec map1_scale_spec(std::uint64_t seed);

/// Small instance the exhaustive oracle can solve: 8 candidates, 6 SDUs,
/// 1 low-demand MDU.
SynthSpec tiny_spec(std::uint64_t seed);

/// Set-cover style baseline: repeatedly activate the candidate covering the
/// most unserved demand within drop range, then run the closest-first
/// allocation on the resulting mask.
Individual greedy_baseline(const EvalContext& ctx);

/// Exact optimum by enumerating every PDO mask; per mask the capacitated
/// serve-or-miss assignment is solved exactly (multi-port clients by
/// enumeration, unit-demand clients by min-cost flow). Limited to 12
/// candidates and 10 clients; throws OracleSizeError beyond that.
double brute_force_oracle(const EvalContext& ctx);

struct RunRecord {
    std::uint64_t seed = 0;
    double fitness = 0.0;
    int n_pdo = 0;
    double drop_km = 0.0;
    double dist_km = 0.0;
    bool feasible = false;
    std::vector<TracePoint> trace;
};

struct MetricSummary {
    double best = 0.0;    ///< value in the best-fitness run
    double worst = 0.0;   ///< value in the worst-fitness run
    double median = 0.0;  ///< value in the median-fitness run
    double mean = 0.0;
    double stddev = 0.0;  ///< sample standard deviation
};

struct StatsReport {
    std::vector<RunRecord> runs;
    MetricSummary fitness;
    MetricSummary n_pdo;
    MetricSummary drop_km;
    MetricSummary dist_km;
    std::vector<double> mean_best_trace;  ///< per generation, averaged over runs
    Individual best_individual;
};

/// Cross-run summaries recomputed from the records alone; run_stats uses
/// this internally so stored records always round-trip.
void summarize_runs(StatsReport& report);

/// n_runs evolutionary runs with seeds config.rng_seed .. +(n_runs-1).
StatsReport run_stats(const EvalContext& ctx, const GAConfig& config, int n_runs);

}  // namespace fiberplan
