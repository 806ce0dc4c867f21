#pragma once

#include <random>
#include <vector>

#include "fiberplan/fitness.hpp"
#include "fiberplan/genotype.hpp"

namespace fiberplan {

using Rng = std::mt19937_64;

struct TracePoint {
    int generation = 0;
    double best = 0.0;  ///< best-ever fitness up to this generation
    double mean = 0.0;  ///< mean fitness of the current population
};

struct RunStats {
    std::vector<TracePoint> trace;  ///< generation 0 (initial population) onwards
    std::size_t evaluations = 0;
};

struct EvolveResult {
    Individual best;
    RunStats stats;
};

struct RepairResult {
    Genotype genotype;
    std::vector<std::size_t> misplaced;
};

/// Rebuilds the assignment level against the current mask via allocate().
/// Misplaced clients (served, but not by their nearest active PDO) are the
/// local-search trigger for the caller.
RepairResult repair(Genotype genotype, const EvalContext& ctx);

/// repair -> local search when triggered -> fitness. The one decode path
/// used for every individual the engine touches.
Individual decode_and_evaluate(Genotype genotype, const EvalContext& ctx);

std::vector<Individual> init_population(const EvalContext& ctx, const GAConfig& config, Rng& rng);

Genotype bitflip_mutation(Genotype genotype, double rate, Rng& rng);

std::pair<Genotype, Genotype> uniform_crossover(const Genotype& parent_a,
                                                const Genotype& parent_b, double gene_prob,
                                                Rng& rng);

const Individual& tournament_select(const std::vector<Individual>& population, int k, Rng& rng);

/// Full evolutionary run: generational loop with tournament parents, uniform
/// crossover, bit-flip mutation, repair + triggered local search, and a top
/// slice of elites carried unchanged. Deterministic for a fixed seed.
EvolveResult evolve(const EvalContext& ctx, const GAConfig& config);

}  // namespace fiberplan
