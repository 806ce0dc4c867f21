#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fiberplan/types.hpp"

namespace fiberplan {

/// Two-level individual encoding: which candidates carry a PDO, and which
/// PDO each client hangs from. The assignment level depends on the mask and
/// is rebuilt by repair whenever variation touches the mask.
struct Genotype {
    std::vector<std::uint8_t> pdo_mask;  ///< one bit per candidate position
    std::vector<NodeId> assignment;      ///< PDO node id per client position, or kUnassigned
    bool assignment_stale = false;       ///< set by variation, cleared by repair

    int active_pdo_count() const {
        int n = 0;
        for (std::uint8_t bit : pdo_mask) {
            n += bit;
        }
        return n;
    }
};

struct GAConfig {
    int population_size = 100;
    int generations = 100;
    /// Per-gene bit-flip probability; defaults to 2 / mask length when unset.
    std::optional<double> mutation_rate;
    double crossover_rate = 0.85;
    double crossover_gene_prob = 0.5;
    int tournament_size = 5;
    double elitism_fraction = 0.10;
    double init_density = 0.5;  ///< Bernoulli parameter for initial mask bits
    std::uint64_t rng_seed = 1;
};

/// Evaluated cost terms of one decoded design (currency units come from the
/// business rules). Reported metres are physical; the weighted fields carry
/// the MDU and buried multipliers that enter the cost formula.
struct CostBreakdown {
    double drop_m = 0.0;           ///< physical drop metres
    double drop_weighted_m = 0.0;  ///< drop metres with the MDU factor applied
    double dist_m = 0.0;           ///< physical distribution metres (edge union)
    double dist_weighted_m = 0.0;  ///< distribution metres with the buried multiplier
    int n_pdo = 0;
    double c_mat = 0.0;
    int h_missing = 0;
    int crossings = 0;  ///< only counted when the crossing penalty is enabled
    double fitness = 0.0;
};

struct Individual {
    Genotype genotype;
    CostBreakdown cost;
    double fitness = 0.0;
    bool feasible = false;
};

}  // namespace fiberplan
