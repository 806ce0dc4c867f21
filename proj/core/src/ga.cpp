#include "fiberplan/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fiberplan/allocation.hpp"

namespace fiberplan {

RepairResult repair(Genotype genotype, const EvalContext& ctx) {
    AllocationResult alloc = allocate(genotype.pdo_mask, ctx.map, ctx.rules, ctx.drops);
    genotype.assignment = std::move(alloc.assignment);
    genotype.assignment_stale = false;
    return {std::move(genotype), std::move(alloc.misplaced)};
}

Individual decode_and_evaluate(Genotype genotype, const EvalContext& ctx) {
    RepairResult repaired = repair(std::move(genotype), ctx);
    if (!repaired.misplaced.empty()) {
        local_search(repaired.genotype.assignment, repaired.misplaced, repaired.genotype.pdo_mask,
                     ctx.map, ctx.rules, ctx.drops);
    }
    return evaluate(std::move(repaired.genotype), ctx);
}

namespace {

void validate_config(const GAConfig& config) {
    if (config.population_size < 2) {
        throw ConfigError("population_size must be >= 2");
    }
    if (config.generations < 0) {
        throw ConfigError("generations must be >= 0");
    }
    auto probability = [](double v, const char* name) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw ConfigError(std::string(name) + " must lie in [0, 1]");
        }
    };
    probability(config.crossover_rate, "crossover_rate");
    probability(config.crossover_gene_prob, "crossover_gene_prob");
    probability(config.init_density, "init_density");
    if (config.mutation_rate) {
        probability(*config.mutation_rate, "mutation_rate");
    }
    if (config.elitism_fraction < 0.0 || config.elitism_fraction >= 1.0) {
        throw ConfigError("elitism_fraction must lie in [0, 1)");
    }
    if (config.tournament_size < 1) {
        throw ConfigError("tournament_size must be >= 1");
    }
}

}  // namespace

std::vector<Individual> init_population(const EvalContext& ctx, const GAConfig& config, Rng& rng) {
    validate_config(config);
    std::bernoulli_distribution place(config.init_density);
    std::vector<Individual> population;
    population.reserve(config.population_size);
    for (int i = 0; i < config.population_size; ++i) {
        Genotype g;
        g.pdo_mask.resize(ctx.map.candidates().size());
        for (auto& bit : g.pdo_mask) {
            bit = place(rng) ? 1 : 0;
        }
        population.push_back(decode_and_evaluate(std::move(g), ctx));
    }
    return population;
}

Genotype bitflip_mutation(Genotype genotype, double rate, Rng& rng) {
    std::bernoulli_distribution flip(rate);
    for (auto& bit : genotype.pdo_mask) {
        if (flip(rng)) {
            bit ^= 1;
            genotype.assignment_stale = true;
        }
    }
    return genotype;
}

std::pair<Genotype, Genotype> uniform_crossover(const Genotype& parent_a,
                                                const Genotype& parent_b, double gene_prob,
                                                Rng& rng) {
    if (parent_a.pdo_mask.size() != parent_b.pdo_mask.size()) {
        throw std::invalid_argument("uniform_crossover: mask length mismatch");
    }
    Genotype child_a = parent_a;
    Genotype child_b = parent_b;
    std::bernoulli_distribution swap_gene(gene_prob);
    for (std::size_t i = 0; i < child_a.pdo_mask.size(); ++i) {
        if (swap_gene(rng)) {
            std::swap(child_a.pdo_mask[i], child_b.pdo_mask[i]);
        }
    }
    child_a.assignment_stale = true;
    child_b.assignment_stale = true;
    return {std::move(child_a), std::move(child_b)};
}

const Individual& tournament_select(const std::vector<Individual>& population, int k, Rng& rng) {
    if (population.empty()) {
        throw std::logic_error("tournament_select: empty population");
    }
    std::uniform_int_distribution<std::size_t> pick(0, population.size() - 1);
    const Individual* best = &population[pick(rng)];
    for (int i = 1; i < k; ++i) {
        const Individual& contender = population[pick(rng)];
        if (contender.fitness < best->fitness) {
            best = &contender;
        }
    }
    return *best;
}

namespace {

double mean_fitness(const std::vector<Individual>& population) {
    double sum = 0.0;
    for (const Individual& ind : population) {
        sum += ind.fitness;
    }
    return sum / static_cast<double>(population.size());
}

const Individual& population_best(const std::vector<Individual>& population) {
    return *std::min_element(
        population.begin(), population.end(),
        [](const Individual& a, const Individual& b) { return a.fitness < b.fitness; });
}

}  // namespace

EvolveResult evolve(const EvalContext& ctx, const GAConfig& config) {
    validate_config(config);
    Rng rng(config.rng_seed);
    const std::size_t mask_len = ctx.map.candidates().size();
    const double rate =
        config.mutation_rate.value_or(mask_len > 0 ? 2.0 / static_cast<double>(mask_len) : 0.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<Individual> population = init_population(ctx, config, rng);
    EvolveResult result;
    result.best = population_best(population);
    result.stats.evaluations = population.size();
    result.stats.trace.push_back({0, result.best.fitness, mean_fitness(population)});

    const int n_elite = static_cast<int>(
        std::floor(config.population_size * config.elitism_fraction));

    for (int gen = 1; gen <= config.generations; ++gen) {
        std::stable_sort(population.begin(), population.end(),
                         [](const Individual& a, const Individual& b) {
                             return a.fitness < b.fitness;
                         });
        std::vector<Individual> next(population.begin(), population.begin() + n_elite);
        next.reserve(config.population_size);

        while (static_cast<int>(next.size()) < config.population_size) {
            const Genotype& a = tournament_select(population, config.tournament_size, rng).genotype;
            const Genotype& b = tournament_select(population, config.tournament_size, rng).genotype;
            std::pair<Genotype, Genotype> children =
                unit(rng) < config.crossover_rate
                    ? uniform_crossover(a, b, config.crossover_gene_prob, rng)
                    : std::pair<Genotype, Genotype>{a, b};

            for (Genotype* child : {&children.first, &children.second}) {
                if (static_cast<int>(next.size()) >= config.population_size) {
                    break;
                }
                next.push_back(
                    decode_and_evaluate(bitflip_mutation(std::move(*child), rate, rng), ctx));
                ++result.stats.evaluations;
            }
        }

        population = std::move(next);
        const Individual& gen_best = population_best(population);
        if (gen_best.fitness < result.best.fitness) {
            result.best = gen_best;
        }
        result.stats.trace.push_back({gen, result.best.fitness, mean_fitness(population)});
    }
    return result;
}

}  // namespace fiberplan
