#include <benchmark/benchmark.h>

#include "fiberplan/allocation.hpp"
#include "fiberplan/bench.hpp"
#include "fiberplan/geometry.hpp"

using namespace fiberplan;

namespace {

struct Scene {
    NetworkMap map;
    BusinessRules rules;
    PathCache paths;
    DropTable drops;

    Scene() : map(preprocess(synth_instance(map1_scale_spec(1))).map),
              drops(build_drop_table(map, rules)) {}

    EvalContext ctx() { return {map, rules, paths, drops}; }

    Genotype half_mask() {
        Genotype g;
        g.pdo_mask.assign(map.candidates().size(), 0);
        for (std::size_t i = 0; i < g.pdo_mask.size(); i += 2) {
            g.pdo_mask[i] = 1;
        }
        return g;
    }
};

void BM_Evaluate(benchmark::State& state) {
    Scene scene;
    const Genotype base = scene.half_mask();
    for (auto _ : state) {
        benchmark::DoNotOptimize(decode_and_evaluate(base, scene.ctx()));
    }
}
BENCHMARK(BM_Evaluate);

void BM_DijkstraColdCache(benchmark::State& state) {
    Scene scene;
    for (auto _ : state) {
        PathCache cold;
        for (std::size_t c : scene.map.candidates()) {
            benchmark::DoNotOptimize(cold.root_path(scene.map, c).distance_m);
        }
    }
}
BENCHMARK(BM_DijkstraColdCache);

void BM_DijkstraWarmCache(benchmark::State& state) {
    Scene scene;
    for (std::size_t c : scene.map.candidates()) {
        scene.paths.root_path(scene.map, c);
    }
    for (auto _ : state) {
        for (std::size_t c : scene.map.candidates()) {
            benchmark::DoNotOptimize(scene.paths.root_path(scene.map, c).distance_m);
        }
    }
}
BENCHMARK(BM_DijkstraWarmCache);

void BM_Allocate(benchmark::State& state) {
    Scene scene;
    const Genotype g = scene.half_mask();
    for (auto _ : state) {
        benchmark::DoNotOptimize(allocate(g.pdo_mask, scene.map, scene.rules, scene.drops));
    }
}
BENCHMARK(BM_Allocate);

void BM_SegmentsIntersect(benchmark::State& state) {
    const Segment a{{0.0, 0.0}, {100.0, 100.0}};
    const Segment b{{0.0, 100.0}, {100.0, 0.0}};
    const Segment c{{0.0, 100.1}, {100.0, 200.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(segments_intersect(a, b));
        benchmark::DoNotOptimize(segments_intersect(a, c));
    }
}
BENCHMARK(BM_SegmentsIntersect);

void BM_FullRun(benchmark::State& state) {
    Scene scene;
    GAConfig config;
    config.population_size = 100;
    config.generations = static_cast<int>(state.range(0));
    config.rng_seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve(scene.ctx(), config));
    }
}
BENCHMARK(BM_FullRun)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
