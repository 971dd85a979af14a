#include <benchmark/benchmark.h>

#include <random>

#include "turan/constructions.hpp"
#include "turan/patterns.hpp"

using namespace turan;

static void BM_P4FreeCheckSP14(benchmark::State& state) {
    Hypergraph3 h = construct(ConstructionKind::sp(14));
    const FamilySpec fam{PatternSpec::minimal_path(4)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_family_free(h, fam));
    }
}
BENCHMARK(BM_P4FreeCheckSP14);

static void BM_P4WitnessK8(benchmark::State& state) {
    Hypergraph3 h = Hypergraph3::complete(8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_minimal_path(h, 4));
    }
}
BENCHMARK(BM_P4WitnessK8);

static void BM_C4DetectBalloon14(benchmark::State& state) {
    Hypergraph3 h = construct(ConstructionKind::balloon(14));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_minimal_cycle(h, 4));
    }
}
BENCHMARK(BM_C4DetectBalloon14);

static void BM_ThroughEdgeMidSearch(benchmark::State& state) {
    // the hot loop of the solver: incremental checks against a 20-edge state
    Hypergraph3 base = Hypergraph3::complete(6);
    ActiveGraph g(8);
    for (const Triple& t : base.edges()) g.push(triple_rank(t));
    PatternDetector det(FamilySpec{PatternSpec::minimal_path(4)});
    std::int64_t probe = triple_rank(Triple(0, 1, 6));
    for (auto _ : state) {
        g.push(probe);
        benchmark::DoNotOptimize(det.through_edge(g, probe));
        g.pop();
    }
}
BENCHMARK(BM_ThroughEdgeMidSearch);

static void BM_MatchingNumberB14(benchmark::State& state) {
    Hypergraph3 h = construct(ConstructionKind::balloon(14));
    for (auto _ : state) {
        benchmark::DoNotOptimize(matching_number(h));
    }
}
BENCHMARK(BM_MatchingNumberB14);
