#include <benchmark/benchmark.h>

#include "turan/canonical.hpp"
#include "turan/constructions.hpp"

using namespace turan;

static void BM_CanonicalSK10(benchmark::State& state) {
    Hypergraph3 h = construct(ConstructionKind::sk(10));
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(h));
    }
}
BENCHMARK(BM_CanonicalSK10);

static void BM_CanonicalK8(benchmark::State& state) {
    // fully symmetric input: the twin classes carry the whole load
    Hypergraph3 h = Hypergraph3::complete(8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonical_form(h));
    }
}
BENCHMARK(BM_CanonicalK8);

static void BM_IsomorphismSP8SK8(benchmark::State& state) {
    Hypergraph3 a = construct(ConstructionKind::sp(8));
    Hypergraph3 b = construct(ConstructionKind::sk(8));
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_isomorphic(a, b));
    }
}
BENCHMARK(BM_IsomorphismSP8SK8);
