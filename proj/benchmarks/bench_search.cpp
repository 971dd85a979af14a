#include <benchmark/benchmark.h>

#include "turan/search.hpp"
#include "turan/structure.hpp"

using namespace turan;

static void BM_TuranP4N6(benchmark::State& state) {
    SearchConfig cfg;
    cfg.family = FamilySpec::parse("p4");
    cfg.n = 6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(turan_exact(cfg));
    }
}
BENCHMARK(BM_TuranP4N6);

static void BM_TuranM2N7(benchmark::State& state) {
    SearchConfig cfg;
    cfg.family = FamilySpec::parse("m2");
    cfg.n = 7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(turan_exact(cfg));
    }
}
BENCHMARK(BM_TuranM2N7);

static void BM_LemmaFiveEnumeration(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_lemma_five(1));
    }
}
BENCHMARK(BM_LemmaFiveEnumeration);

BENCHMARK_MAIN();
