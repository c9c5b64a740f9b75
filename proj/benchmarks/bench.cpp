#include <benchmark/benchmark.h>

#include "phenylo/families.hpp"

#include "phenylo/cuts.hpp"
#include "phenylo/enumeration.hpp"
#include "phenylo/isomorphism.hpp"
#include "phenylo/molecular_graph.hpp"

using namespace phenylo;

static void bm_mostar_direct(benchmark::State& state) {
    MolecularGraph g = expand(linear(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(mostar_direct(g));
}
BENCHMARK(bm_mostar_direct)->Arg(4)->Arg(8)->Arg(12);

static void bm_mostar_cut(benchmark::State& state) {
    PhenyleneTree t = linear(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mostar_cut(t));
}
BENCHMARK(bm_mostar_cut)->Arg(4)->Arg(8)->Arg(12);

static void bm_certificate(benchmark::State& state) {
    MolecularGraph g = expand(pl(2, 2, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(certificate(g));
}
BENCHMARK(bm_certificate)->Arg(2)->Arg(3)->Arg(4);

static void bm_enumerate(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_phenylenes(static_cast<int>(state.range(0))));
}
BENCHMARK(bm_enumerate)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
