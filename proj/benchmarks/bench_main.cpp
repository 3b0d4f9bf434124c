#include <benchmark/benchmark.h>

#include <vector>

#include "dicolor/coloring.hpp"
#include "dicolor/digraph.hpp"
#include "dicolor/enumerate.hpp"
#include "dicolor/exact.hpp"
#include "dicolor/generators.hpp"
#include "dicolor/lll.hpp"

using namespace dicolor;

namespace {

Digraph random_digraph(int n, int pct, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (int(uniform_below(rng, 100)) < pct) arcs.emplace_back(u, v);
            if (int(uniform_below(rng, 100)) < pct) arcs.emplace_back(v, u);
        }
    return Digraph(n, arcs);
}

void BM_ExactChiFano(benchmark::State& state) {
    Digraph d = gen_fano(0);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(d).chi);
}
BENCHMARK(BM_ExactChiFano)->Unit(benchmark::kMicrosecond);

void BM_ExactChiBidirectedK5(benchmark::State& state) {
    Digraph d = gen_bidirected_complete(5);
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(d).chi);
}
BENCHMARK(BM_ExactChiBidirectedK5)->Unit(benchmark::kMicrosecond);

void BM_GreedyColorMin(benchmark::State& state) {
    int n = int(state.range(0));
    Digraph d = random_digraph(n, 20, 11);
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    for (auto _ : state) benchmark::DoNotOptimize(greedy_color_min(d, order).palette_size);
    state.SetComplexityN(n);
}
BENCHMARK(BM_GreedyColorMin)->Arg(200)->Arg(400)->Arg(800)->Unit(benchmark::kMillisecond)->Complexity();

void BM_PeelColor(benchmark::State& state) {
    Digraph d = random_digraph(int(state.range(0)), 20, 13);
    for (auto _ : state) benchmark::DoNotOptimize(peel_color(d).coloring.palette_size);
}
BENCHMARK(BM_PeelColor)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_UncolorPhase(benchmark::State& state) {
    int delta = int(state.range(0));
    Digraph d = gen_random_regular_digonfree(100 * delta, delta, 17);
    PartialColoring assignment = random_phase(d, delta / 2, uint64_t{17});
    for (auto _ : state) benchmark::DoNotOptimize(uncolor_phase(d, assignment).palette_size);
}
BENCHMARK(BM_UncolorPhase)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_PhaseStats(benchmark::State& state) {
    int delta = 30;
    Digraph d = gen_random_regular_digonfree(100 * delta, delta, 19);
    PartialColoring assignment = random_phase(d, delta / 2, uint64_t{19});
    PartialColoring partial = uncolor_phase(d, assignment);
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_stats(d, assignment, partial, 1.0).failed);
}
BENCHMARK(BM_PhaseStats)->Unit(benchmark::kMillisecond);

void BM_RegularGeneration(benchmark::State& state) {
    uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            gen_random_regular_digonfree(int(state.range(0)), 10, ++seed).arc_count());
}
BENCHMARK(BM_RegularGeneration)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_EnumerateDigonFree5(benchmark::State& state) {
    for (auto _ : state) {
        long long count = 0;
        enumerate_small(5, GraphFamily::DigonFree, [&](const Digraph&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateDigonFree5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
