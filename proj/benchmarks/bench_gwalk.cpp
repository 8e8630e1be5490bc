#include <benchmark/benchmark.h>

#include "gwalk/graph.hpp"
#include "gwalk/linewalk.hpp"
#include "gwalk/structure.hpp"
#include "gwalk/walkops.hpp"

using namespace gwalk;

namespace {

void BM_AnalyzeTutteCoxeter(benchmark::State& state) {
    const Graph g = builtin("tutte_coxeter");
    for (auto _ : state) {
        GraphReport r = analyze(g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_AnalyzeTutteCoxeter);

void BM_SupportOfPower(benchmark::State& state) {
    const Graph g = builtin("mcgee");
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        IntMatrix s = support_of_power(g, n);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SupportOfPower)->Arg(2)->Arg(4)->Arg(8);

void BM_WalkEvolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        WalkState s = evolve(20, n);
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_WalkEvolve)->Arg(25)->Arg(50)->Arg(100)->Complexity();

void BM_Coefficients(benchmark::State& state) {
    for (auto _ : state) {
        StructureFormula f = coefficients(20, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_Coefficients)->Arg(6)->Arg(20);

void BM_ZetaPetersen(benchmark::State& state) {
    const Graph g = builtin("petersen");
    for (auto _ : state) {
        IntPoly z = zeta_poly(g, 1);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_ZetaPetersen);

void BM_VerifyMcGee(benchmark::State& state) {
    const Graph g = builtin("mcgee");
    for (auto _ : state) {
        VerificationReport r = verify(g, 4);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_VerifyMcGee);

} // namespace

BENCHMARK_MAIN();
