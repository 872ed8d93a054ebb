#include <benchmark/benchmark.h>

#include "shellcalc/chart.hpp"
#include "shellcalc/parser.hpp"
#include "shellcalc/whole_partial.hpp"

using namespace shellcalc;

static void WholePartialDerive(benchmark::State& state) {
    const Chart chart = Chart::standard();
    const Expr f = parse("exp(E)*sinh(p2) + E^2*p1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(whole_partial(chart, f, "p1"));
    }
}
BENCHMARK(WholePartialDerive);

static void CommutatorApply(benchmark::State& state) {
    const Chart chart = Chart::standard();
    const Expr f = parse("exp(E)*sinh(p2) + E^2*p1");
    for (auto _ : state) {
        benchmark::DoNotOptimize(commutator_apply(chart, "p1", "E", f));
    }
}
BENCHMARK(CommutatorApply);

static void CoefficientResidualSweep(benchmark::State& state) {
    const Chart chart = Chart::standard();
    const Expr f = parse("exp(E)*sinh(p2)");
    for (auto _ : state) {
        Sampler s = chart.base_sampler(42);
        benchmark::DoNotOptimize(
            commutator_coefficient_residual(chart, 2, f, s, static_cast<int>(state.range(0))));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(CoefficientResidualSweep)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void FiniteDifferenceOracle(benchmark::State& state) {
    const Chart chart = Chart::standard();
    const Expr f = parse("exp(E)*sinh(p2) + E^2*p1");
    const Bindings point{{"p1", {0.9, 0.0}}, {"p2", {0.4, 0.0}}, {"p3", {-1.2, 0.0}},
                         {"m", {1.0, 0.0}}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(fd_whole_partial(chart, f, "p1", point, 1e-5));
    }
}
BENCHMARK(FiniteDifferenceOracle);

BENCHMARK_MAIN();
