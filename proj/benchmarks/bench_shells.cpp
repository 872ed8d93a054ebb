#include <benchmark/benchmark.h>

#include "shellcalc/gamma.hpp"
#include "shellcalc/ncalgebra.hpp"
#include "shellcalc/verify.hpp"

using namespace shellcalc;

static void DiracDeterminant(benchmark::State& state) {
    const std::array<double, 4> p{0.8, -0.3, 1.1, 0.4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dirac_shell_residual(p, 1.7, 0.6));
    }
}
BENCHMARK(DiracDeterminant);

static void KappaJacobi(benchmark::State& state) {
    const CoordAlgebra algebra = CoordAlgebra::kappa_minkowski(1.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(jacobi_residual(algebra));
    }
}
BENCHMARK(KappaJacobi);

static void FullVerifySuite(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_verify());
    }
}
BENCHMARK(FullVerifySuite)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
