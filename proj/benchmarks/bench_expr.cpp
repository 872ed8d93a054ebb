#include <benchmark/benchmark.h>

#include "shellcalc/derivative.hpp"
#include "shellcalc/expr.hpp"
#include "shellcalc/parser.hpp"

using namespace shellcalc;

namespace {

const char* kText = "exp(E/3)*sinh(p2) + sqrt(m^2 + p1^2 + p2^2 + p3^2)/cosh(p3) - p1*p2*p3/E^2";

Bindings point() {
    return {{"E", {1.9, 0.0}}, {"p1", {0.7, 0.0}}, {"p2", {-1.1, 0.0}},
            {"p3", {0.4, 0.0}}, {"m", {1.2, 0.0}}};
}

}  // namespace

static void ParseExpression(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse(kText));
    }
}
BENCHMARK(ParseExpression);

static void EvalExpression(benchmark::State& state) {
    const Expr e = parse(kText);
    const Bindings b = point();
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval(e, b));
    }
}
BENCHMARK(EvalExpression);

static void DiffExplicit(benchmark::State& state) {
    const Expr e = parse(kText);
    for (auto _ : state) {
        benchmark::DoNotOptimize(diff_explicit(e, "p2"));
    }
}
BENCHMARK(DiffExplicit);

static void PrintRoundTrip(benchmark::State& state) {
    const Expr e = parse(kText);
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse(to_string(e)));
    }
}
BENCHMARK(PrintRoundTrip);

BENCHMARK_MAIN();
