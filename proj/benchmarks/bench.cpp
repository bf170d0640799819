#include <benchmark/benchmark.h>

#include "cubiclocal/certify.hpp"
#include "cubiclocal/density.hpp"
#include "cubiclocal/forms.hpp"
#include "cubiclocal/padic.hpp"
#include "cubiclocal/system.hpp"

using namespace cubiclocal;

static void BM_SolveStaged(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    density::LinearSystem sys = density::build_system(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(density::solve_staged(sys));
    }
}
BENCHMARK(BM_SolveStaged)->DenseRange(2, 8)->Unit(benchmark::kMillisecond);

static void BM_BuildSystem(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(density::build_system(n));
    }
}
BENCHMARK(BM_BuildSystem)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_RatFuncMul(benchmark::State& state) {
    RatFunc a = density::rho_local(6);
    RatFunc b = density::rho_local(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_RatFuncMul)->Unit(benchmark::kMillisecond);

static void BM_ConditionedCount(benchmark::State& state) {
    (void)ff::count_types(2, 3);  // build the shared oracle outside the loop
    for (auto _ : state) {
        // The condition filter re-runs its projective point scans every call.
        benchmark::DoNotOptimize(ff::count_types(2, 3, 3));
    }
}
BENCHMARK(BM_ConditionedCount)->Unit(benchmark::kMillisecond);

static void BM_TruncatedProduct(benchmark::State& state) {
    (void)density::rho_local(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(euler::truncated_product(4, 1000));
    }
}
BENCHMARK(BM_TruncatedProduct)->Unit(benchmark::kMillisecond);

static void BM_PadicSampler(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(ff::padic_binary_cubic_sample(3, 2000, 40, 1));
    }
}
BENCHMARK(BM_PadicSampler)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
