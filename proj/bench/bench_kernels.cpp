// Serial reference kernels against their OpenMP counterparts.
// On a single core the pairs should run at about the same speed; the parallel
// paths only pay off with OMP_NUM_THREADS > 1.

#include <benchmark/benchmark.h>

#include "polya/borel.hpp"
#include "polya/loop_census.hpp"
#include "polya/walk_sim.hpp"

using namespace polya;

namespace {

void BM_BruteForceLoops_Serial(benchmark::State& state)
{
    const Dimension d(3);
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::brute_force_loop_count(d, n));
}

void BM_BruteForceLoops_Parallel(benchmark::State& state)
{
    const Dimension d(3);
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_loop_count(d, n));
}

void BM_QIntegral_Serial(benchmark::State& state)
{
    const Dimension d(static_cast<int>(state.range(0)));
    const auto cfg = QuadratureConfig::defaults_for(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::q_integral(1.0, d, cfg));
}

void BM_QIntegral_Parallel(benchmark::State& state)
{
    const Dimension d(static_cast<int>(state.range(0)));
    const auto cfg = QuadratureConfig::defaults_for(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(q_integral(1.0, d, cfg));
}

WalkConfig mc_config() { return WalkConfig(Dimension(3), 10000, 2000, 20240607); }

void BM_MonteCarlo_Serial(benchmark::State& state)
{
    const auto cfg = mc_config();
    for (auto _ : state)
        benchmark::DoNotOptimize(serial::estimate_return_probability(cfg));
}

void BM_MonteCarlo_Parallel(benchmark::State& state)
{
    const auto cfg = mc_config();
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_return_probability(cfg));
}

} // namespace

BENCHMARK(BM_BruteForceLoops_Serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceLoops_Parallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QIntegral_Serial)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QIntegral_Parallel)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarlo_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarlo_Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
