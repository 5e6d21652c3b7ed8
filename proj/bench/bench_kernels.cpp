// Parallel kernels against their serial references.

#include "unifconc/asymptotics.hpp"
#include "unifconc/exactdist.hpp"
#include "unifconc/quadrature.hpp"
#include "unifconc/spectral.hpp"
#include "unifconc/sweep.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

using namespace unifconc;

namespace {

void BM_Convolve(benchmark::State& state)
{
    const ExactDensity a = power({10, state.range(0)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(convolve(a, a));
    }
}
BENCHMARK(BM_Convolve)->Arg(50)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_ConvolveSerial(benchmark::State& state)
{
    const ExactDensity a = power({10, state.range(0)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(convolve_serial(a, a));
    }
}
BENCHMARK(BM_ConvolveSerial)->Arg(50)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_Power(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(power({40, state.range(0)}));
    }
}
BENCHMARK(BM_Power)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

// The sweep's alternative to powering: one sliding-window step per n.
void BM_StepToPower(benchmark::State& state)
{
    for (auto _ : state) {
        ExactDensity d = uniform_density(40);
        for (long n = 2; n <= state.range(0); ++n) {
            d = convolve_with_uniform(d);
        }
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_StepToPower)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

const Integrand inversion = [](double t) { return std::pow(charfn_kernel(10, t), 20) * std::cos(7 * t); };

void BM_Panels(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_panels(inversion, 0.0, std::numbers::pi / 2, state.range(0)));
    }
}
BENCHMARK(BM_Panels)->Arg(64)->Arg(1024);

void BM_PanelsSerial(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_panels_serial(inversion, 0.0, std::numbers::pi / 2, state.range(0)));
    }
}
BENCHMARK(BM_PanelsSerial)->Arg(64)->Arg(1024);

void BM_SupDev(benchmark::State& state)
{
    const ExactDensity d = power({2, state.range(0)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(local_clt_sup_dev(d));
    }
}
BENCHMARK(BM_SupDev)->Arg(400)->Arg(4000);

void BM_SupDevSerial(benchmark::State& state)
{
    const ExactDensity d = power({2, state.range(0)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(local_clt_sup_dev_serial(d));
    }
}
BENCHMARK(BM_SupDevSerial)->Arg(400)->Arg(4000);

// Theorem sweep over ell 2..20, n 1..200 with the given worker count.
void BM_Sweep(benchmark::State& state)
{
    SweepConfig c;
    c.ell_range = {2, 20};
    c.n_range = {1, 200};
    c.checks = {Check::main};
    c.parallelism = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_sweep(c));
    }
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
