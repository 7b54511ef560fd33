#include <benchmark/benchmark.h>

#include <vector>

#include "zeno/bessel.hpp"
#include "zeno/direct.hpp"
#include "zeno/floquet.hpp"
#include "zeno/scattering.hpp"
#include "zeno/zeno_decay.hpp"

using namespace zeno;

static void BM_BesselSequence(benchmark::State& state) {
    const int nmax = static_cast<int>(state.range(0));
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_j_sequence(nmax, x));
        x += 1e-3;
    }
}
BENCHMARK(BM_BesselSequence)->Arg(10)->Arg(40);

static void BM_BesselZero(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(bessel_zero(0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BesselZero)->Arg(1)->Arg(5);

static void BM_FloquetSpectrum(benchmark::State& state) {
    const ModelParams p = reference_params(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(floquet_spectrum(p, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FloquetSpectrum)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_FloquetPropagate(benchmark::State& state) {
    const ModelParams p = reference_params(1.0);
    FloquetPropagator prop(p, 8, default_slice(p));
    const auto s0 = initial_excited(p);
    for (auto _ : state) benchmark::DoNotOptimize(prop.propagate(s0, 0.0, 640));
}
BENCHMARK(BM_FloquetPropagate)->Unit(benchmark::kMillisecond);

static void BM_DirectRK4(benchmark::State& state) {
    const ModelParams p = reference_params(1.0);
    const auto s0 = initial_excited(p);
    const double dt = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(direct_propagate(p, s0, 20.0, dt));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(20.0 / dt));
}
BENCHMARK(BM_DirectRK4)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_DecayRate(benchmark::State& state) {
    const ModelParams p = reference_params(1.0);
    const double t = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(decay_rate(p, t));
}
BENCHMARK(BM_DecayRate)->Arg(20)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_Wavepacket(benchmark::State& state) {
    const ModelParams p = reference_params(0.0);
    for (auto _ : state) benchmark::DoNotOptimize(wavepacket_transmission(p, 1.0471975511965976));
}
BENCHMARK(BM_Wavepacket)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
