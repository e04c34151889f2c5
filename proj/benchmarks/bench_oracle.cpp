#include "susylab/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace susylab;

namespace {

void BM_SolveSpectrum(benchmark::State& state) {
    ParamRecord p;
    p.a = -3.0;
    p.omega = 1.0;
    const auto sp = SuperpotentialInstance::make("oscillator-3d", ClassTag::IIIA, p);
    const GridSpec grid{1e-3, 20.0, static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(solve_spectrum(sp, Partner::Minus, grid, 4));
}
BENCHMARK(BM_SolveSpectrum)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

} // namespace
