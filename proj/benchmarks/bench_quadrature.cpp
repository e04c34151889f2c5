#include "susylab/quadrature.hpp"

#include <benchmark/benchmark.h>

using namespace susylab;

namespace {

SuperpotentialInstance oscillator(double l) {
    ParamRecord p;
    p.a = l;
    p.omega = 1.0;
    return SuperpotentialInstance::make("oscillator-3d", ClassTag::IIIA, p);
}

SuperpotentialInstance scarf(double a, double B) {
    ParamRecord p;
    p.a = a;
    p.B = B;
    p.lambda = -1.0;
    return SuperpotentialInstance::make("scarf1", ClassTag::IIIB_neg_lambda, p);
}

void BM_TurningPoints(benchmark::State& state) {
    const auto sp = oscillator(-3);
    for (auto _ : state) benchmark::DoNotOptimize(turning_points(sp, 13.0));
}
BENCHMARK(BM_TurningPoints);

void BM_SwkbIntegral(benchmark::State& state) {
    const auto sp = scarf(1, 2);
    const double E = 11.25;
    const auto tp = turning_points(sp, E);
    for (auto _ : state) benchmark::DoNotOptimize(swkb_integral(sp, E, tp));
}
BENCHMARK(BM_SwkbIntegral);

void BM_VerifyQuantization(benchmark::State& state) {
    const auto sp = oscillator(-3);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_quantization(sp, n));
}
BENCHMARK(BM_VerifyQuantization)->Arg(0)->Arg(7);

} // namespace
