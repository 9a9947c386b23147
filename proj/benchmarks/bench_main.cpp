#include <benchmark/benchmark.h>

#include "modadd/modadd.hpp"

using namespace modadd;

namespace {

AdderVariant variant(const benchmark::State& s) { return s.range(0) ? AdderVariant::KIM_QRCA : AdderVariant::QCLMA; }

void BM_BuildAdder(benchmark::State& s) {
    const BuildSpec spec{static_cast<unsigned>(s.range(1)), variant(s)};
    for (auto _ : s) benchmark::DoNotOptimize(build_adder(spec));
}
BENCHMARK(BM_BuildAdder)->ArgsProduct({{0, 1}, {4, 16, 64, 256}});

void BM_Analyze(benchmark::State& s) {
    const Circuit c = build_adder({static_cast<unsigned>(s.range(1)), variant(s)});
    for (auto _ : s) benchmark::DoNotOptimize(analyze(c));
}
BENCHMARK(BM_Analyze)->ArgsProduct({{0, 1}, {4, 16, 64, 256}});

void BM_ExhaustiveVerify(benchmark::State& s) {
    const auto v = variant(s);
    const auto n = static_cast<unsigned>(s.range(1));
    for (auto _ : s) benchmark::DoNotOptimize(exhaustive_verify(v, n));
}
BENCHMARK(BM_ExhaustiveVerify)->ArgsProduct({{0, 1}, {4, 8, 10}})->Unit(benchmark::kMillisecond);

void BM_NoisyShots(benchmark::State& s) {
    const NoisyRunner r(build_adder({4, variant(s)}));
    const auto noise = NoiseModel::reference();
    std::uint64_t seed = 0;
    for (auto _ : s) benchmark::DoNotOptimize(r.run(10, 2, noise, 1024, seed++));
    s.SetItemsProcessed(s.iterations() * 1024);
}
BENCHMARK(BM_NoisyShots)->Arg(0)->Arg(1);

}  // namespace
BENCHMARK_MAIN();
