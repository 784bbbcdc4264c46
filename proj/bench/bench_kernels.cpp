#include <benchmark/benchmark.h>

#include <random>

#include "towerlab/curves/cone.hpp"
#include "towerlab/local/enumerate.hpp"

using namespace towerlab;

namespace {

// A cone in dimension 5 whose last ray needs a high functional to support it.
curves::Cone hard_cone() {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> e(-3, 3);
    std::vector<RatVec> gens;
    for (int g = 0; g < 7; ++g) {
        RatVec v;
        for (int i = 0; i < 5; ++i) v.push_back(Rat(e(rng)));
        gens.push_back(v);
    }
    return curves::Cone(5, gens);
}

void BM_certificate_parallel(benchmark::State& st) {
    auto cone = hard_cone();
    for (auto _ : st) benchmark::DoNotOptimize(curves::extremal_certificate(cone, {6}, st.range(0)));
}

void BM_certificate_serial(benchmark::State& st) {
    auto cone = hard_cone();
    for (auto _ : st) benchmark::DoNotOptimize(curves::extremal_certificate_serial(cone, {6}, st.range(0)));
}

void BM_isotropy_enumeration_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(local::isotropy_enumeration(4, PrimeFieldConfig(3)));
}

void BM_isotropy_enumeration_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(local::isotropy_enumeration_serial(4, PrimeFieldConfig(3)));
}

void BM_fixed_locus_parallel(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(local::fixed_locus_incidence(static_cast<int>(st.range(0)), PrimeFieldConfig(3)));
}

void BM_fixed_locus_serial(benchmark::State& st) {
    for (auto _ : st)
        benchmark::DoNotOptimize(local::fixed_locus_incidence_serial(static_cast<int>(st.range(0)), PrimeFieldConfig(3)));
}

void BM_isotropy_samples_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(local::isotropy_samples(st.range(0), 20240611));
}

void BM_isotropy_samples_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(local::isotropy_samples_serial(st.range(0), 20240611));
}

}  // namespace

BENCHMARK(BM_certificate_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_certificate_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_isotropy_enumeration_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_isotropy_enumeration_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fixed_locus_parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fixed_locus_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_isotropy_samples_parallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_isotropy_samples_serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
