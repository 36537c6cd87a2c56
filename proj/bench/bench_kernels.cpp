#include "pf/bundle.hpp"
#include "pf/kernels.hpp"
#include "pf/numeric.hpp"
#include "pf/sp4.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace pf;

namespace {

std::vector<Constant> random_constants(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-1000, 1000);
    std::vector<Constant> v;
    for (int i = 0; i < n; ++i) v.push_back(Constant::monomial(rat(d(rng), 997), d(rng) % 3) + Constant(rat(d(rng), 13)));
    return v;
}

void BM_Convolve(benchmark::State& st, bool parallel) {
    int n = static_cast<int>(st.range(0));
    auto a = random_constants(n, 1), b = random_constants(n, 2);
    for (auto _ : st)
        benchmark::DoNotOptimize(parallel ? kernels::convolve_parallel(a, b, n) : kernels::convolve_serial(a, b, n));
    st.SetComplexityN(n);
}

void BM_Transport(benchmark::State& st, bool parallel) {
    static const ThetaOperator op = load_bundle("quintic").op;
    Prec prec = static_cast<Prec>(st.range(0));
    Complex base(Q(1, 6250), Q(0), prec);
    Path loop = loop_around(Complex(Q(1, 3125), Q(0), prec), base, singular_points(op, prec));
    ContinuationOptions opt;
    opt.prec = prec;
    opt.parallel = parallel;
    for (auto _ : st) benchmark::DoNotOptimize(transport_matrix(op, loop, opt));
}

void BM_BoxCensus(benchmark::State& st, bool parallel) {
    for (auto _ : st) benchmark::DoNotOptimize(box_census(static_cast<int>(st.range(0)), parallel));
}

void BM_GeneratorCheck(benchmark::State& st, bool parallel) {
    for (auto _ : st) benchmark::DoNotOptimize(generator_equivalence(st.range(0), 1, 50, parallel));
}

void BM_Witness(benchmark::State& st, bool parallel) {
    int m = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(witness_census(m, m, parallel));
}

void BM_Klemm(benchmark::State& st, bool parallel) {
    for (auto _ : st) benchmark::DoNotOptimize(klemm_random_trials(static_cast<int>(st.range(0)), 128, 42, parallel));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Convolve, serial, false)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Convolve, parallel, true)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Transport, serial, false)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Transport, parallel, true)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_BoxCensus, serial, false)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BoxCensus, parallel, true)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_GeneratorCheck, serial, false)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GeneratorCheck, parallel, true)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Witness, serial, false)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Witness, parallel, true)->Arg(40)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Klemm, serial, false)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Klemm, parallel, true)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
