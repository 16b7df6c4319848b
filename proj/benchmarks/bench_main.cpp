#include <benchmark/benchmark.h>

#include "modkit/dims.hpp"
#include "modkit/discforms.hpp"
#include "modkit/etaq.hpp"
#include "modkit/gamma0.hpp"
#include "modkit/qseries.hpp"
#include "modkit/reflective.hpp"
#include "modkit/weil.hpp"

using namespace modkit;

static void bm_gamma0_data(benchmark::State& st) {
    for (auto _ : st)
        for (i64 N = 1; N <= st.range(0); ++N) benchmark::DoNotOptimize(gamma0_data(N));
}
BENCHMARK(bm_gamma0_data)->Arg(60)->Arg(240);

static void bm_enumerate_symbols(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_symbols(0, st.range(0)));
}
BENCHMARK(bm_enumerate_symbols)->Arg(100)->Arg(500);

static void bm_weil_suite(benchmark::State& st) {
    const auto g = realize_group(GenusSymbol::parse(st.range(0) == 0 ? "2^{+2}_6 3^{-1}" : "5^{-1} 7^{+1}"));
    for (auto _ : st) benchmark::DoNotOptimize(weil_suite(g, {5, 5, 1}));
}
BENCHMARK(bm_weil_suite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void bm_milgram(benchmark::State& st) {
    const auto g = realize_group(GenusSymbol::parse("2^{+2}_6 3^{-1} 5^{+1}"));
    for (auto _ : st) benchmark::DoNotOptimize(milgram_signature(g));
}
BENCHMARK(bm_milgram);

static void bm_classify_bounded(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(classify_bounded(st.range(0), Rational(1)));
}
BENCHMARK(bm_classify_bounded)->Arg(4)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void bm_eta_expand(benchmark::State& st) {
    const auto e = EtaQuotient::parse(12, "2^{3}6^{3}");
    for (auto _ : st) benchmark::DoNotOptimize(etaq_expand_infinity(e, Rational(static_cast<long>(st.range(0)))));
}
BENCHMARK(bm_eta_expand)->Arg(25)->Arg(200);

static void bm_dimensions(benchmark::State& st) {
    for (auto _ : st)
        for (i64 N = 1; N <= 24; ++N)
            for (const auto& c : admissible_characters(N))
                for (int tk = N % 4 ? 4 : 3; tk <= 24; tk += N % 4 ? 2 : 1) benchmark::DoNotOptimize(dim_any_weight({N, make_rational(tk, 2), c}));
}
BENCHMARK(bm_dimensions)->Unit(benchmark::kMillisecond);

static void bm_search(benchmark::State& st) {
    SearchOptions opt;
    opt.max_order = st.range(0);
    opt.threads = 1;
    for (auto _ : st) benchmark::DoNotOptimize(search(5, -16, 0, opt));
}
BENCHMARK(bm_search)->Arg(5)->Arg(25)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
