#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "cosetcover/abgroup.hpp"
#include "cosetcover/arith.hpp"
#include "cosetcover/characters.hpp"
#include "cosetcover/cyclotomic.hpp"
#include "cosetcover/search.hpp"
#include "cosetcover/zcover.hpp"

using namespace cosetcover;

namespace {

zcover::ZCoverSystem sample_zcover() {
    return zcover::ZCoverSystem({{0, 2}, {1, 4}, {3, 8}, {7, 8}});
}

void bm_zcover_bounds_all(benchmark::State& state) {
    auto sys = zcover::build_extremal_zcover(static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(zcover::check_zcover_bounds_all(sys, 1));
}
BENCHMARK(bm_zcover_bounds_all)->Arg(9)->Arg(13)->Arg(17);

void bm_zcover_exp_sums(benchmark::State& state) {
    auto sys = sample_zcover();
    std::map<std::size_t, std::int64_t> weights{{1, 1}, {2, 3}, {3, 5}};
    auto alphas = zcover::realized_alphas(sys, 0, weights);
    for (auto _ : state)
        for (const auto& alpha : alphas)
            benchmark::DoNotOptimize(zcover::exponential_sums(sys, {0, weights, alpha}));
}
BENCHMARK(bm_zcover_exp_sums);

void bm_all_subgroups(benchmark::State& state) {
    abgroup::AbelianGroup g({2, 2, 2, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(abgroup::all_subgroups(g));
}
BENCHMARK(bm_all_subgroups);

void bm_sweep(benchmark::State& state) {
    search::SearchConfig cfg{.group = abgroup::AbelianGroup({2, 2, 2}),
                             .max_k = 3,
                             .m = 1,
                             .jobs = static_cast<int>(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(search::verify_bounds_exhaustively(cfg));
}
BENCHMARK(bm_sweep)->Arg(1)->Arg(4);

void bm_min_proper_cover(benchmark::State& state) {
    abgroup::AbelianGroup g({2, 2, 2, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(search::min_proper_coset_cover(g));
}
BENCHMARK(bm_min_proper_cover);

void bm_min_multiset(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(search::min_multiset_for_divisibility(state.range(0)));
}
BENCHMARK(bm_min_multiset)->Arg(24)->Arg(29)->Arg(30);

void bm_fourier(benchmark::State& state) {
    abgroup::AbelianGroup g({16});
    auto subs = abgroup::all_subgroups(g);
    const abgroup::Subgroup* triv = nullptr;
    for (const auto& h : subs)
        if (h.size() == 1)
            triv = &h;
    std::vector<abgroup::Coset> cosets;
    for (abgroup::elem_t x = 0; x < g.order(); ++x)
        cosets.emplace_back(*triv, x);
    abgroup::CosetSystem sys(g, cosets);
    for (auto _ : state)
        benchmark::DoNotOptimize(characters::fourier_coefficients(sys, 1, 0));
}
BENCHMARK(bm_fourier);

void bm_mycielski(benchmark::State& state) {
    for (auto _ : state)
        for (std::int64_t n = 2; n <= 10'000; ++n)
            benchmark::DoNotOptimize(arith::mycielski_f(n));
}
BENCHMARK(bm_mycielski);

} // namespace

BENCHMARK_MAIN();
