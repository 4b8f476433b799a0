#include <benchmark/benchmark.h>

#include "degenstir/degenstir.hpp"

using namespace degenstir;

namespace {

void BM_series_multiply(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    const EgfSeries a = build_deg_power(MultiPoly::var_x(), order);
    const EgfSeries b = build_deg_power(MultiPoly(1), order);
    for (auto _ : state) {
        auto c = egf_mul(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_series_multiply)->Arg(8)->Arg(16)->Arg(32);

void BM_series_inverse(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    const EgfSeries denom = EgfSeries::build(order, [](unsigned n) {
        return deg_falling(MultiPoly(1), n + 1) / Rational(static_cast<long long>(n) + 1);
    });
    for (auto _ : state) {
        auto inv = egf_inverse(denom);
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_series_inverse)->Arg(8)->Arg(16)->Arg(32);

void BM_degenerate_stirling_closed(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        for (unsigned k = 0; k <= n; ++k) {
            auto p = deg_stirling2(n, k);
            benchmark::DoNotOptimize(p);
        }
}
BENCHMARK(BM_degenerate_stirling_closed)->Arg(6)->Arg(10)->Arg(12);

void BM_degenerate_stirling_via_s1(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        for (unsigned k = 0; k <= n; ++k) {
            auto p = deg_stirling2_via_s1(n, k);
            benchmark::DoNotOptimize(p);
        }
}
BENCHMARK(BM_degenerate_stirling_via_s1)->Arg(6)->Arg(10)->Arg(12);

void BM_degenerate_stirling_series(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        for (unsigned k = 0; k <= n; ++k) {
            auto col = deg_stirling2_gf(n, k);
            benchmark::DoNotOptimize(col);
        }
}
BENCHMARK(BM_degenerate_stirling_series)->Arg(6)->Arg(10)->Arg(12);

void BM_whitney_grid(benchmark::State& state) {
    const unsigned n_max = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        for (unsigned m = 1; m <= 3; ++m)
            for (unsigned r = 0; r <= 2; ++r)
                for (unsigned n = 0; n <= n_max; ++n)
                    for (unsigned k = 0; k <= n; ++k) {
                        auto w = whitney(n, k, {m, r});
                        benchmark::DoNotOptimize(w);
                    }
}
BENCHMARK(BM_whitney_grid)->Arg(8)->Arg(10);

void BM_degenerate_whitney(benchmark::State& state) {
    const unsigned n_max = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        for (unsigned n = 0; n <= n_max; ++n)
            for (unsigned k = 0; k <= n; ++k) {
                auto w = deg_whitney(n, k, {2, 1});
                benchmark::DoNotOptimize(w);
            }
}
BENCHMARK(BM_degenerate_whitney)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
