#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "ternary5/digits.hpp"
#include "ternary5/scan.hpp"

using namespace ternary5;

namespace {

// Representative magnitudes: the largest value in the published scan range,
// a deep exponent from the solver horizon, and a 1009-bit stress value.
BigNat scan_top() { return pow(BigNat{6000002u}, 5); }  // ~115 bits
BigNat solver_top() { return pow(BigNat{3u}, 200); }    // ~317 bits
BigNat kilobit() {
    std::mt19937_64 rng(1234);
    BigNat v{1u};
    for (int i = 0; i < 16; ++i) v = v * pow(BigNat{2u}, 63) + BigNat{rng() >> 1};
    return v;
}

}  // namespace

static void BM_pow_n5(benchmark::State& state) {
    const BigNat n{6000002u};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pow(n, 5));
    }
}
BENCHMARK(BM_pow_n5);

static void BM_gamma_reference(benchmark::State& state, const BigNat& n) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_reference(n, 3));
    }
}
BENCHMARK_CAPTURE(BM_gamma_reference, scan_top, scan_top());
BENCHMARK_CAPTURE(BM_gamma_reference, solver_top, solver_top());
BENCHMARK_CAPTURE(BM_gamma_reference, kilobit, kilobit());

static void BM_gamma_blocked(benchmark::State& state, const BigNat& n) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(digit_stats(n, 3));
    }
}
BENCHMARK_CAPTURE(BM_gamma_blocked, scan_top, scan_top());
BENCHMARK_CAPTURE(BM_gamma_blocked, solver_top, solver_top());
BENCHMARK_CAPTURE(BM_gamma_blocked, kilobit, kilobit());

static void BM_evaluate_point(benchmark::State& state) {
    uint64_t j = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_point(j, 5, 3));
        j = j % 1000000 + 1;
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_evaluate_point);

static void BM_integer_root5(benchmark::State& state) {
    const BigNat n = solver_top() + pow(BigNat{3u}, 120) + BigNat{2u};
    for (auto _ : state) {
        benchmark::DoNotOptimize(integer_root(n, 5));
    }
}
BENCHMARK(BM_integer_root5);

static void BM_scan_engine(benchmark::State& state) {
    const auto out = std::filesystem::temp_directory_path() / "ternary5_bench.csv";
    ScanConfig config;
    config.j_start = 1;
    config.j_end = 20000;
    config.worker_count = static_cast<unsigned>(state.range(0));
    config.output_path = out.string();
    for (auto _ : state) {
        scan(config);
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) *
                            static_cast<int64_t>(config.j_end - config.j_start + 1));
    std::filesystem::remove(out);
}
BENCHMARK(BM_scan_engine)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
