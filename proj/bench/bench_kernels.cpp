// Row reduction is the one kernel hot enough to parallelize; filtrations,
// socles, colons and kernels all ride on it. The serial routine is kept as
// the oracle the tests compare against, and this target measures what the
// OpenMP fan-out buys (or costs) per shape and per coefficient field.
//
//   cmake --build build --target loewy_bench && ./build/loewy_bench
//
// Square prime-field matrices show the scaling story; the wide low-rank shape
// mirrors the degreewise multiplication matrices the library actually feeds;
// the rational case is where entry growth, not arithmetic width, dominates.

#include <benchmark/benchmark.h>

#include "loewy/matrix.hpp"
#include "loewy/rng.hpp"

using namespace loewy;

namespace {

ExactMatrix prime_square(std::size_t n, std::uint64_t seed) {
    Field f = Field::prime(32003);
    ExactMatrix m(n, n, f);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Scalar::from_int(f, static_cast<long long>(rng.below(32003)));
    return m;
}

// rows >> rank: every pivot step updates a tall block of dependent rows
ExactMatrix prime_wide(std::size_t rank, std::size_t rows, std::size_t cols,
                       std::uint64_t seed) {
    Field f = Field::prime(32003);
    Rng rng(seed);
    ExactMatrix gen(rank, cols, f);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            gen.at(i, j) = Scalar::from_int(f, static_cast<long long>(rng.below(32003)));
    ExactMatrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < rank; ++k) {
            Scalar c = Scalar::from_int(f, static_cast<long long>(rng.below(32003)));
            for (std::size_t j = 0; j < cols; ++j)
                m.at(i, j) = m.at(i, j) + c * gen.at(k, j);
        }
    return m;
}

ExactMatrix rational_square(std::size_t n, std::uint64_t seed) {
    Field f = Field::rationals();
    ExactMatrix m(n, n, f);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Scalar::from_rational(f, rng.range(-9, 9), rng.range(1, 9));
    return m;
}

void bm_serial_prime(benchmark::State& state) {
    ExactMatrix m = prime_square(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(rref_serial(m).rank);
}

void bm_parallel_prime(benchmark::State& state) {
    ExactMatrix m = prime_square(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}

void bm_serial_wide(benchmark::State& state) {
    std::size_t r = static_cast<std::size_t>(state.range(0));
    ExactMatrix m = prime_wide(r, 8 * r, 2 * r, 7);
    for (auto _ : state) benchmark::DoNotOptimize(rref_serial(m).rank);
}

void bm_parallel_wide(benchmark::State& state) {
    std::size_t r = static_cast<std::size_t>(state.range(0));
    ExactMatrix m = prime_wide(r, 8 * r, 2 * r, 7);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}

void bm_serial_rational(benchmark::State& state) {
    ExactMatrix m = rational_square(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(rref_serial(m).rank);
}

void bm_parallel_rational(benchmark::State& state) {
    ExactMatrix m = rational_square(static_cast<std::size_t>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}

BENCHMARK(bm_serial_prime)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_parallel_prime)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_serial_wide)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_parallel_wide)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_serial_rational)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_parallel_rational)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
