#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "fbw/fully_bordered.hpp"
#include "fbw/harness.hpp"
#include "fbw/word.hpp"

using namespace fbw;

namespace {

Word random_word(std::size_t len, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::string bits(len, '0');
    for (auto& c : bits)
        if (rng() & 1) c = '1';
    return Word::parse(bits);
}

void BM_borders_chain(benchmark::State& state) {
    const Word w = random_word(static_cast<std::size_t>(state.range(0)), 7u);
    for (auto _ : state) benchmark::DoNotOptimize(border_lengths(w));
}
BENCHMARK(BM_borders_chain)->Arg(16)->Arg(64)->Arg(256);

void BM_borders_naive(benchmark::State& state) {
    const Word w = random_word(static_cast<std::size_t>(state.range(0)), 7u);
    for (auto _ : state) benchmark::DoNotOptimize(harness::naive_borders(w));
}
BENCHMARK(BM_borders_naive)->Arg(16)->Arg(64)->Arg(256);

void BM_unbordered_conjugate_count(benchmark::State& state) {
    const Word w = random_word(static_cast<std::size_t>(state.range(0)), 11u);
    for (auto _ : state) benchmark::DoNotOptimize(unbordered_conjugate_count(w));
}
BENCHMARK(BM_unbordered_conjugate_count)->Arg(12)->Arg(18)->Arg(22);

void BM_census_table(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(harness::census_table(n, 1));
}
BENCHMARK(BM_census_table)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_generate_f(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(generate_f(n));
}
BENCHMARK(BM_generate_f)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_derive_trace(benchmark::State& state) {
    const Word u = Word::parse("000010000");
    const Word v = Word::parse("11000011");
    for (auto _ : state) benchmark::DoNotOptimize(derive_trace(u, v));
}
BENCHMARK(BM_derive_trace);

}  // namespace

BENCHMARK_MAIN();
