#include <benchmark/benchmark.h>

#include "cfw/automatic.hpp"
#include "cfw/factor_index.hpp"

namespace {

void BM_factor_index_build(benchmark::State& state) {
  const auto word = cfw::thue_morse_dfao().prefix(
      static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfw::FactorIndex(word));
  }
}
BENCHMARK(BM_factor_index_build)->Range(256, 8192);

void BM_complexity_profile(benchmark::State& state) {
  const auto word = cfw::period_doubling_dfao().prefix(4096);
  const cfw::FactorIndex idx(word);
  for (auto _ : state) {
    std::size_t total = 0;
    for (std::size_t n = 1; n <= static_cast<std::size_t>(state.range(0)); ++n) {
      total += idx.distinct_factor_count(n);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_complexity_profile)->Range(16, 256);

void BM_first_repeat(benchmark::State& state) {
  const auto word = cfw::thue_morse_dfao().prefix(4096);
  const cfw::FactorIndex idx(word);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        idx.first_repeat(static_cast<std::size_t>(state.range(0)), 1));
  }
}
BENCHMARK(BM_first_repeat)->Range(4, 256);

}  // namespace
