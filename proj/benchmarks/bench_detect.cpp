#include <benchmark/benchmark.h>

#include "cfw/automatic.hpp"
#include "cfw/criteria.hpp"
#include "cfw/sequence.hpp"

namespace {

void BM_detect_chain_thue_morse(benchmark::State& state) {
  const cfw::AutomaticSource tm{cfw::thue_morse_dfao()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfw::detect_chain(
        tm, cfw::DetectKind::either,
        static_cast<std::size_t>(state.range(0)), 16));
  }
}
BENCHMARK(BM_detect_chain_thue_morse)->Range(256, 2048)->Unit(benchmark::kMillisecond);

void BM_pigeonhole_extract(benchmark::State& state) {
  const cfw::AutomaticSource pd{cfw::period_doubling_dfao()};
  const cfw::FiniteWord prefix = pd.prefix(
      5 * static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfw::pigeonhole_extract(
        prefix, static_cast<std::size_t>(state.range(0)), 4));
  }
}
BENCHMARK(BM_pigeonhole_extract)->Range(8, 128);

}  // namespace
