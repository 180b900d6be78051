#include <benchmark/benchmark.h>

#include <random>

#include "cfw/automatic.hpp"
#include "cfw/contfrac.hpp"
#include "cfw/sequence.hpp"

namespace {

cfw::FiniteWord random_word(std::size_t len, cfw::Letter max_letter) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<cfw::Letter> dist(1, max_letter);
  std::vector<cfw::Letter> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(dist(rng));
  return cfw::FiniteWord(std::move(out));
}

void BM_convergents_small_letters(benchmark::State& state) {
  const auto word = random_word(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfw::convergents(word));
  }
}
BENCHMARK(BM_convergents_small_letters)->Range(64, 4096);

void BM_convergents_large_letters(benchmark::State& state) {
  const auto word =
      random_word(static_cast<std::size_t>(state.range(0)), 1000000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfw::convergents(word));
  }
}
BENCHMARK(BM_convergents_large_letters)->Range(64, 1024);

void BM_periodic_value(benchmark::State& state) {
  const auto pre = random_word(4, 5);
  const auto per = random_word(static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfw::periodic_value(pre, per));
  }
}
BENCHMARK(BM_periodic_value)->Range(2, 64);

void BM_enclose_continuations(benchmark::State& state) {
  const auto word = cfw::thue_morse_dfao().prefix(
      static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cfw::enclose_continuations(word));
  }
}
BENCHMARK(BM_enclose_continuations)->Range(256, 4096);

}  // namespace
