#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cfw/word.hpp"

namespace fixtures {

using cfw::FiniteWord;
using cfw::Letter;

/// Fibonacci word over {1,2}: fixed point of 1 -> 12, 2 -> 1.
inline FiniteWord fibonacci_word(std::size_t n) {
  std::vector<Letter> word = {1};
  while (word.size() < n) {
    std::vector<Letter> next;
    next.reserve(2 * word.size());
    for (Letter x : word) {
      if (x == 1) {
        next.push_back(1);
        next.push_back(2);
      } else {
        next.push_back(1);
      }
    }
    word = std::move(next);
  }
  word.resize(n);
  return FiniteWord(std::move(word));
}

inline FiniteWord random_word(std::mt19937_64& rng, std::size_t len,
                              Letter max_letter) {
  std::uniform_int_distribution<Letter> dist(1, max_letter);
  std::vector<Letter> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(dist(rng));
  return FiniteWord(std::move(out));
}

/// Periodic word with a random primitive-ish period, letters in {1..4}.
inline FiniteWord random_periodic_word(std::mt19937_64& rng,
                                       std::size_t period_max,
                                       std::size_t total_len) {
  std::uniform_int_distribution<std::size_t> plen(1, period_max);
  const std::size_t period = plen(rng);
  const FiniteWord base = random_word(rng, period, 4);
  std::vector<Letter> out;
  out.reserve(total_len);
  while (out.size() < total_len) {
    for (Letter x : base) {
      if (out.size() == total_len) break;
      out.push_back(x);
    }
  }
  return FiniteWord(std::move(out));
}

}  // namespace fixtures
