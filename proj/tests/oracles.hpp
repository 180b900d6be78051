#pragma once

// Independent oracles for the test suite. Everything here is implemented by
// a different route than the library code it checks: naive scans instead of
// hashing or automata, backward nested-fraction evaluation instead of the
// convergent recurrence, digit arithmetic instead of automaton walks.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cfw/word.hpp"

namespace oracle {

using cfw::FiniteWord;
using cfw::Letter;

inline std::size_t naive_distinct_factors(const FiniteWord& w, std::size_t n) {
  std::set<std::vector<Letter>> seen;
  for (std::size_t i = 0; i + n <= w.size(); ++i) {
    const auto v = w.factor_view(i, n);
    seen.insert(std::vector<Letter>(v.begin(), v.end()));
  }
  return seen.size();
}

inline bool naive_window_equal(const FiniteWord& w, std::size_t i,
                               std::size_t j, std::size_t len) {
  for (std::size_t t = 0; t < len; ++t) {
    if (w[i + t] != w[j + t]) return false;
  }
  return true;
}

inline bool naive_window_mirror(const FiniteWord& w, std::size_t i,
                                std::size_t j, std::size_t len) {
  for (std::size_t t = 0; t < len; ++t) {
    if (w[j + t] != w[i + len - 1 - t]) return false;
  }
  return true;
}

inline std::optional<std::pair<std::size_t, std::size_t>>
naive_disjoint_repeat(const FiniteWord& w, std::size_t len) {
  for (std::size_t i = 0; i + len <= w.size(); ++i) {
    for (std::size_t j = i + len; j + len <= w.size(); ++j) {
      if (naive_window_equal(w, i, j, len)) return {{i, j}};
    }
  }
  return std::nullopt;
}

inline std::optional<std::pair<std::size_t, std::size_t>>
naive_mirror_pair(const FiniteWord& w, std::size_t len) {
  for (std::size_t i = 0; i + len <= w.size(); ++i) {
    for (std::size_t j = i + len; j + len <= w.size(); ++j) {
      if (naive_window_mirror(w, i, j, len)) return {{i, j}};
    }
  }
  return std::nullopt;
}

inline std::vector<std::size_t> naive_occurrences(const FiniteWord& w,
                                                  const FiniteWord& factor) {
  std::vector<std::size_t> out;
  if (factor.empty() || factor.size() > w.size()) return out;
  for (std::size_t i = 0; i + factor.size() <= w.size(); ++i) {
    bool match = true;
    for (std::size_t t = 0; t < factor.size() && match; ++t) {
      match = w[i + t] == factor[t];
    }
    if (match) out.push_back(i);
  }
  return out;
}

/// Backward nested evaluation of [0; a_1, ..., a_L]: fold 1/(a_i + acc).
inline mpq_class nested_fraction_value(const FiniteWord& a) {
  mpq_class acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = mpq_class(1) / (mpq_class(a[i]) + acc);
  }
  return acc;
}

/// Thue-Morse over {1,2} by direct digit-sum parity.
inline Letter thue_morse_term(std::uint64_t ell) {
  int parity = 0;
  for (std::uint64_t x = ell; x > 0; x >>= 1) parity ^= static_cast<int>(x & 1);
  return 1 + static_cast<Letter>(parity);
}

/// Period-doubling over {1,2} by direct 2-adic valuation parity.
inline Letter period_doubling_term(std::uint64_t ell) {
  int v = 0;
  while ((ell & 1) == 0) {
    ell >>= 1;
    ++v;
  }
  return 1 + static_cast<Letter>(v & 1);
}

/// Rational power by brute concatenation and truncation.
inline FiniteWord concat_truncate_power(const FiniteWord& z,
                                        std::uint64_t num, std::uint64_t den) {
  const std::size_t total =
      static_cast<std::size_t>(num * z.size() / den);
  std::vector<Letter> out;
  while (out.size() < total) {
    for (Letter x : z) {
      if (out.size() == total) break;
      out.push_back(x);
    }
  }
  return FiniteWord(std::move(out));
}

}  // namespace oracle
