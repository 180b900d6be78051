#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cfw/word.hpp"

namespace cfw {

/// Deterministic finite automaton with output, evaluated on the base-k
/// digits of an index. Term ell is the output of the state reached by
/// feeding the digits of ell most-significant first, without leading zeros,
/// starting from `initial`. Indices start at 1; immutable once built.
class Dfao {
 public:
  /// transitions[s][d] = successor of state s on digit d (d in 0..k-1).
  /// outputs[s] >= 1 so the sequence can serve as partial quotients.
  Dfao(std::uint32_t base, std::size_t initial,
       std::vector<std::vector<std::size_t>> transitions,
       std::vector<Letter> outputs);

  std::uint32_t base() const noexcept { return base_; }
  std::size_t state_count() const noexcept { return outputs_.size(); }
  std::size_t initial_state() const noexcept { return initial_; }
  const std::vector<std::vector<std::size_t>>& transitions() const noexcept {
    return transitions_;
  }
  const std::vector<Letter>& outputs() const noexcept { return outputs_; }

  /// a_ell for ell >= 1.
  Letter term(std::uint64_t ell) const;

  /// The word a_1 ... a_n.
  FiniteWord prefix(std::size_t n) const;

 private:
  std::uint32_t base_;
  std::size_t initial_;
  std::vector<std::vector<std::size_t>> transitions_;
  std::vector<Letter> outputs_;
};

/// Thue-Morse over {1, 2}: a_ell = 1 + (binary digit sum of ell mod 2).
Dfao thue_morse_dfao();

/// Period-doubling over {1, 2}: a_ell = 1 + (2-adic valuation of ell mod 2).
Dfao period_doubling_dfao();

/// Single-state automaton emitting `value` everywhere.
Dfao constant_dfao(Letter value);

}  // namespace cfw
