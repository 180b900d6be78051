#include "cfw/automatic.hpp"

#include <array>

#include "cfw/errors.hpp"

namespace cfw {

Dfao::Dfao(std::uint32_t base, std::size_t initial,
           std::vector<std::vector<std::size_t>> transitions,
           std::vector<Letter> outputs)
    : base_(base),
      initial_(initial),
      transitions_(std::move(transitions)),
      outputs_(std::move(outputs)) {
  if (base_ < 2) throw ContractError("automaton base must be >= 2");
  const std::size_t n = outputs_.size();
  if (n == 0) throw ContractError("automaton needs at least one state");
  if (transitions_.size() != n) {
    throw ContractError("transition table has " +
                        std::to_string(transitions_.size()) +
                        " rows for " + std::to_string(n) + " states");
  }
  if (initial_ >= n) throw ContractError("initial state out of range");
  for (std::size_t s = 0; s < n; ++s) {
    if (transitions_[s].size() != base_) {
      throw ContractError("state " + std::to_string(s) + " has " +
                          std::to_string(transitions_[s].size()) +
                          " transitions, expected " + std::to_string(base_));
    }
    for (std::size_t d = 0; d < base_; ++d) {
      if (transitions_[s][d] >= n) {
        throw ContractError("transition from state " + std::to_string(s) +
                            " on digit " + std::to_string(d) +
                            " targets missing state " +
                            std::to_string(transitions_[s][d]));
      }
    }
    if (outputs_[s] < 1) {
      throw ContractError("output of state " + std::to_string(s) +
                          " is " + std::to_string(outputs_[s]) +
                          "; outputs must be >= 1");
    }
  }
}

Letter Dfao::term(std::uint64_t ell) const {
  if (ell < 1) throw ContractError("automatic sequences start at index 1");
  std::array<std::uint32_t, 64> digits;  // base >= 2, so 64 digits suffice
  std::size_t count = 0;
  while (ell > 0) {
    digits[count++] = static_cast<std::uint32_t>(ell % base_);
    ell /= base_;
  }
  std::size_t state = initial_;
  while (count > 0) state = transitions_[state][digits[--count]];
  return outputs_[state];
}

FiniteWord Dfao::prefix(std::size_t n) const {
  if (n < 1) throw ContractError("prefix length must be >= 1");
  std::vector<Letter> out;
  out.reserve(n);
  for (std::uint64_t ell = 1; ell <= n; ++ell) out.push_back(term(ell));
  return FiniteWord(std::move(out));
}

Dfao thue_morse_dfao() {
  // State = parity of the digit sum read so far.
  return Dfao(2, 0, {{0, 1}, {1, 0}}, {1, 2});
}

Dfao period_doubling_dfao() {
  // State = parity of the current trailing-zero run.
  return Dfao(2, 0, {{1, 0}, {0, 0}}, {1, 2});
}

Dfao constant_dfao(Letter value) {
  return Dfao(2, 0, {{0, 0}}, {value});
}

}  // namespace cfw
