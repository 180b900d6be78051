#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cfw {

/// A partial quotient. Always >= 1.
using Letter = std::uint64_t;

/// A finite word of positive-integer letters, the basic object everything
/// else factors, indexes and evaluates. Immutable after construction;
/// positions are 0-based internally (reports convert to the 1-based
/// convention of continued-fraction indices).
class FiniteWord {
 public:
  FiniteWord() = default;
  FiniteWord(std::initializer_list<Letter> letters);
  explicit FiniteWord(std::vector<Letter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::span<const Letter> view() const noexcept { return letters_; }

  FiniteWord prefix(std::size_t n) const;
  FiniteWord factor(std::size_t pos, std::size_t len) const;
  std::span<const Letter> factor_view(std::size_t pos, std::size_t len) const;

  bool operator==(const FiniteWord&) const = default;

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  std::string str() const;  // "1 2 1 1" style, for diagnostics

 private:
  std::vector<Letter> letters_;
};

FiniteWord concat(const FiniteWord& a, const FiniteWord& b);

/// Reversal; mirror(mirror(w)) == w.
FiniteWord mirror(const FiniteWord& w);

bool is_palindrome(const FiniteWord& w);

/// Z^r: Z repeated [r] times followed by the prefix of Z of length
/// (r - [r])|Z|. Requires z non-empty, r > 0 and r|z| integral.
FiniteWord rational_power(const FiniteWord& z, const mpq_class& r);

/// Z^k for integer k >= 0.
FiniteWord integer_power(const FiniteWord& z, std::uint64_t k);

}  // namespace cfw
