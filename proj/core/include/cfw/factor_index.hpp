#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cfw/word.hpp"

namespace cfw {

using PositionPair = std::pair<std::size_t, std::size_t>;

/// Exact factor queries over one immutable word.
///
/// Window candidates are filtered through two independent rolling hashes and
/// every candidate match is verified letter-by-letter, so answers are exact.
/// Distinct-factor counts come from a suffix automaton built at construction.
/// Queries never mutate, so shared read-only use is safe.
class FactorIndex {
 public:
  explicit FactorIndex(FiniteWord word);

  const FiniteWord& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }

  /// Count of distinct length-n factors, 1 <= n <= |word|.
  std::size_t distinct_factor_count(std::size_t n) const;

  /// All 0-based occurrence positions of `factor`, ascending.
  std::vector<std::size_t> occurrences(std::span<const Letter> factor) const;

  /// Smallest (i, j) with i < j, j >= i + gap and equal length-len windows.
  /// gap == len asks for non-overlapping occurrences, gap == 1 for any two.
  std::optional<PositionPair> first_repeat(std::size_t len,
                                           std::size_t gap) const;

  /// Smallest (i, j) with j >= i + len and window(j) == mirror(window(i)).
  std::optional<PositionPair> first_mirror_pair(std::size_t len) const;

  /// Exact equality of two length-len windows.
  bool window_equal(std::size_t i, std::size_t j, std::size_t len) const;

  /// Exact test: window at j equals the mirror of the window at i.
  bool window_mirror_equal(std::size_t i, std::size_t j,
                           std::size_t len) const;

 private:
  struct HashLine {
    std::vector<std::uint64_t> prefix;  // H[0]=0, H[i+1]=H[i]*B+a[i]
    std::vector<std::uint64_t> power;
  };

  std::uint64_t window_hash(const HashLine& line, std::size_t pos,
                            std::size_t len, int mod) const;
  std::uint64_t window_key(std::size_t pos, std::size_t len) const;
  std::uint64_t mirrored_window_key(std::size_t pos, std::size_t len) const;
  void build_complexity();
  void check_len(std::size_t len) const;

  FiniteWord word_;
  HashLine fwd_[2];
  HashLine rev_[2];
  std::vector<std::size_t> complexity_;  // count for length k at index k
};

/// Count of distinct length-n factors of `prefix` (its subword complexity).
/// A finite prefix yields a lower bound for
/// the complexity of any infinite word extending it, and the count is
/// nondecreasing as the prefix grows.
std::size_t complexity(const FiniteWord& prefix, std::size_t n);

/// Smallest (i, j) with j >= i + len such that the length-len factors at i
/// and j are equal (two disjoint occurrences), if any.
std::optional<PositionPair> find_disjoint_repeat(const FiniteWord& prefix,
                                                 std::size_t len);

/// Smallest (i, j) with j >= i + len such that the factor at j is the mirror
/// image of the factor at i, if any.
std::optional<PositionPair> find_mirror_pair(const FiniteWord& prefix,
                                             std::size_t len);

}  // namespace cfw
