#include "cfw/factor_index.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "cfw/errors.hpp"

namespace cfw {

namespace {

constexpr std::uint64_t kMod[2] = {(1ULL << 61) - 1, 1000000000000000003ULL};
constexpr std::uint64_t kBase[2] = {413927966787426823ULL, 911382323629742959ULL};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

FactorIndex::FactorIndex(FiniteWord word) : word_(std::move(word)) {
  const std::size_t n = word_.size();
  for (int m = 0; m < 2; ++m) {
    fwd_[m].prefix.resize(n + 1, 0);
    fwd_[m].power.resize(n + 1, 0);
    rev_[m].prefix.resize(n + 1, 0);
    fwd_[m].power[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      fwd_[m].prefix[i + 1] =
          (mulmod(fwd_[m].prefix[i], kBase[m], kMod[m]) + word_[i] % kMod[m]) %
          kMod[m];
      rev_[m].prefix[i + 1] = (mulmod(rev_[m].prefix[i], kBase[m], kMod[m]) +
                               word_[n - 1 - i] % kMod[m]) %
                              kMod[m];
      fwd_[m].power[i + 1] = mulmod(fwd_[m].power[i], kBase[m], kMod[m]);
    }
  }
  if (n > 0) build_complexity();
}

std::uint64_t FactorIndex::window_hash(const HashLine& line, std::size_t pos,
                                       std::size_t len, int mod) const {
  const std::uint64_t m = kMod[mod];
  const std::uint64_t scaled =
      mulmod(line.prefix[pos], fwd_[mod].power[len], m);
  return (line.prefix[pos + len] + m - scaled) % m;
}

std::uint64_t FactorIndex::window_key(std::size_t pos, std::size_t len) const {
  const std::uint64_t h0 = window_hash(fwd_[0], pos, len, 0);
  const std::uint64_t h1 = window_hash(fwd_[1], pos, len, 1);
  return h0 * 0x9E3779B97F4A7C15ULL ^ h1;
}

std::uint64_t FactorIndex::mirrored_window_key(std::size_t pos,
                                               std::size_t len) const {
  // Key of mirror(word[pos, pos+len)) == key of the reversed word's window.
  const std::size_t rpos = word_.size() - pos - len;
  const std::uint64_t h0 = window_hash(rev_[0], rpos, len, 0);
  const std::uint64_t h1 = window_hash(rev_[1], rpos, len, 1);
  return h0 * 0x9E3779B97F4A7C15ULL ^ h1;
}

void FactorIndex::check_len(std::size_t len) const {
  if (len < 1 || len > word_.size()) {
    throw ContractError("factor length " + std::to_string(len) +
                        " out of range [1, " + std::to_string(word_.size()) +
                        "]");
  }
}

bool FactorIndex::window_equal(std::size_t i, std::size_t j,
                               std::size_t len) const {
  for (int m = 0; m < 2; ++m) {
    if (window_hash(fwd_[m], i, len, m) != window_hash(fwd_[m], j, len, m))
      return false;
  }
  const auto& a = word_.letters();
  return std::equal(a.begin() + i, a.begin() + i + len, a.begin() + j);
}

bool FactorIndex::window_mirror_equal(std::size_t i, std::size_t j,
                                      std::size_t len) const {
  const std::size_t ri = word_.size() - i - len;
  for (int m = 0; m < 2; ++m) {
    if (window_hash(rev_[m], ri, len, m) != window_hash(fwd_[m], j, len, m))
      return false;
  }
  const auto& a = word_.letters();
  for (std::size_t t = 0; t < len; ++t) {
    if (a[j + t] != a[i + len - 1 - t]) return false;
  }
  return true;
}

std::vector<std::size_t> FactorIndex::occurrences(
    std::span<const Letter> factor) const {
  if (factor.empty() || factor.size() > word_.size()) return {};
  const std::size_t len = factor.size();
  std::uint64_t target[2] = {0, 0};
  for (int m = 0; m < 2; ++m) {
    for (Letter x : factor)
      target[m] = (mulmod(target[m], kBase[m], kMod[m]) + x % kMod[m]) % kMod[m];
  }
  std::vector<std::size_t> out;
  const auto& a = word_.letters();
  for (std::size_t i = 0; i + len <= word_.size(); ++i) {
    if (window_hash(fwd_[0], i, len, 0) != target[0]) continue;
    if (window_hash(fwd_[1], i, len, 1) != target[1]) continue;
    if (std::equal(factor.begin(), factor.end(), a.begin() + i))
      out.push_back(i);
  }
  return out;
}

std::optional<PositionPair> FactorIndex::first_repeat(std::size_t len,
                                                      std::size_t gap) const {
  check_len(len);
  const std::size_t count = word_.size() - len + 1;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> groups;
  groups.reserve(count * 2);
  for (std::size_t i = 0; i < count; ++i)
    groups[window_key(i, len)].push_back(i);
  for (std::size_t i = 0; i < count; ++i) {
    const auto it = groups.find(window_key(i, len));
    const auto& positions = it->second;
    auto lo = std::lower_bound(positions.begin(), positions.end(), i + gap);
    for (; lo != positions.end(); ++lo) {
      if (window_equal(i, *lo, len)) return PositionPair{i, *lo};
    }
  }
  return std::nullopt;
}

std::optional<PositionPair> FactorIndex::first_mirror_pair(
    std::size_t len) const {
  check_len(len);
  const std::size_t count = word_.size() - len + 1;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> groups;
  groups.reserve(count * 2);
  for (std::size_t i = 0; i < count; ++i)
    groups[window_key(i, len)].push_back(i);
  for (std::size_t i = 0; i < count; ++i) {
    const auto it = groups.find(mirrored_window_key(i, len));
    if (it == groups.end()) continue;
    const auto& positions = it->second;
    auto lo = std::lower_bound(positions.begin(), positions.end(), i + len);
    for (; lo != positions.end(); ++lo) {
      if (window_mirror_equal(i, *lo, len)) return PositionPair{i, *lo};
    }
  }
  return std::nullopt;
}

namespace {

// Suffix automaton over an unbounded alphabet; transitions are ordered maps.
struct SuffixAutomaton {
  struct State {
    std::map<Letter, int> next;
    int link = -1;
    std::size_t len = 0;
  };
  std::vector<State> states;
  int last = 0;

  explicit SuffixAutomaton(const FiniteWord& w) {
    states.reserve(2 * w.size() + 2);
    states.emplace_back();
    for (Letter c : w) append(c);
  }

  void append(Letter c) {
    const int cur = static_cast<int>(states.size());
    states.emplace_back();
    states[cur].len = states[last].len + 1;
    int p = last;
    while (p != -1 && !states[p].next.count(c)) {
      states[p].next[c] = cur;
      p = states[p].link;
    }
    if (p == -1) {
      states[cur].link = 0;
    } else {
      const int q = states[p].next[c];
      if (states[p].len + 1 == states[q].len) {
        states[cur].link = q;
      } else {
        const int clone = static_cast<int>(states.size());
        states.push_back(states[q]);
        states[clone].len = states[p].len + 1;
        while (p != -1 && states[p].next[c] == q) {
          states[p].next[c] = clone;
          p = states[p].link;
        }
        states[q].link = clone;
        states[cur].link = clone;
      }
    }
    last = cur;
  }
};

}  // namespace

void FactorIndex::build_complexity() {
  const std::size_t n = word_.size();
  complexity_.assign(n + 2, 0);
  // Each automaton state covers factor lengths (len(link), len]; the count
  // of distinct length-k factors is the number of covering states.
  SuffixAutomaton sa(word_);
  std::vector<std::int64_t> diff(n + 2, 0);
  for (std::size_t s = 1; s < sa.states.size(); ++s) {
    const std::size_t hi = sa.states[s].len;
    const std::size_t lo = sa.states[sa.states[s].link].len + 1;
    diff[lo] += 1;
    diff[hi + 1] -= 1;
  }
  std::int64_t run = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    run += diff[k];
    complexity_[k] = static_cast<std::size_t>(run);
  }
}

std::size_t FactorIndex::distinct_factor_count(std::size_t n) const {
  check_len(n);
  return complexity_[n];
}

std::size_t complexity(const FiniteWord& prefix, std::size_t n) {
  return FactorIndex(prefix).distinct_factor_count(n);
}

std::optional<PositionPair> find_disjoint_repeat(const FiniteWord& prefix,
                                                 std::size_t len) {
  return FactorIndex(prefix).first_repeat(len, len);
}

std::optional<PositionPair> find_mirror_pair(const FiniteWord& prefix,
                                             std::size_t len) {
  return FactorIndex(prefix).first_mirror_pair(len);
}

}  // namespace cfw
