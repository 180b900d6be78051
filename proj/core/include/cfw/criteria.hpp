#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "cfw/sequence.hpp"
#include "cfw/word.hpp"

namespace cfw {

enum class WitnessKind { repeat, mirror };

/// A dated factorization of a prefix: W U V U (repeat) or W U V mirror(U)
/// (mirror), with the ratio statistics the combinatorial conditions bound.
struct Witness {
  WitnessKind kind = WitnessKind::repeat;
  FiniteWord w_part;
  FiniteWord u_part;
  FiniteWord v_part;
  std::size_t prefix_len = 0;  // |W| + 2|U| + |V|
  mpq_class ratio_v_u;
  mpq_class ratio_w_u;

  /// W U V U or W U V mirror(U); equals the prefix it was extracted from.
  FiniteWord reconstruct() const;
};

Witness make_witness(WitnessKind kind, FiniteWord w, FiniteWord u,
                     FiniteWord v);

/// Advisory screening result: a finite prefix can look eventually periodic,
/// which the combinatorial conditions exclude; it can never certify
/// aperiodicity.
struct PeriodicityFlag {
  bool periodic = false;
  std::size_t preperiod = 0;  // R
  std::size_t period = 0;     // P
};

/// Smallest period P (then smallest preperiod R) with R + 2P <= |w| and
/// w[i] == w[i+P] for every i >= R. Bounded search, advisory only.
std::optional<PeriodicityFlag> detect_eventual_period(const FiniteWord& w);

struct WitnessChain {
  std::vector<Witness> witnesses;  // strictly increasing |U|
  mpq_class sup_ratio_v_u = 0;
  mpq_class sup_ratio_w_u = 0;
  std::vector<mpq_class> epsilon_stream;  // |U| / N per witness
  PeriodicityFlag periodicity;
};

/// Constructive extraction behind the complexity lower bound: in the prefix
/// of length (c+1) n some length-n block occurs twice; turn the earliest
/// such pair into a repeat witness. Disjoint occurrences give U = X_n with
/// (|V|+|W|)/|U| <= c; overlapping ones give U = X'^x (a rational-power
/// normalization) with |U| >= n/3 and |W|/|U| <= 3c+1. In both cases
/// |W| + |V| <= (3c+1)|U|. Throws ContractError when no length-n block
/// repeats inside the window (the complexity hypothesis fails at this n).
Witness pigeonhole_extract(const FiniteWord& prefix, std::size_t n,
                           std::uint32_t c);

enum class DetectKind { repeat, mirror, either };

/// Greedy scan of prefix lengths N <= max_len. At each N, searches for the
/// largest |U| such that the N-prefix factors as W U V U (or W U V mirror(U))
/// with |V|/|U| <= ratio_cap and |W|/|U| <= ratio_cap; ties break to the
/// smallest |W|. Witnesses are appended with strictly increasing |U|.
/// An empty chain is a valid negative result.
WitnessChain detect_chain(const SequenceSource& source, DetectKind kind,
                          std::size_t max_len, const mpq_class& ratio_cap);

struct QuasiPeriodicBlockReport {
  std::size_t k = 0;
  std::uint64_t n_k = 0;  // 1-based start of block k
  std::uint64_t r_k = 0;
  std::uint64_t lambda_k = 0;
  bool witness_emitted = false;   // lambda_k > 2
  bool prefix_check = false;      // word begins with W_k U_k U_k
  bool u_lower_bounds = false;    // |U_k| >= (lambda_k-1) r_k/2 >= lambda_k r_k/4
  bool growth_qualified = false;  // k in K, k > k0, and n0' <= r_k lambda_k/eps
  bool w_upper_bound = false;     // |W_k| <= 2 r_k lambda_k/eps, when qualified
};

struct QuasiPeriodicReport {
  WitnessChain chain;
  std::vector<QuasiPeriodicBlockReport> blocks;
  std::vector<mpq_class> lambda_ratios;  // lambda_{k+1}/lambda_k
  std::optional<mpq_class> ratio_infimum;
  std::optional<std::size_t> k0;  // first index meeting the growth premise
  bool degenerate = false;        // word screened as eventually periodic
};

/// Witness construction for quasi-periodic expansions: for each block with
/// lambda_k > 2, W_k = a_1 .. a_{n_k - 1} and U_k = block_k^[lambda_k/2], so
/// the word begins with W_k U_k U_k. Reports the block inequalities and the
/// lambda_{k+1}/lambda_k ratio stream; eps parametrizes the growth premise
/// lambda_{k+1} > (1+eps) lambda_k used for the |W_k| bound.
QuasiPeriodicReport quasi_periodic_witnesses(const QuasiPeriodicSpec& spec,
                                             const mpq_class& eps);

struct PowerOccurrence {
  std::size_t position = 0;
  FiniteWord base;
};

/// All positions i carrying a fractional power: the longest U at i (if any)
/// with exponent |U| integral and rational_power(U, exponent) occurring at i.
std::vector<PowerOccurrence> find_power_occurrences(const FiniteWord& prefix,
                                                    const mpq_class& exponent);

}  // namespace cfw
