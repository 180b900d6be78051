#include "cfw/criteria.hpp"

#include <algorithm>
#include <string>

#include "cfw/errors.hpp"
#include "cfw/factor_index.hpp"

namespace cfw {

namespace {

mpq_class length_ratio(std::size_t num, std::size_t den) {
  mpq_class r(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

}  // namespace

FiniteWord Witness::reconstruct() const {
  FiniteWord tail = kind == WitnessKind::repeat ? u_part : mirror(u_part);
  return concat(concat(concat(w_part, u_part), v_part), tail);
}

Witness make_witness(WitnessKind kind, FiniteWord w, FiniteWord u,
                     FiniteWord v) {
  if (u.empty()) throw ContractError("witness U must be non-empty");
  Witness out;
  out.kind = kind;
  out.prefix_len = w.size() + 2 * u.size() + v.size();
  out.ratio_v_u = length_ratio(v.size(), u.size());
  out.ratio_w_u = length_ratio(w.size(), u.size());
  out.w_part = std::move(w);
  out.u_part = std::move(u);
  out.v_part = std::move(v);
  return out;
}

std::optional<PeriodicityFlag> detect_eventual_period(const FiniteWord& w) {
  const std::size_t n = w.size();
  if (n < 3) return std::nullopt;
  const FactorIndex idx(w);
  for (std::size_t period = 1; 2 * period <= n; ++period) {
    std::size_t preperiod = 0;
    for (std::size_t i = n - period; i-- > 0;) {
      if (w[i] != w[i + period]) {
        preperiod = i + 1;
        break;
      }
    }
    if (preperiod + 2 * period > n) continue;
    // Morse-Hedlund gate: an eventually periodic word with preperiod R and
    // period P has at most R + P distinct factors of every length, while an
    // aperiodic word shows at least n* + 1 factors of length n* = R + P once
    // the prefix carries more than n* windows. Demanding 2 n* < |w| and
    // p(n*) <= n* therefore rejects accidental periodic tails.
    const std::size_t probe = preperiod + period;
    if (2 * probe >= n) continue;
    if (idx.distinct_factor_count(probe) > probe) continue;
    PeriodicityFlag flag;
    flag.periodic = true;
    flag.preperiod = preperiod;
    flag.period = period;
    return flag;
  }
  return std::nullopt;
}

Witness pigeonhole_extract(const FiniteWord& prefix, std::size_t n,
                           std::uint32_t c) {
  if (n < 1) throw ContractError("block length n must be >= 1");
  if (c < 2) throw ContractError("complexity constant c must be >= 2");
  const std::size_t window_len = (static_cast<std::size_t>(c) + 1) * n;
  if (prefix.size() < window_len) {
    throw ContractError("prefix of length " + std::to_string(prefix.size()) +
                        " shorter than the (c+1) n = " +
                        std::to_string(window_len) + " window");
  }
  const FiniteWord window = prefix.prefix(window_len);
  const FactorIndex idx(window);
  const auto pair = idx.first_repeat(n, 1);
  if (!pair) {
    throw ContractError("no length-" + std::to_string(n) +
                        " block repeats in the first " +
                        std::to_string(window_len) +
                        " letters; the complexity hypothesis fails at this n");
  }
  const auto [i1, i2] = *pair;
  if (i1 + n <= i2) {
    // Disjoint occurrences: U = X_n, V fills the gap.
    return make_witness(WitnessKind::repeat, window.factor(0, i1),
                        window.factor(i1, n), window.factor(i1 + n, i2 - i1 - n));
  }
  // Overlapping occurrences: X_n is a rational power of X' = a_{i1}..a_{i2-1};
  // X' X_n = X'^{2x+y} with 0 <= y < 2, and U = X'^x keeps |U| >= n/3.
  const std::size_t d = i2 - i1;
  const std::size_t x = (d + n) / (2 * d);
  const FiniteWord u = integer_power(window.factor(i1, d), x);
  return make_witness(WitnessKind::repeat, window.factor(0, i1), u,
                      FiniteWord{});
}

namespace {

// Floor(cap * u) clamped to limit, in exact arithmetic.
std::size_t floor_scaled(const mpq_class& cap, std::size_t u,
                         std::size_t limit) {
  mpz_class value = cap.get_num() * static_cast<unsigned long>(u);
  mpz_fdiv_q(value.get_mpz_t(), value.get_mpz_t(), cap.get_den().get_mpz_t());
  if (value >= static_cast<unsigned long>(limit)) return limit;
  return static_cast<std::size_t>(value.get_ui());
}

// Smallest u with (2 + 2 cap) u >= N, i.e. the least |U| any factorization
// within the ratio cap can have at prefix length N.
std::size_t min_u_for(const mpq_class& cap, std::size_t n) {
  const mpq_class denom = 2 + 2 * cap;
  mpz_class num = denom.get_den() * static_cast<unsigned long>(n);
  mpz_class div = denom.get_num();
  mpz_class u;
  mpz_cdiv_q(u.get_mpz_t(), num.get_mpz_t(), div.get_mpz_t());
  if (u < 1) return 1;
  if (u > static_cast<unsigned long>(n)) return n;
  return static_cast<std::size_t>(u.get_ui());
}

}  // namespace

WitnessChain detect_chain(const SequenceSource& source, DetectKind kind,
                          std::size_t max_len, const mpq_class& ratio_cap) {
  if (max_len < 4) throw ContractError("max_len must be >= 4");
  if (ratio_cap <= 0) throw ContractError("ratio_cap must be > 0");
  std::size_t scan_len = max_len;
  if (const auto bound = source.length_bound()) {
    scan_len = std::min<std::size_t>(scan_len,
                                     static_cast<std::size_t>(*bound));
  }
  WitnessChain chain;
  if (scan_len < 4) return chain;
  const FiniteWord prefix = source.prefix(scan_len);
  const FactorIndex idx(prefix);

  std::size_t prev_u = 0;
  for (std::size_t N = 4; N <= scan_len; ++N) {
    const std::size_t u_hi = N / 2;
    const std::size_t u_lo = std::max(prev_u + 1, min_u_for(ratio_cap, N));
    if (u_lo > u_hi) continue;
    bool found = false;
    for (std::size_t u = u_hi; u >= u_lo && !found; --u) {
      const std::size_t slack = N - 2 * u;  // |W| + |V|
      const std::size_t cap_u = floor_scaled(ratio_cap, u, N);
      const std::size_t w_hi = std::min(cap_u, slack);
      const std::size_t w_lo = slack > cap_u ? slack - cap_u : 0;
      for (std::size_t w = w_lo; w <= w_hi && !found; ++w) {
        WitnessKind hit;
        if (kind != DetectKind::mirror && idx.window_equal(w, N - u, u)) {
          hit = WitnessKind::repeat;
        } else if (kind != DetectKind::repeat &&
                   idx.window_mirror_equal(w, N - u, u)) {
          hit = WitnessKind::mirror;
        } else {
          continue;
        }
        Witness witness =
            make_witness(hit, prefix.factor(0, w), prefix.factor(w, u),
                         prefix.factor(w + u, N - w - 2 * u));
        chain.sup_ratio_v_u = std::max(chain.sup_ratio_v_u, witness.ratio_v_u);
        chain.sup_ratio_w_u = std::max(chain.sup_ratio_w_u, witness.ratio_w_u);
        chain.epsilon_stream.push_back(length_ratio(u, N));
        chain.witnesses.push_back(std::move(witness));
        prev_u = u;
        found = true;
      }
    }
  }
  if (const auto flag = detect_eventual_period(prefix)) {
    chain.periodicity = *flag;
  }
  return chain;
}

QuasiPeriodicReport quasi_periodic_witnesses(const QuasiPeriodicSpec& spec,
                                             const mpq_class& eps) {
  spec.validate();
  if (eps <= 0) throw ContractError("eps must be > 0");
  const QuasiPeriodicSource source(spec);
  const FiniteWord word = source.prefix(
      static_cast<std::size_t>(spec.total_length()));

  QuasiPeriodicReport report;
  const std::size_t count = spec.blocks.size();

  for (std::size_t k = 0; k + 1 < count; ++k) {
    mpq_class r(static_cast<unsigned long>(spec.blocks[k + 1].repeat),
                static_cast<unsigned long>(spec.blocks[k].repeat));
    r.canonicalize();
    report.lambda_ratios.push_back(r);
  }
  if (!report.lambda_ratios.empty()) {
    report.ratio_infimum = *std::min_element(report.lambda_ratios.begin(),
                                             report.lambda_ratios.end());
  }

  // k0: first block with lambda > 2 whose growth lambda_{k+1} > (1+eps)
  // lambda_k holds from there on through the finite data.
  const mpq_class growth = 1 + eps;
  for (std::size_t k0 = 0; k0 < count; ++k0) {
    if (spec.blocks[k0].repeat <= 2) continue;
    bool ok = true;
    for (std::size_t k = k0; k + 1 < count; ++k) {
      if (mpq_class(static_cast<unsigned long>(spec.blocks[k + 1].repeat)) <=
          growth * static_cast<unsigned long>(spec.blocks[k].repeat)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      report.k0 = k0;
      break;
    }
  }

  // n0' counts the head plus the blocks before k0.
  mpz_class n0_prime = static_cast<unsigned long>(spec.head.size() + 1);
  if (report.k0) {
    for (std::size_t h = 0; h < *report.k0; ++h) {
      n0_prime += mpz_class(static_cast<unsigned long>(spec.blocks[h].repeat)) *
                  static_cast<unsigned long>(spec.blocks[h].block.size());
    }
  }

  std::size_t prev_u = 0;
  std::uint64_t max_r_before = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const auto& blk = spec.blocks[k];
    QuasiPeriodicBlockReport row;
    row.k = k;
    row.n_k = spec.block_start(k);
    row.r_k = blk.block.size();
    row.lambda_k = blk.repeat;

    const bool in_extraction_set = k >= 1 && row.r_k > max_r_before;
    max_r_before = std::max<std::uint64_t>(max_r_before, row.r_k);

    if (blk.repeat > 2) {
      row.witness_emitted = true;
      const std::uint64_t half = blk.repeat / 2;
      const FiniteWord u = integer_power(blk.block, half);
      const FiniteWord w =
          word.prefix(static_cast<std::size_t>(row.n_k - 1));
      Witness witness = make_witness(WitnessKind::repeat, w, u, FiniteWord{});

      row.prefix_check =
          word.size() >= witness.prefix_len &&
          witness.reconstruct() == word.prefix(witness.prefix_len);

      // |U_k| >= (lambda_k - 1) r_k / 2 >= lambda_k r_k / 4
      const mpq_class u_len(static_cast<unsigned long>(u.size()));
      const mpq_class lhs1 =
          mpq_class(static_cast<unsigned long>(blk.repeat - 1)) *
          static_cast<unsigned long>(row.r_k) / 2;
      const mpq_class lhs2 =
          mpq_class(static_cast<unsigned long>(blk.repeat)) *
          static_cast<unsigned long>(row.r_k) / 4;
      row.u_lower_bounds = u_len >= lhs1 && lhs1 >= lhs2;

      if (report.k0 && k > *report.k0 && in_extraction_set) {
        const mpq_class budget =
            mpq_class(static_cast<unsigned long>(row.r_k)) *
            static_cast<unsigned long>(row.lambda_k) / eps;
        if (mpq_class(n0_prime) <= budget) {
          row.growth_qualified = true;
          row.w_upper_bound =
              mpq_class(static_cast<unsigned long>(w.size())) <= 2 * budget;
        }
      }

      if (row.prefix_check && u.size() > prev_u) {
        report.chain.sup_ratio_v_u =
            std::max(report.chain.sup_ratio_v_u, witness.ratio_v_u);
        report.chain.sup_ratio_w_u =
            std::max(report.chain.sup_ratio_w_u, witness.ratio_w_u);
        report.chain.epsilon_stream.push_back(
            length_ratio(u.size(), witness.prefix_len));
        prev_u = u.size();
        report.chain.witnesses.push_back(std::move(witness));
      }
    }
    report.blocks.push_back(std::move(row));
  }

  if (const auto flag = detect_eventual_period(word)) {
    report.chain.periodicity = *flag;
    // The materialized word always ends in a long repeated block, and the
    // pattern may coincidentally match a few letters before it. The spec is
    // degenerate only when a full period fits before the last block.
    const std::uint64_t last_start = spec.block_start(count - 1) - 1;
    report.degenerate = flag->preperiod + flag->period <= last_start;
  }
  return report;
}

std::vector<PowerOccurrence> find_power_occurrences(const FiniteWord& prefix,
                                                    const mpq_class& exponent) {
  mpq_class expo(exponent);
  expo.canonicalize();
  if (expo <= 1) throw ContractError("exponent must be > 1");
  std::vector<PowerOccurrence> out;
  if (prefix.empty()) return out;
  const FactorIndex idx(prefix);
  const std::size_t total = prefix.size();
  if (!expo.get_num().fits_ulong_p() || !expo.get_den().fits_ulong_p()) {
    throw ContractError("exponent too large");
  }
  const std::size_t p = expo.get_num().get_ui();
  const std::size_t q = expo.get_den().get_ui();
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t t = (total - i) / p; t >= 1; --t) {
      const std::size_t base_len = q * t;   // |U|, makes exponent*|U| integral
      const std::size_t power_len = p * t;  // |U^exponent|
      if (idx.window_equal(i, i + base_len, power_len - base_len)) {
        out.push_back({i, prefix.factor(i, base_len)});
        break;
      }
    }
  }
  return out;
}

}  // namespace cfw
