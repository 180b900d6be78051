// Acceptance suite. Each criterion prints one PASS/FAIL line with its
// runtime; the binary exits nonzero if any criterion fails. Budgets are part
// of the criteria and are checked, not advisory.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cfw/automatic.hpp"
#include "cfw/contfrac.hpp"
#include "cfw/criteria.hpp"
#include "cfw/errors.hpp"
#include "cfw/factor_index.hpp"
#include "cfw/pipeline.hpp"
#include "cfw/report.hpp"
#include "cfw/sequence.hpp"
#include "cfw/spec_io.hpp"
#include "cfw/witness.hpp"
#include "cfw/word.hpp"

using namespace cfw;

namespace {

int g_failures = 0;

struct Expect {
  bool ok = true;
  std::string first_failure;

  void operator()(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      first_failure = what;
    } else if (!condition) {
      ok = false;
    }
  }
};

void criterion(int id, const std::string& label, double budget_seconds,
               const std::function<void(Expect&)>& body) {
  Expect expect;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(expect);
  } catch (const std::exception& e) {
    expect(false, std::string("exception: ") + e.what());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool in_budget = seconds < budget_seconds;
  const bool pass = expect.ok && in_budget;
  if (!pass) ++g_failures;
  std::printf("[criterion %d] %s (%.2f s / %.0f s) %s%s%s\n", id,
              pass ? "PASS" : "FAIL", seconds, budget_seconds, label.c_str(),
              expect.ok ? "" : " -- ", expect.first_failure.c_str());
  std::fflush(stdout);
}

FiniteWord random_word(std::mt19937_64& rng, std::size_t len, Letter max) {
  std::uniform_int_distribution<Letter> dist(1, max);
  std::vector<Letter> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(dist(rng));
  return FiniteWord(std::move(out));
}

FiniteWord fibonacci_word(std::size_t n) {
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

SequenceSpec fixture(const std::string& name) {
  return load_spec_file(std::string(CFW_FIXTURES_DIR) + "/" + name);
}

void criterion_1_mirror_formula(Expect& expect) {
  std::mt19937_64 rng(101);
  for (int it = 0; it < 1000; ++it) {
    const std::size_t len = 1 + rng() % 50;
    const FiniteWord a = random_word(rng, len, 1000000);
    for (std::size_t ell = 1; ell <= len; ++ell) {
      if (!mirror_formula(a, ell)) {
        expect(false, "mirror formula failed at ell=" + std::to_string(ell));
        return;
      }
    }
  }
  expect(true, "");
}

void criterion_2_classical_bounds(Expect& expect) {
  std::mt19937_64 rng(202);
  for (int it = 0; it < 1000; ++it) {
    const std::size_t len = 3 + rng() % 48;
    const FiniteWord a = random_word(rng, len, 1000000);
    const auto cs = convergents(a);

    for (std::size_t ell = 1; ell + 2 <= len; ++ell) {
      const auto res = check_approx_bound(a, ell);
      if (!res.holds || res.margin <= 0) {
        expect(false, "approximation bound not strict at ell=" + std::to_string(ell));
        return;
      }
    }

    // Growth bound over every (ell, h) pair, in the squared exact form.
    std::vector<mpz_class> q2(len + 1);
    for (std::size_t ell = 1; ell <= len; ++ell) {
      const auto& q = convergent_at(cs, static_cast<long>(ell)).q;
      q2[ell] = q * q;
    }
    for (std::size_t ell = 1; ell < len; ++ell) {
      for (std::size_t h = 1; ell + h <= len; ++h) {
        mpz_class rhs = q2[ell];
        mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(h - 1));
        if (q2[ell + h] < rhs) {
          expect(false, "growth bound failed");
          return;
        }
      }
    }
    // Spot checks routed through the public operation as well.
    for (int probe = 0; probe < 3; ++probe) {
      const std::size_t ell = 1 + rng() % (len - 1);
      const std::size_t h = 1 + rng() % (len - ell);
      if (!check_growth_bound(a, ell, h)) {
        expect(false, "growth bound public op failed");
        return;
      }
    }

    for (long ell = 0; ell <= static_cast<long>(len); ++ell) {
      const auto& cur = convergent_at(cs, ell);
      const auto& prev = convergent_at(cs, ell - 1);
      const mpz_class det(prev.p * cur.q - cur.p * prev.q);
      const mpz_class absdet(::abs(det));
      if (absdet != 1) {
        expect(false, "determinant != 1 at ell=" + std::to_string(ell));
        return;
      }
    }
  }
  expect(true, "");
}

void criterion_3_quadratic_approximants(Expect& expect) {
  std::mt19937_64 rng(303);
  for (int it = 0; it < 100; ++it) {
    const FiniteWord pre = random_word(rng, rng() % 7, 5);
    const FiniteWord per = random_word(rng, 1 + rng() % 6, 5);
    const QuadraticApproximant ap = periodic_value(pre, per);

    // Root inside the 200-term truncation enclosure, by exact sign change.
    const RationalInterval deep = ap.truncation_enclosure(200);
    const auto sign_at = [&](const mpq_class& x) {
      const mpq_class v = mpq_class(ap.coeff_a()) * x * x -
                          mpq_class(ap.coeff_b()) * x + ap.coeff_c();
      return sgn(v);
    };
    if (sign_at(deep.lo()) * sign_at(deep.hi()) >= 0) {
      expect(false, "root not isolated by the 200-term enclosure");
      return;
    }

    const auto cs = convergents(concat(pre, per));
    const long w = static_cast<long>(pre.size());
    const long m = w + static_cast<long>(per.size());
    const mpz_class height_bound(2 * convergent_at(cs, w).q *
                                 convergent_at(cs, m).q);
    if (ap.height() > height_bound) {
      expect(false, "height bound violated");
      return;
    }

    // Distance bound with its explicit constant 2, through the verifier.
    const EventuallyPeriodicSource src{pre, per};
    const Witness witness =
        make_witness(WitnessKind::repeat, pre, per, FiniteWord{});
    const VerificationRecord rec = verify_repeat(src, witness, 16);
    for (const auto& check : rec.checks) {
      if (check.id == "approximant-distance" && check.outcome != Outcome::pass) {
        expect(false, "approximant-distance bound did not pass");
        return;
      }
    }
  }
  expect(true, "");
}

void criterion_4_pigeonhole(Expect& expect) {
  std::mt19937_64 rng(404);
  int done = 0;
  while (done < 500) {
    const std::uint32_t c = 2 + rng() % 3;
    const std::size_t period_len = 1 + rng() % 8;
    const FiniteWord base = random_word(rng, period_len, 4);
    std::vector<Letter> repeated;
    while (repeated.size() < 200) {
      for (Letter x : base) repeated.push_back(x);
    }
    const FiniteWord word{std::vector<Letter>(repeated)};

    const std::size_t n = 4 + rng() % 13;
    if (word.size() < (c + 1) * n) continue;
    if (complexity(word.prefix((c + 1) * n), n) > c * n) continue;

    const Witness witness = pigeonhole_extract(word, n, c);
    const std::size_t u = witness.u_part.size();
    if (witness.reconstruct() != word.prefix(witness.prefix_len)) {
      expect(false, "witness does not reconstruct its prefix");
      return;
    }
    if (3 * u < n) {
      expect(false, "|U| >= n/3 violated");
      return;
    }
    if (witness.w_part.size() + witness.v_part.size() >
        (3 * static_cast<std::size_t>(c) + 1) * u) {
      expect(false, "|W|+|V| <= (3C+1)|U| violated");
      return;
    }
    ++done;
  }
  expect(true, "");
}

void criterion_5_automatic_chains(Expect& expect) {
  for (const char* name : {"thue_morse.json", "period_doubling.json"}) {
    const SequenceSpec spec = fixture(name);
    const auto source = spec.make_source();
    const WitnessChain chain =
        detect_chain(*source, DetectKind::either, 4096, 16);
    if (chain.witnesses.size() < 5) {
      expect(false, std::string(name) + ": chain shorter than 5");
      return;
    }
    std::size_t prev = 0;
    const FiniteWord prefix = source->prefix(4096);
    for (const Witness& witness : chain.witnesses) {
      if (witness.u_part.size() <= prev) {
        expect(false, "chain |U| not strictly increasing");
        return;
      }
      prev = witness.u_part.size();
      if (witness.reconstruct() != prefix.prefix(witness.prefix_len)) {
        expect(false, "witness reconstruction failed");
        return;
      }
    }
    // Complexity stays linear at desk scale, the detection hypothesis.
    const FactorIndex idx(prefix);
    for (std::size_t n = 1; n <= 256; ++n) {
      if (idx.distinct_factor_count(n) > 4 * n) {
        expect(false, "complexity above 4n");
        return;
      }
    }
  }
  expect(true, "");
}

void criterion_6_mirror_suite(Expect& expect) {
  std::mt19937_64 rng(606);
  // 50 constructed quasi-palindromic prefixes with the explicit-constant
  // approximation bounds.
  for (int it = 0; it < 50; ++it) {
    const FiniteWord w_part = random_word(rng, rng() % 5, 4);
    const FiniteWord u_part = random_word(rng, 2 + rng() % 7, 4);
    FiniteWord v_part;
    if (it % 3 == 1) v_part = FiniteWord{1 + rng() % 4};
    if (it % 3 == 2) {
      const FiniteWord half = random_word(rng, 1 + rng() % 2, 4);
      v_part = concat(half, mirror(half));
    }
    const Witness witness =
        make_witness(WitnessKind::mirror, w_part, u_part, v_part);
    const EventuallyPeriodicSource src{witness.reconstruct(),
                                       FiniteWord{2, 1, 1}};
    const VerificationRecord rec = verify_mirror(src, witness, 16);
    for (const auto& check : rec.checks) {
      if (check.outcome != Outcome::pass) {
        expect(false, "bound " + check.id + " did not pass");
        return;
      }
    }
  }

  // Witness chain on the Fibonacci word: its palindromic prefixes give the
  // canonical quasi-palindromic family (W empty, V a palindrome), whose
  // products decrease along the chain.
  const LiteralSource fib{fibonacci_word(4096)};
  const WitnessChain chain = detect_chain(fib, DetectKind::mirror, 4096, 16);
  if (chain.witnesses.size() < 5) {
    expect(false, "Fibonacci mirror chain shorter than 5");
    return;
  }
  std::vector<VerificationRecord> records;
  for (const Witness& witness : chain.witnesses) {
    if (witness.prefix_len + 16 > 4096) break;
    if (!witness.w_part.empty() || !is_palindrome(witness.v_part)) continue;
    records.push_back(verify_mirror(fib, witness, 16));
  }
  if (records.size() < 5) {
    expect(false, "fewer than 5 palindromic-prefix records");
    return;
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto& check : records[i].checks) {
      if (check.outcome != Outcome::pass) {
        expect(false, "chain bound " + check.id + " did not pass");
        return;
      }
    }
    if (i > 0 && records[i].product.hi() >= records[i - 1].product.hi()) {
      expect(false, "product did not decrease along the chain");
      return;
    }
  }
  const mpq_class eps_hat = exponent_fit(records);
  expect(eps_hat > 0, "fitted exponent not positive");
}

void criterion_7_quasi_periodic(Expect& expect) {
  std::mt19937_64 rng(707);
  const mpq_class eps_values[3] = {mpq_class(1, 4), mpq_class(1, 2),
                                   mpq_class(1)};
  for (int it = 0; it < 20; ++it) {
    const mpq_class eps = eps_values[it % 3];
    QuasiPeriodicSpec spec;
    spec.head = random_word(rng, rng() % 3, 3);
    std::uint64_t lambda = 3;
    const std::size_t block_count = 4 + rng() % 3;
    for (std::size_t k = 0; k < block_count; ++k) {
      QuasiPeriodicBlock blk;
      blk.block = random_word(rng, k + 1, 3);  // r_k strictly increasing
      blk.repeat = lambda;
      spec.blocks.push_back(std::move(blk));
      // Next lambda strictly above (1 + eps) * lambda.
      const mpq_class next = (1 + eps) * mpq_class(static_cast<unsigned long>(lambda));
      mpz_class floor_next;
      mpz_fdiv_q(floor_next.get_mpz_t(), next.get_num().get_mpz_t(),
                 next.get_den().get_mpz_t());
      lambda = floor_next.get_ui() + 1;
    }

    const QuasiPeriodicReport report = quasi_periodic_witnesses(spec, eps);
    if (!report.k0.has_value()) {
      expect(false, "growth premise not recognized");
      return;
    }
    bool any_qualified = false;
    for (const auto& row : report.blocks) {
      if (row.witness_emitted && !row.prefix_check) {
        expect(false, "W U U prefix check failed at k=" + std::to_string(row.k));
        return;
      }
      if (row.witness_emitted && !row.u_lower_bounds) {
        expect(false, "|U_k| lower bounds failed");
        return;
      }
      if (row.growth_qualified) {
        any_qualified = true;
        if (!row.w_upper_bound) {
          expect(false, "|W_k| <= 2 r_k lambda_k / eps failed");
          return;
        }
      }
    }
    if (!any_qualified) {
      expect(false, "no block qualified for the growth bound");
      return;
    }
  }
  expect(true, "");
}

void criterion_8_refinement_monotonicity(Expect& expect) {
  const auto check_stable = [&](const SequenceSource& src,
                                const WitnessChain& chain, std::size_t guard) {
    for (const Witness& witness : chain.witnesses) {
      const auto bound = src.length_bound();
      if (bound && witness.prefix_len + 2 * guard > *bound) continue;
      VerificationRecord shallow, deep;
      if (witness.kind == WitnessKind::repeat) {
        shallow = verify_repeat(src, witness, guard);
        deep = verify_repeat(src, witness, 2 * guard);
      } else {
        shallow = verify_mirror(src, witness, guard);
        deep = verify_mirror(src, witness, 2 * guard);
      }
      for (std::size_t i = 0; i < shallow.checks.size(); ++i) {
        const Outcome before = shallow.checks[i].outcome;
        const Outcome after = deep.checks[i].outcome;
        if (before != Outcome::indeterminate && after != before) {
          expect(false, "flag flipped for " + shallow.checks[i].id);
          return;
        }
      }
      if (shallow.product_positive == Outcome::pass &&
          deep.product_positive != Outcome::pass) {
        expect(false, "product positivity flipped");
        return;
      }
    }
  };

  const AutomaticSource tm{thue_morse_dfao()};
  check_stable(tm, detect_chain(tm, DetectKind::either, 512, 8), 8);
  const AutomaticSource pd{period_doubling_dfao()};
  check_stable(pd, detect_chain(pd, DetectKind::either, 512, 8), 8);
  const LiteralSource fib{fibonacci_word(2048)};
  check_stable(fib, detect_chain(fib, DetectKind::mirror, 512, 8), 8);
  const EventuallyPeriodicSource alt{FiniteWord{}, FiniteWord{1, 2}};
  check_stable(alt, detect_chain(alt, DetectKind::repeat, 64, 1), 8);
  expect(true, "");
}

void criterion_9_determinism(Expect& expect) {
  const char* names[] = {"thue_morse.json",     "period_doubling.json",
                         "alternating.json",    "quasi_growth.json",
                         "golden.json",         "increasing.json"};
  for (const char* name : names) {
    const SequenceSpec spec = fixture(name);
    DetectParams params;
    params.kind = DetectKind::either;
    params.max_len = 128;
    params.ratio_cap = 8;
    const std::size_t n = 24;
    const auto first = run_all(spec, n, params, 12);
    const auto second = run_all(spec, n, params, 12);
    if (render_report(first.report) != render_report(second.report)) {
      expect(false, std::string(name) + ": reports differ between runs");
      return;
    }
  }
  expect(true, "");
}

}  // namespace

int main() {
  criterion(1, "exact mirror identity on 1000 random words", 10,
            criterion_1_mirror_formula);
  criterion(2, "classical approximation/growth bounds, unit determinants", 10,
            criterion_2_classical_bounds);
  criterion(3, "quadratic approximants: roots, heights, distance bound", 30,
            criterion_3_quadratic_approximants);
  criterion(4, "pigeonhole extraction guarantees on 500 words", 30,
            criterion_4_pigeonhole);
  criterion(5, "automatic sequences give chains of length >= 5 at 4096", 60,
            criterion_5_automatic_chains);
  criterion(6, "mirror approximation bounds and decaying products", 60,
            criterion_6_mirror_suite);
  criterion(7, "quasi-periodic witnesses and growth inequalities", 30,
            criterion_7_quasi_periodic);
  criterion(8, "doubling guard depth never flips a decided flag", 120,
            criterion_8_refinement_monotonicity);
  criterion(9, "byte-identical reports across pipeline runs", 120,
            criterion_9_determinism);

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failures);
  return 1;
}
