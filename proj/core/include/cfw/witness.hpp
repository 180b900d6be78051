#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfw/contfrac.hpp"
#include "cfw/criteria.hpp"
#include "cfw/rational_interval.hpp"
#include "cfw/sequence.hpp"

namespace cfw {

/// One asserted inequality with an explicit constant. The outcome is decided
/// only by interval separation, never by rounding.
struct BoundCheck {
  std::string id;
  RationalInterval lhs;
  mpq_class rhs;
  bool strict = false;  // comparison is < rather than <=
  Outcome outcome = Outcome::indeterminate;
};

/// One reported quantity whose classical bound carries an implied constant:
/// the exact value/scale ratio is recorded, no threshold is invented.
struct RatioReport {
  std::string id;
  RationalInterval value;
  mpq_class scale;       // positive
  RationalInterval ratio;  // value / scale
};

struct LinearFormValue {
  std::string id;
  RationalInterval value;
};

struct VerificationRecord {
  Witness witness;
  std::size_t guard_depth = 0;

  // Repeat case: lengths w, u, v. Mirror case: the palindromic indices
  // r = |W|, s = |W U| and t = |W U V mirror(U)|.
  std::size_t w = 0, u = 0, v = 0;
  std::size_t r = 0, s = 0, t = 0;

  std::size_t agreement_len = 0;  // guaranteed matching partial quotients

  std::vector<Convergent> snapshot;  // the named convergents of the source
  std::optional<mpz_class> palin_p, palin_q, palin_pp, palin_qp;  // P,Q,P',Q'

  std::vector<BoundCheck> checks;
  std::vector<RatioReport> ratios;
  std::vector<LinearFormValue> forms;

  RationalInterval product;  // product of the linear-form values
  mpz_class product_base;    // q_w q_{w+u+v} (repeat) or Q_n (mirror)
  Outcome product_positive = Outcome::indeterminate;
  std::optional<mpq_class> instant_exponent;  // -log prod / log base

  bool lprime_branch = false;  // mirror only: Q' == P held, L' forms evaluated
  bool any_indeterminate = false;
};

/// Certify the stammering chain: builds the quadratic approximant with
/// preperiod W and period U V, checks the approximant-distance, the two
/// cross-form bounds and the height bound with their explicit constants,
/// reports the |P(alpha)| ratio, and evaluates the four linear forms and
/// their product at the associated integer quadruple.
/// The source must extend to index |W| + 2|U| + |V| + guard_depth.
VerificationRecord verify_repeat(const SequenceSource& source,
                                 const Witness& witness,
                                 std::size_t guard_depth);

/// Certify the quasi-palindromic chain: builds the palindromic rational
/// P/Q = [0; W U V mirror(U) mirror(W)] and its last convergent P'/Q',
/// checks the value, tail and mirror approximation bounds and the Q-size
/// bound with their explicit constants, evaluates the five linear forms at
/// (Q, Q', P, P') and the product of L2..L5, and when Q' == P holds
/// exactly also the three primed forms.
VerificationRecord verify_mirror(const SequenceSource& source,
                                 const Witness& witness,
                                 std::size_t guard_depth);

struct DeltaEstimate {
  mpq_class m_hat;       // certified upper bound for 1 + max_ell q_ell^{1/ell}
  double delta_hat = 0;  // log 2 / log m_hat, diagnostic (1e-9 relative)
};

/// Finite-range surrogate for M = 1 + limsup q_ell^{1/ell}: a dyadic upper
/// bound certified by exact power comparisons over ell = 1..|a|.
DeltaEstimate estimate_delta(const FiniteWord& a);

/// Least-squares slope of log(product) against log(product base), negated:
/// a positive value is the empirical exponent of the product decay. Uses
/// records whose product is certified positive; needs at least two with
/// distinct bases. Diagnostic only; reported on a 1e-9 grid.
mpq_class exponent_fit(const std::vector<VerificationRecord>& records);

}  // namespace cfw
