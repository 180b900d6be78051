#include "cfw/witness.hpp"

#include <algorithm>
#include <cmath>

#include "cfw/errors.hpp"

namespace cfw {

namespace {

mpq_class qdiv(const mpz_class& num, const mpz_class& den) {
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

void push_check(VerificationRecord& rec, std::string id, RationalInterval lhs,
                mpq_class rhs, bool strict) {
  BoundCheck check;
  check.id = std::move(id);
  check.outcome = strict ? lhs.lt(rhs) : lhs.le(rhs);
  check.lhs = std::move(lhs);
  check.rhs = std::move(rhs);
  check.strict = strict;
  if (check.outcome == Outcome::indeterminate) rec.any_indeterminate = true;
  rec.checks.push_back(std::move(check));
}

void push_ratio(VerificationRecord& rec, std::string id, RationalInterval value,
                const mpq_class& scale) {
  RatioReport rr;
  rr.id = std::move(id);
  rr.ratio = RationalInterval(value.lo() / scale, value.hi() / scale);
  rr.value = std::move(value);
  rr.scale = scale;
  rec.ratios.push_back(std::move(rr));
}

double log_mpz(const mpz_class& z) {
  signed long exp = 0;
  const double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * std::log(2.0);
}

double log_mpq(const mpq_class& q) {
  return log_mpz(mpz_class(q.get_num())) - log_mpz(mpz_class(q.get_den()));
}

mpq_class to_grid(double x) {
  // 1e-9 grid keeps diagnostics exact-serializable and deterministic.
  const double scaled = std::round(x * 1e9);
  mpq_class v(mpz_class(static_cast<long>(scaled)), mpz_class(1000000000));
  v.canonicalize();
  return v;
}

// Positivity of the product only gates the instant-exponent diagnostic; an
// undecided product (genuinely zero on periodic sources, or below the
// enclosure resolution) does not count as an indeterminate bound check.
void finish_product(VerificationRecord& rec, RationalInterval product,
                    mpz_class base) {
  rec.product_base = std::move(base);
  if (product.lo() > 0) {
    rec.product_positive = Outcome::pass;
    const double log_base = log_mpz(rec.product_base);
    if (log_base > 0) {
      rec.instant_exponent = to_grid(-log_mpq(product.hi()) / log_base);
    }
  } else {
    rec.product_positive = Outcome::indeterminate;
  }
  rec.product = std::move(product);
}

FiniteWord checked_prefix(const SequenceSource& source, std::size_t depth) {
  const auto bound = source.length_bound();
  if (bound && *bound < depth) {
    throw ContractError("source provides " + std::to_string(*bound) +
                        " letters but verification needs " +
                        std::to_string(depth) +
                        "; reduce guard depth or extend the source");
  }
  return source.prefix(depth);
}

// The reported linear-form values sit at scales as small as
// q_w^{-2} q_t^{-2}, far below the q_t^{-2} resolution the guard-depth
// enclosure offers when |W| is large. Deepening by ~2 log2(q_front) letters
// makes those intervals tight; clamped to what the source can provide, so
// short literal sources degrade to wider (still correct) reports.
RationalInterval deep_alpha(const SequenceSource& source, std::size_t depth,
                            const mpz_class& q_front) {
  std::size_t extra = 3 + 2 * mpz_sizeinbase(q_front.get_mpz_t(), 2);
  if (const auto bound = source.length_bound()) {
    const std::size_t avail = static_cast<std::size_t>(*bound);
    if (depth + extra > avail) extra = avail > depth ? avail - depth : 0;
  }
  return enclose_continuations(convergents(source.prefix(depth + extra)));
}

void check_witness_matches(const Witness& witness, const FiniteWord& prefix) {
  if (witness.reconstruct() != prefix.prefix(witness.prefix_len)) {
    throw ContractError(
        "witness factorization does not reconstruct the source prefix");
  }
}

}  // namespace

VerificationRecord verify_repeat(const SequenceSource& source,
                                 const Witness& witness,
                                 std::size_t guard_depth) {
  if (witness.kind != WitnessKind::repeat) {
    throw ContractError("verify_repeat needs a repeat witness");
  }
  VerificationRecord rec;
  rec.witness = witness;
  rec.guard_depth = guard_depth;
  rec.w = witness.w_part.size();
  rec.u = witness.u_part.size();
  rec.v = witness.v_part.size();
  const std::size_t t = rec.w + 2 * rec.u + rec.v;
  rec.agreement_len = t;  // alpha and alpha_n share the first t quotients

  const std::size_t depth = t + guard_depth;
  const FiniteWord a = checked_prefix(source, depth);
  check_witness_matches(witness, a);

  const auto cs = convergents(a);
  const RationalInterval alpha = enclose_continuations(cs);

  const long w = static_cast<long>(rec.w);
  const long m = w + static_cast<long>(rec.u + rec.v);
  const auto& cw1 = convergent_at(cs, w - 1);
  const auto& cw = convergent_at(cs, w);
  const auto& cm1 = convergent_at(cs, m - 1);
  const auto& cm = convergent_at(cs, m);
  const auto& ct = convergent_at(cs, static_cast<long>(t));
  rec.snapshot = {cw1, cw, cm1, cm, ct};

  const QuadraticApproximant approx =
      periodic_value(witness.w_part, concat(witness.u_part, witness.v_part));
  const RationalInterval alpha_n = approx.truncation_enclosure(depth);

  // |alpha - alpha_n| <= 2 q_t^{-2}: both share the first t quotients.
  push_check(rec, "approximant-distance", (alpha - alpha_n).abs(),
             qdiv(2, ct.q * ct.q), /*strict=*/false);

  // The integer quadruple behind P(X) = A X^2 - B X + C, with B = B1 + B2.
  const mpz_class A = approx.coeff_a();
  const mpz_class B1 = cw1.q * cm.p - cw.q * cm1.p;
  const mpz_class B2 = cw1.p * cm.q - cw.p * cm1.q;
  const mpz_class C = approx.coeff_c();

  // |A alpha - B1| <= 2 q_w / q_m
  const RationalInterval l2 =
      mpq_class(A) * alpha - RationalInterval::point(mpq_class(B1));
  push_check(rec, "L2-bound", l2.abs(), qdiv(2 * cw.q, cm.q), false);

  // |A alpha - B2| <= 2 q_m / q_w
  const RationalInterval l3 =
      mpq_class(A) * alpha - RationalInterval::point(mpq_class(B2));
  push_check(rec, "L3-bound", l3.abs(), qdiv(2 * cm.q, cw.q), false);

  // height of P <= 2 q_w q_m
  push_check(rec, "height",
             RationalInterval::point(mpq_class(approx.height())),
             mpq_class(2 * cw.q * cm.q), false);

  // Reported quantities are evaluated against a deeper enclosure so their
  // intervals resolve the q_w^{-1} q_m q_t^{-2} scale of |P(alpha)|.
  const RationalInterval alpha2 = deep_alpha(source, depth, cw.q);
  const RationalInterval p_at_alpha = approx.eval(alpha2).abs();
  push_ratio(rec, "P(alpha)", p_at_alpha, qdiv(cm.q, cw.q * ct.q * ct.q));

  const RationalInterval l1 = p_at_alpha;  // L1 at the quadruple is P(alpha)
  const RationalInterval l2d =
      (mpq_class(A) * alpha2 - RationalInterval::point(mpq_class(B1))).abs();
  const RationalInterval l3d =
      (mpq_class(A) * alpha2 - RationalInterval::point(mpq_class(B2))).abs();
  const RationalInterval l4 =
      RationalInterval::point(mpq_class(A)).abs();
  rec.forms = {{"L1", l1}, {"L2", l2d}, {"L3", l3d}, {"L4", l4}};

  RationalInterval product = l1 * l2d * l3d * l4;
  // The product decays like q_m^2 q_t^{-2} up to the implied constant.
  push_ratio(rec, "product-chain", product, qdiv(cm.q * cm.q, ct.q * ct.q));
  finish_product(rec, std::move(product), cw.q * cm.q);
  return rec;
}

VerificationRecord verify_mirror(const SequenceSource& source,
                                 const Witness& witness,
                                 std::size_t guard_depth) {
  if (witness.kind != WitnessKind::mirror) {
    throw ContractError("verify_mirror needs a mirror witness");
  }
  VerificationRecord rec;
  rec.witness = witness;
  rec.guard_depth = guard_depth;
  rec.w = witness.w_part.size();
  rec.u = witness.u_part.size();
  rec.v = witness.v_part.size();
  rec.r = rec.w;
  rec.s = rec.w + rec.u;
  rec.t = witness.prefix_len;
  rec.agreement_len = rec.t;

  const std::size_t depth = rec.t + guard_depth;
  const FiniteWord a = checked_prefix(source, depth);
  check_witness_matches(witness, a);

  const auto cs = convergents(a);
  const RationalInterval alpha = enclose_continuations(cs);

  const auto& cr = convergent_at(cs, static_cast<long>(rec.r));
  const auto& csn = convergent_at(cs, static_cast<long>(rec.s));
  const auto& ctn = convergent_at(cs, static_cast<long>(rec.t));
  rec.snapshot = {cr, csn, ctn};

  // P/Q = [0; W U V mirror(U) mirror(W)], P'/Q' its last convergent.
  const FiniteWord palin_word =
      concat(witness.reconstruct(), mirror(witness.w_part));
  const auto pcs = convergents(palin_word);
  const mpz_class P = pcs.back().p;
  const mpz_class Q = pcs.back().q;
  const mpz_class Pp = pcs[pcs.size() - 2].p;
  const mpz_class Qp = pcs[pcs.size() - 2].q;
  rec.palin_p = P;
  rec.palin_q = Q;
  rec.palin_pp = Pp;
  rec.palin_qp = Qp;

  const mpq_class q_t2 = qdiv(1, ctn.q * ctn.q);
  const mpq_class q_s2 = qdiv(1, csn.q * csn.q);

  // |Q alpha - P| < Q q_t^{-2} and |Q' alpha - P'| < Q q_t^{-2}
  const RationalInterval f1 =
      mpq_class(Q) * alpha - RationalInterval::point(mpq_class(P));
  push_check(rec, "value-approx", f1.abs(), mpq_class(Q) * q_t2, true);
  const RationalInterval f2 =
      mpq_class(Qp) * alpha - RationalInterval::point(mpq_class(Pp));
  push_check(rec, "tail-approx", f2.abs(), mpq_class(Q) * q_t2, true);

  // |Q alpha - Q'| < Q q_s^{-2}: the mirror-formula consequence.
  const RationalInterval f3 =
      mpq_class(Q) * alpha - RationalInterval::point(mpq_class(Qp));
  push_check(rec, "mirror-approx", f3.abs(), mpq_class(Q) * q_s2, true);

  // Q <= 2 q_r q_t, exact integers
  push_check(rec, "Q-size", RationalInterval::point(mpq_class(Q)),
             mpq_class(2 * cr.q * ctn.q), false);

  // L1..L5 evaluated at (Q, Q', P, P'). L5 lives at the Q^{-1} scale
  // after heavy cancellation, so the forms use the deepened enclosure.
  const RationalInterval alpha2 = deep_alpha(source, depth, cr.q);
  const RationalInterval g1 =
      mpq_class(Q) * alpha2 - RationalInterval::point(mpq_class(P));
  const RationalInterval g2 =
      mpq_class(Qp) * alpha2 - RationalInterval::point(mpq_class(Pp));
  const RationalInterval g3 =
      mpq_class(Q) * alpha2 - RationalInterval::point(mpq_class(Qp));
  const RationalInterval l4 = RationalInterval::point(mpq_class(Qp)).abs();
  const RationalInterval l5 =
      alpha2.square() * RationalInterval::point(mpq_class(Q)) -
      mpq_class(Qp) * alpha2 - mpq_class(P) * alpha2 +
      RationalInterval::point(mpq_class(Pp));
  rec.forms = {{"L1", g1.abs()},
               {"L2", g2.abs()},
               {"L3", g3.abs()},
               {"L4", l4},
               {"L5", l5.abs()}};

  RationalInterval product = g2.abs() * g3.abs() * l4 * l5.abs();
  push_ratio(rec, "L2..L5 product", product, qdiv(1, Q));

  // The primed forms apply when Q' == P, which holds exactly when the
  // assembled word is a palindrome; checked opportunistically.
  if (Qp == P) {
    rec.lprime_branch = true;
    const RationalInterval lp1 =
        alpha2.square() * RationalInterval::point(mpq_class(Q)) -
        mpq_class(2 * Qp) * alpha2 + RationalInterval::point(mpq_class(Pp));
    const RationalInterval lp2 =
        mpq_class(Qp) * alpha2 - RationalInterval::point(mpq_class(Pp));
    const RationalInterval lp3 = RationalInterval::point(mpq_class(Q));
    rec.forms.push_back({"L'1", lp1.abs()});
    rec.forms.push_back({"L'2", lp2.abs()});
    rec.forms.push_back({"L'3", lp3});
    push_ratio(rec, "Lprime1", lp1.abs(), qdiv(1, Q));
  }

  finish_product(rec, std::move(product), Q);
  return rec;
}

DeltaEstimate estimate_delta(const FiniteWord& a) {
  if (a.empty()) throw ContractError("estimate_delta needs letters");
  const auto cs = convergents(a);
  const Letter max_letter = *std::max_element(a.begin(), a.end());

  // Predicate: q_ell <= x^ell for every ell in range (monotone in x).
  const auto satisfies = [&](const mpq_class& x) {
    mpz_class num_pow = 1;
    mpz_class den_pow = 1;
    for (std::size_t ell = 1; ell <= a.size(); ++ell) {
      num_pow *= x.get_num();
      den_pow *= x.get_den();
      if (convergent_at(cs, static_cast<long>(ell)).q * den_pow > num_pow) {
        return false;
      }
    }
    return true;
  };

  // q_ell <= (max_letter + 1)^ell always holds, giving the upper bracket.
  mpq_class lo = 1;
  mpq_class hi = mpq_class(max_letter) + 1;
  for (int step = 0; step < 40; ++step) {
    const mpq_class mid = (lo + hi) / 2;
    if (satisfies(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  DeltaEstimate est;
  est.m_hat = 1 + hi;
  est.delta_hat = std::log(2.0) / log_mpq(est.m_hat);
  return est;
}

mpq_class exponent_fit(const std::vector<VerificationRecord>& records) {
  std::vector<double> xs, ys;
  for (const auto& rec : records) {
    if (rec.product_positive != Outcome::pass) continue;
    xs.push_back(log_mpz(rec.product_base));
    ys.push_back(log_mpq(rec.product.hi()));
  }
  if (xs.size() < 2) {
    throw ContractError("exponent fit needs at least two records with "
                        "certified positive products");
  }
  const double n = static_cast<double>(xs.size());
  double mean_x = 0, mean_y = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
  }
  if (sxx == 0) {
    throw ContractError("exponent fit needs records with distinct bases");
  }
  return to_grid(-sxy / sxx);
}

}  // namespace cfw
