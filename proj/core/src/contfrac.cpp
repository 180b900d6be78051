#include "cfw/contfrac.hpp"

#include <algorithm>
#include <string>

#include "cfw/bigint_guard.hpp"
#include "cfw/errors.hpp"

namespace cfw {

std::vector<Convergent> convergents(const FiniteWord& a) {
  std::vector<Convergent> cs;
  cs.reserve(a.size() + 2);
  cs.push_back({-1, mpz_class(1), mpz_class(0)});
  cs.push_back({0, mpz_class(0), mpz_class(1)});
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& prev = cs[cs.size() - 1];
    const auto& prev2 = cs[cs.size() - 2];
    Convergent next;
    next.index = static_cast<long>(i) + 1;
    next.p = a[i] * prev.p + prev2.p;
    next.q = a[i] * prev.q + prev2.q;
    bigint_guard::check(next.q, "convergent denominator");
    cs.push_back(std::move(next));
  }
  return cs;
}

const Convergent& convergent_at(const std::vector<Convergent>& cs, long ell) {
  const long pos = ell + 1;
  if (pos < 0 || pos >= static_cast<long>(cs.size())) {
    throw ContractError("convergent index " + std::to_string(ell) +
                        " outside table of depth " +
                        std::to_string(static_cast<long>(cs.size()) - 2));
  }
  return cs[static_cast<std::size_t>(pos)];
}

mpq_class finite_value(const FiniteWord& a) {
  const auto cs = convergents(a);
  const auto& last = cs.back();
  mpq_class v(last.p, last.q);
  v.canonicalize();
  return v;
}

namespace {

RationalInterval ordered_interval(mpq_class x, mpq_class y) {
  if (x <= y) return RationalInterval(std::move(x), std::move(y));
  return RationalInterval(std::move(y), std::move(x));
}

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

}  // namespace

RationalInterval enclose_value(const FiniteWord& a, std::size_t depth) {
  if (a.size() < 2 || depth < 1 || depth > a.size() - 1) {
    throw ContractError("enclosure depth " + std::to_string(depth) +
                        " out of range [1, " + std::to_string(a.size()) +
                        " - 1]");
  }
  const auto cs = convergents(a);
  const auto& d0 = convergent_at(cs, static_cast<long>(depth));
  const auto& d1 = convergent_at(cs, static_cast<long>(depth) + 1);
  return ordered_interval(ratio(d0.p, d0.q), ratio(d1.p, d1.q));
}

RationalInterval enclose_continuations(const std::vector<Convergent>& cs) {
  if (cs.size() < 3) {
    throw ContractError("continuation enclosure needs at least one letter");
  }
  const auto& last = cs.back();
  const auto& prev = cs[cs.size() - 2];
  return ordered_interval(ratio(last.p, last.q),
                          ratio(last.p + prev.p, last.q + prev.q));
}

RationalInterval enclose_continuations(const FiniteWord& a) {
  return enclose_continuations(convergents(a));
}

ApproxBoundResult check_approx_bound(const FiniteWord& a, std::size_t ell) {
  if (ell < 1 || a.size() < 2 || ell > a.size() - 2) {
    throw ContractError(
        "approximation bound needs 1 <= ell <= |a| - 2 (cannot bound alpha "
        "beyond the prefix); got ell = " + std::to_string(ell) +
        ", |a| = " + std::to_string(a.size()));
  }
  const auto cs = convergents(a);
  const auto& c = convergent_at(cs, static_cast<long>(ell));
  const auto& next = convergent_at(cs, static_cast<long>(ell) + 1);
  const RationalInterval alpha = enclose_continuations(cs);
  const RationalInterval lhs =
      (mpq_class(c.q) * alpha - RationalInterval::point(mpq_class(c.p))).abs();
  const mpq_class rhs = ratio(1, next.q);
  ApproxBoundResult res;
  res.holds = lhs.hi() < rhs;
  res.margin = rhs - lhs.hi();
  return res;
}

bool check_growth_bound(const FiniteWord& a, std::size_t ell, std::size_t h) {
  if (ell < 1 || h < 1 || ell + h > a.size()) {
    throw ContractError("growth bound needs ell, h >= 1 and ell + h <= |a|");
  }
  const auto cs = convergents(a);
  const mpz_class& q_low = convergent_at(cs, static_cast<long>(ell)).q;
  const mpz_class& q_high = convergent_at(cs, static_cast<long>(ell + h)).q;
  mpz_class lhs = q_high * q_high;
  mpz_class rhs = q_low * q_low;
  mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(),
               static_cast<mp_bitcnt_t>(h - 1));
  return lhs >= rhs;
}

bool mirror_formula(const FiniteWord& a, std::size_t ell) {
  if (ell < 1 || ell > a.size()) {
    throw ContractError("mirror formula needs 1 <= ell <= |a|");
  }
  const auto cs = convergents(a);
  const auto& at = convergent_at(cs, static_cast<long>(ell));
  const auto& before = convergent_at(cs, static_cast<long>(ell) - 1);
  const FiniteWord reversed = mirror(a.prefix(ell));
  return ratio(before.q, at.q) == finite_value(reversed);
}

QuadraticApproximant::QuadraticApproximant(FiniteWord preperiod,
                                           FiniteWord period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw ContractError("period must be non-empty");
  const long w = static_cast<long>(preperiod_.size());
  const long m = w + static_cast<long>(period_.size());
  const auto cs = convergents(concat(preperiod_, period_));
  const auto& cw1 = convergent_at(cs, w - 1);
  const auto& cw = convergent_at(cs, w);
  const auto& cm1 = convergent_at(cs, m - 1);
  const auto& cm = convergent_at(cs, m);
  a_ = cw1.q * cm.q - cw.q * cm1.q;
  b_ = cw1.q * cm.p - cw.q * cm1.p + cw1.p * cm.q - cw.p * cm1.q;
  c_ = cw1.p * cm.p - cw.p * cm1.p;
  bigint_guard::check(a_, "quadratic coefficient");

  // Isolate the root by deepening the enclosure of the unrolled expansion
  // until P changes sign across it (the Galois conjugate may share a loose
  // enclosure, so deepen until it is excluded).
  std::uint64_t reps = 2 + (2 * preperiod_.size()) / period_.size();
  for (int attempt = 0; attempt < 64; ++attempt) {
    FiniteWord unrolled = concat(preperiod_, integer_power(period_, reps));
    const RationalInterval enc = enclose_continuations(unrolled);
    const int slo = sign_at(enc.lo());
    const int shi = sign_at(enc.hi());
    if (slo != 0 && shi != 0 && slo != shi) {
      isolating_ = enc;
      return;
    }
    reps *= 2;
  }
  throw ContractError("failed to isolate the quadratic root");
}

int QuadraticApproximant::sign_at(const mpq_class& x) const {
  const mpq_class value = mpq_class(a_) * x * x - mpq_class(b_) * x + c_;
  return sgn(value);
}

mpz_class QuadraticApproximant::height() const {
  mpz_class h = ::abs(a_);
  h = std::max(h, mpz_class(::abs(b_)));
  h = std::max(h, mpz_class(::abs(c_)));
  return h;
}

mpz_class QuadraticApproximant::discriminant() const {
  return b_ * b_ - 4 * a_ * c_;
}

RationalInterval QuadraticApproximant::refine(const mpq_class& max_width) const {
  mpq_class lo = isolating_.lo();
  mpq_class hi = isolating_.hi();
  int slo = sign_at(lo);
  while (hi - lo > max_width) {
    mpq_class mid = (lo + hi) / 2;
    const int smid = sign_at(mid);
    if (smid == 0) return RationalInterval(mid, mid);
    if (smid == slo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  return RationalInterval(std::move(lo), std::move(hi));
}

RationalInterval QuadraticApproximant::truncation_enclosure(
    std::size_t min_length) const {
  std::uint64_t reps = 1;
  if (min_length > preperiod_.size()) {
    reps = (min_length - preperiod_.size() + period_.size() - 1) /
           period_.size();
    reps = std::max<std::uint64_t>(reps, 1);
  }
  return enclose_continuations(
      concat(preperiod_, integer_power(period_, reps)));
}

RationalInterval QuadraticApproximant::eval(const RationalInterval& x) const {
  return eval_quadratic(a_, b_, c_, x);
}

QuadraticApproximant periodic_value(const FiniteWord& preperiod,
                                    const FiniteWord& period) {
  return QuadraticApproximant(preperiod, period);
}

std::pair<mpz_class, mpz_class> last_convergent(const FiniteWord& a) {
  if (a.size() < 2) {
    throw ContractError("last convergent needs a word of length >= 2");
  }
  const auto cs = convergents(a);
  const auto& prev = cs[cs.size() - 2];
  return {prev.p, prev.q};
}

}  // namespace cfw
