#include <doctest.h>

#include <random>

#include "cfw/bigint_guard.hpp"
#include "cfw/contfrac.hpp"
#include "cfw/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cfw;

namespace {

mpq_class qq(long num, long den) {
  mpq_class v(num, den);
  v.canonicalize();
  return v;
}

}  // namespace

TEST_CASE("convergent table for [1,2,3]") {
  const auto cs = convergents(FiniteWord{1, 2, 3});
  REQUIRE(cs.size() == 5);
  const long expect_q[] = {0, 1, 1, 3, 10};
  const long expect_p[] = {1, 0, 1, 2, 7};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(cs[i].index == static_cast<long>(i) - 1);
    CHECK(cs[i].q == expect_q[i]);
    CHECK(cs[i].p == expect_p[i]);
  }
  CHECK(finite_value(FiniteWord{1, 2, 3}) == qq(7, 10));
  CHECK(finite_value(FiniteWord{1, 2, 3}) ==
        oracle::nested_fraction_value(FiniteWord{1, 2, 3}));
}

TEST_CASE("single quotient and Fibonacci denominators") {
  const auto single = convergents(FiniteWord{1});
  CHECK(single.back().p == 1);
  CHECK(single.back().q == 1);

  const auto fib = convergents(FiniteWord{1, 1, 1, 1, 1});
  const long expect_q[] = {0, 1, 1, 2, 3, 5, 8};
  for (std::size_t i = 0; i < 7; ++i) CHECK(fib[i].q == expect_q[i]);
}

TEST_CASE("convergents are coprime with alternating determinant") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 200; ++it) {
    const std::size_t len = 1 + rng() % 50;
    const FiniteWord a = fixtures::random_word(rng, len, 1000000);
    const auto cs = convergents(a);
    CHECK(finite_value(a) == oracle::nested_fraction_value(a));
    for (long ell = 0; ell <= static_cast<long>(len); ++ell) {
      const auto& cur = convergent_at(cs, ell);
      const auto& prev = convergent_at(cs, ell - 1);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), cur.p.get_mpz_t(), cur.q.get_mpz_t());
      CHECK(g == 1);
      const mpz_class det = prev.p * cur.q - cur.p * prev.q;
      const mpz_class absdet(::abs(det));
      CHECK(absdet == 1);
      if (ell >= 2) CHECK(cur.q > prev.q);
    }
  }
}

TEST_CASE("enclose_value brackets the golden ratio conjugate") {
  std::vector<Letter> ones(20, 1);
  const FiniteWord a(std::move(ones));
  const RationalInterval box = enclose_value(a, 18);
  CHECK(box.width() < qq(1, 10000000));
  // The target is the positive root of X^2 + X - 1; a sign change across the
  // interval certifies enclosure without any decimal approximation.
  const auto f = [](const mpq_class& x) -> mpq_class { return x * x + x - 1; };
  const mpq_class product = f(box.lo()) * f(box.hi());
  CHECK(product < 0);
}

TEST_CASE("enclose_value examples and bounds") {
  CHECK(enclose_value(FiniteWord{2, 2}, 1).lo() == qq(2, 5));
  CHECK(enclose_value(FiniteWord{2, 2}, 1).hi() == qq(1, 2));

  const FiniteWord a{1, 2, 3, 1, 2};
  const auto cs = convergents(a);
  const RationalInterval deepest = enclose_value(a, a.size() - 1);
  const mpq_class end1(convergent_at(cs, 4).p, convergent_at(cs, 4).q);
  const mpq_class end2(convergent_at(cs, 5).p, convergent_at(cs, 5).q);
  CHECK(deepest.contains(end1));
  CHECK(deepest.contains(end2));
  CHECK_THROWS_AS(enclose_value(a, 0), ContractError);
  CHECK_THROWS_AS(enclose_value(a, a.size()), ContractError);
}

TEST_CASE("continuation enclosure contains every extension value") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    const FiniteWord a = fixtures::random_word(rng, 2 + rng() % 12, 6);
    const RationalInterval box = enclose_continuations(a);
    FiniteWord longer = concat(a, fixtures::random_word(rng, 1 + rng() % 8, 6));
    CHECK(box.contains(oracle::nested_fraction_value(longer)));
    CHECK(box.contains(enclose_continuations(longer)));
  }
}

TEST_CASE("approximation bound always holds with positive margin") {
  const auto r1 = check_approx_bound(FiniteWord{1, 2, 3, 4, 5}, 2);
  CHECK(r1.holds);
  CHECK(r1.margin > 0);
  CHECK(check_approx_bound(FiniteWord{1, 1, 1, 1, 1, 1}, 3).holds);
  CHECK_THROWS_AS(check_approx_bound(FiniteWord{1, 2, 3}, 2), ContractError);

  std::mt19937_64 rng(17);
  for (int it = 0; it < 100; ++it) {
    const FiniteWord a = fixtures::random_word(rng, 3 + rng() % 30, 1000);
    for (std::size_t ell = 1; ell + 2 <= a.size(); ++ell) {
      CHECK(check_approx_bound(a, ell).holds);
    }
  }
}

TEST_CASE("growth bound in squared form") {
  std::vector<Letter> ones(10, 1);
  CHECK(check_growth_bound(FiniteWord(std::vector<Letter>(ones)), 1, 8));
  CHECK(check_growth_bound(FiniteWord{1, 2, 3, 4}, 2, 1));  // h = 1 case

  std::mt19937_64 rng(23);
  for (int it = 0; it < 1000; ++it) {
    const std::size_t len = 2 + rng() % 30;
    const FiniteWord a = fixtures::random_word(rng, len, 5);
    const std::size_t ell = 1 + rng() % (len - 1);
    const std::size_t h = 1 + rng() % (len - ell);
    CHECK(check_growth_bound(a, ell, h));
  }
}

TEST_CASE("mirror identity") {
  CHECK(mirror_formula(FiniteWord{1, 2, 3}, 3));
  CHECK(mirror_formula(FiniteWord{7, 3, 1}, 1));  // q_0/q_1 = 1/a_1

  std::mt19937_64 rng(31);
  for (int it = 0; it < 100; ++it) {
    const FiniteWord a = fixtures::random_word(rng, 1 + rng() % 30, 100);
    for (std::size_t ell = 1; ell <= a.size(); ++ell) {
      CHECK(mirror_formula(a, ell));
    }
  }
}

TEST_CASE("periodic_value of the golden conjugate") {
  const QuadraticApproximant golden = periodic_value(FiniteWord{}, FiniteWord{1});
  CHECK(golden.coeff_a() == -1);
  CHECK(golden.coeff_b() == 1);
  CHECK(golden.coeff_c() == 1);
  CHECK(golden.discriminant() == 5);

  // The root sits inside the 200-term truncation enclosure.
  const RationalInterval deep = golden.truncation_enclosure(200);
  const RationalInterval at = golden.eval(deep);
  CHECK(at.contains(0));
  CHECK(deep.lo() > 0);
  CHECK(deep.hi() < 1);

  const RationalInterval tight = golden.refine(qq(1, 1000000));
  CHECK(tight.width() <= qq(1, 1000000));
  CHECK(golden.eval(tight).contains(0));
}

TEST_CASE("periodic_value coefficients for [0; 2, (1,1)...]") {
  // Hand computation: convergents of 2,1,1 are 1/2, 1/3, 2/5, so
  // A = 1*5 - 2*3 = -1, B = 1*2 - 2*1 + 0*5 - 1*3 = -3, C = 0*2 - 1*1 = -1,
  // giving -X^2 + 3X - 1 with root (3 - sqrt 5)/2.
  const QuadraticApproximant x = periodic_value(FiniteWord{2}, FiniteWord{1, 1});
  CHECK(x.coeff_a() == -1);
  CHECK(x.coeff_b() == -3);
  CHECK(x.coeff_c() == -1);
  CHECK(x.discriminant() == 5);
  CHECK(x.height() == 3);
}

TEST_CASE("periodic_value matches deep truncations") {
  const QuadraticApproximant x = periodic_value(FiniteWord{2}, FiniteWord{1, 1});
  const FiniteWord unrolled = concat(
      FiniteWord{2}, oracle::concat_truncate_power(FiniteWord{1, 1}, 50, 1));
  const RationalInterval enc = enclose_continuations(unrolled);
  // Sign change across the 100-term truncation enclosure: the root is there.
  const auto sign = [&](const mpq_class& v) {
    const mpq_class val =
        mpq_class(x.coeff_a()) * v * v - mpq_class(x.coeff_b()) * v + x.coeff_c();
    return sgn(val);
  };
  CHECK(sign(enc.lo()) * sign(enc.hi()) < 0);
}

TEST_CASE("height bound and root enclosure on random periodic pairs") {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 100; ++it) {
    const FiniteWord pre = fixtures::random_word(rng, rng() % 7, 5);
    const FiniteWord per = fixtures::random_word(rng, 1 + rng() % 6, 5);
    const QuadraticApproximant ap = periodic_value(pre, per);

    const auto cs = convergents(concat(pre, per));
    const long w = static_cast<long>(pre.size());
    const long m = w + static_cast<long>(per.size());
    const mpz_class bound =
        2 * convergent_at(cs, w).q * convergent_at(cs, m).q;
    CHECK(ap.height() <= bound);

    CHECK(ap.eval(ap.truncation_enclosure(150)).contains(0));
    CHECK(ap.isolating_interval().lo() > 0);
    CHECK(ap.isolating_interval().hi() < 1);
  }
  CHECK_THROWS_AS(periodic_value(FiniteWord{1}, FiniteWord{}), ContractError);
}

TEST_CASE("last convergent") {
  const auto [p1, q1] = last_convergent(FiniteWord{1, 2, 3});
  CHECK(p1 == 2);
  CHECK(q1 == 3);
  const auto [p2, q2] = last_convergent(FiniteWord{1, 1});
  CHECK(p2 == 1);
  CHECK(q2 == 1);
  const auto [p3, q3] = last_convergent(FiniteWord{5, 5});
  CHECK(p3 == 1);
  CHECK(q3 == 5);
  CHECK_THROWS_AS(last_convergent(FiniteWord{1}), ContractError);
}

TEST_CASE("bigint cap aborts oversized convergents") {
  bigint_guard::set_max_bits(64);
  std::vector<Letter> big(20, 1000000);
  CHECK_THROWS_AS(convergents(FiniteWord(std::vector<Letter>(big))),
                  BigintCapError);
  bigint_guard::set_max_bits(std::nullopt);
  CHECK_NOTHROW(convergents(FiniteWord(std::vector<Letter>(big))));
}
