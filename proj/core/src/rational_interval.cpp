#include "cfw/rational_interval.hpp"

#include <algorithm>

#include "cfw/errors.hpp"

namespace cfw {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

RationalInterval::RationalInterval(mpq_class lo, mpq_class hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw ContractError("interval endpoints out of order");
}

RationalInterval RationalInterval::point(const mpq_class& x) {
  return RationalInterval(x, x);
}

RationalInterval RationalInterval::operator+(const RationalInterval& o) const {
  return RationalInterval(lo_ + o.lo_, hi_ + o.hi_);
}

RationalInterval RationalInterval::operator-(const RationalInterval& o) const {
  return RationalInterval(lo_ - o.hi_, hi_ - o.lo_);
}

RationalInterval RationalInterval::operator*(const RationalInterval& o) const {
  const mpq_class a = lo_ * o.lo_;
  const mpq_class b = lo_ * o.hi_;
  const mpq_class c = hi_ * o.lo_;
  const mpq_class d = hi_ * o.hi_;
  return RationalInterval(std::min({a, b, c, d}), std::max({a, b, c, d}));
}

RationalInterval RationalInterval::operator-() const {
  return RationalInterval(-hi_, -lo_);
}

RationalInterval RationalInterval::abs() const {
  if (lo_ >= 0) return *this;
  if (hi_ <= 0) return RationalInterval(-hi_, -lo_);
  return RationalInterval(0, std::max<mpq_class>(-lo_, hi_));
}

RationalInterval RationalInterval::square() const {
  if (lo_ >= 0) return RationalInterval(lo_ * lo_, hi_ * hi_);
  if (hi_ <= 0) return RationalInterval(hi_ * hi_, lo_ * lo_);
  return RationalInterval(0, std::max<mpq_class>(lo_ * lo_, hi_ * hi_));
}

Outcome RationalInterval::le(const mpq_class& bound) const {
  if (hi_ <= bound) return Outcome::pass;
  if (lo_ > bound) return Outcome::fail;
  return Outcome::indeterminate;
}

Outcome RationalInterval::lt(const mpq_class& bound) const {
  if (hi_ < bound) return Outcome::pass;
  if (lo_ >= bound) return Outcome::fail;
  return Outcome::indeterminate;
}

std::string RationalInterval::str() const {
  return "[" + lo_.get_str() + ", " + hi_.get_str() + "]";
}

RationalInterval operator*(const mpq_class& scalar,
                           const RationalInterval& i) {
  return RationalInterval::point(scalar) * i;
}

RationalInterval operator+(const mpq_class& scalar,
                           const RationalInterval& i) {
  return RationalInterval::point(scalar) + i;
}

RationalInterval operator-(const mpq_class& scalar,
                           const RationalInterval& i) {
  return RationalInterval::point(scalar) - i;
}

RationalInterval eval_quadratic(const mpz_class& a, const mpz_class& b,
                                const mpz_class& c,
                                const RationalInterval& x) {
  const RationalInterval sq = x.square();
  return mpq_class(a) * sq - mpq_class(b) * x + RationalInterval::point(mpq_class(c));
}

}  // namespace cfw
