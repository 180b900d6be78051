#pragma once

#include <gmpxx.h>

#include <string>

namespace cfw {

/// Result of comparing a whole interval against a bound. A flag is decided
/// only when the interval is entirely on one side; otherwise the enclosure
/// was too wide and the caller may deepen it.
enum class Outcome { pass, fail, indeterminate };

std::string to_string(Outcome o);

/// Closed interval with exact rational endpoints. Encloses one real value;
/// all arithmetic is outward-exact (no rounding exists in Q), so composed
/// intervals always contain the composed true value.
class RationalInterval {
 public:
  RationalInterval() = default;
  RationalInterval(mpq_class lo, mpq_class hi);
  static RationalInterval point(const mpq_class& x);

  const mpq_class& lo() const noexcept { return lo_; }
  const mpq_class& hi() const noexcept { return hi_; }
  mpq_class width() const { return hi_ - lo_; }
  mpq_class midpoint() const { return (hi_ + lo_) / 2; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const mpq_class& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RationalInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }

  RationalInterval operator+(const RationalInterval& o) const;
  RationalInterval operator-(const RationalInterval& o) const;
  RationalInterval operator*(const RationalInterval& o) const;
  RationalInterval operator-() const;
  RationalInterval abs() const;
  RationalInterval square() const;

  /// Entire interval <= bound / < bound?
  Outcome le(const mpq_class& bound) const;
  Outcome lt(const mpq_class& bound) const;

  std::string str() const;  // "[lo, hi]" with num/den endpoints

 private:
  mpq_class lo_ = 0;
  mpq_class hi_ = 0;
};

RationalInterval operator*(const mpq_class& scalar, const RationalInterval& i);
RationalInterval operator+(const mpq_class& scalar, const RationalInterval& i);
RationalInterval operator-(const mpq_class& scalar, const RationalInterval& i);

/// a x^2 - b x + c evaluated over an interval.
RationalInterval eval_quadratic(const mpz_class& a, const mpz_class& b,
                                const mpz_class& c, const RationalInterval& x);

}  // namespace cfw
