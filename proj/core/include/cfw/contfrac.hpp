#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "cfw/rational_interval.hpp"
#include "cfw/word.hpp"

namespace cfw {

/// One row of the convergent table: p_ell / q_ell in lowest terms.
struct Convergent {
  long index = -1;  // ell, from -1
  mpz_class p;
  mpz_class q;
};

/// Convergent table for ell = -1 .. |a|, seeded p_{-1} = q_0 = 1 and
/// q_{-1} = p_0 = 0, advanced by q_ell = a_ell q_{ell-1} + q_{ell-2} (and the
/// same recurrence for p). Exact integer arithmetic throughout.
std::vector<Convergent> convergents(const FiniteWord& a);

/// cs[ell + 1], with range checking.
const Convergent& convergent_at(const std::vector<Convergent>& cs, long ell);

/// Value of the finite continued fraction [0; a_1, ..., a_L] as p_L / q_L.
mpq_class finite_value(const FiniteWord& a);

/// Interval with endpoints p_depth/q_depth and p_{depth+1}/q_{depth+1},
/// ordered. Any real whose expansion starts with a lies inside.
/// Requires 1 <= depth <= |a| - 1.
RationalInterval enclose_value(const FiniteWord& a, std::size_t depth);

/// Tight enclosure of every *infinite* continued fraction whose expansion
/// begins with a: endpoints p_L/q_L and the semiconvergent
/// (p_L + p_{L-1}) / (q_L + q_{L-1}). Strictly sharper than enclose_value at
/// full depth, which is what makes the strict classical bounds decidable.
RationalInterval enclose_continuations(const FiniteWord& a);
RationalInterval enclose_continuations(const std::vector<Convergent>& cs);

struct ApproxBoundResult {
  bool holds = false;
  mpq_class margin;  // (1/q_{ell+1}) minus the supremum of |q_ell a - p_ell|
};

/// |q_ell alpha - p_ell| < q_{ell+1}^{-1} over every infinite continuation
/// of a, decided exactly. Requires 1 <= ell <= |a| - 2; larger ell cannot be
/// bounded from the prefix and raises ContractError.
ApproxBoundResult check_approx_bound(const FiniteWord& a, std::size_t ell);

/// q_{ell+h} >= q_ell sqrt(2)^{h-1}, compared in the squared form
/// q_{ell+h}^2 >= q_ell^2 2^{h-1} to stay in exact integers.
/// Requires ell >= 1 and ell + h <= |a|.
bool check_growth_bound(const FiniteWord& a, std::size_t ell, std::size_t h);

/// q_{ell-1} / q_ell == [0; a_ell, ..., a_1], exact rational equality.
/// Requires 1 <= ell <= |a|.
bool mirror_formula(const FiniteWord& a, std::size_t ell);

/// The quadratic value alpha_n of the eventually periodic expansion with the
/// given preperiod W and period Z: a root of P(X) = A X^2 - B X + C with
///   A = q_{w-1} q_m - q_w q_{m-1}
///   B = q_{w-1} p_m - q_w p_{m-1} + p_{w-1} q_m - p_w q_{m-1}
///   C = p_{w-1} p_m - p_w p_{m-1}
/// where w = |W| and m = w + |Z|, all taken from the convergents of W Z.
/// The root inside the enclosure of the iterated expansion is selected by
/// exact sign evaluation; the isolating interval can be refined to any width
/// by bisection, still with exact signs.
class QuadraticApproximant {
 public:
  QuadraticApproximant(FiniteWord preperiod, FiniteWord period);

  const FiniteWord& preperiod() const noexcept { return preperiod_; }
  const FiniteWord& period() const noexcept { return period_; }
  const mpz_class& coeff_a() const noexcept { return a_; }
  const mpz_class& coeff_b() const noexcept { return b_; }
  const mpz_class& coeff_c() const noexcept { return c_; }
  mpz_class height() const;
  mpz_class discriminant() const;  // B^2 - 4AC

  const RationalInterval& isolating_interval() const noexcept {
    return isolating_;
  }

  /// Shrink the isolating interval below max_width by bisection.
  RationalInterval refine(const mpq_class& max_width) const;

  /// Enclosure of the value from the expansion unrolled to at least
  /// min_length letters; width is below q_{min_length}^{-2}.
  RationalInterval truncation_enclosure(std::size_t min_length) const;

  /// P evaluated over an interval.
  RationalInterval eval(const RationalInterval& x) const;

 private:
  int sign_at(const mpq_class& x) const;

  FiniteWord preperiod_;
  FiniteWord period_;
  mpz_class a_, b_, c_;
  RationalInterval isolating_;
};

/// Spec-facing name for the construction above.
QuadraticApproximant periodic_value(const FiniteWord& preperiod,
                                    const FiniteWord& period);

/// (p_{L-1}, q_{L-1}): the last convergent to [0; a] different from the
/// value itself. Requires |a| >= 2.
std::pair<mpz_class, mpz_class> last_convergent(const FiniteWord& a);

}  // namespace cfw
