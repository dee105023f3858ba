#pragma once

// Minkowski's question mark function q on [0, 1].

#include "minkowski/numerics.hpp"

namespace minkowski {

/// A rational in [0, 1] whose denominator is a power of two.
class DyadicValue {
 public:
  explicit DyadicValue(Rational value);

  const Rational& value() const noexcept { return value_; }
  /// j such that the denominator is 2^j.
  unsigned long exponent() const;

  friend bool operator==(const DyadicValue&, const DyadicValue&) = default;

 private:
  Rational value_;
};

/// Exact q(r) from the finite continued-fraction sum. Throws OutOfRange
/// unless 0 <= r <= 1.
DyadicValue q_rational(const Rational& r);

/// Evaluates 2 * sum_k (-1)^(k+1) 2^-(a1+...+ak) for an arbitrary expansion
/// (canonical or not) of a number in (0, 1).
Rational q_from_quotients(const std::vector<mpz_class>& quotients);

/// q(x) for real x. The continued-fraction expansion stops once the
/// accumulated quotient sum passes digits*log2(10) + 10, so the dropped tail
/// is below the context resolution. No rationality detection is attempted.
BigReal q_real(const BigReal& x, const PrecisionContext& ctx);

/// n-fold iterate of the two-branch self-similarity map applied to the
/// uniform distribution q_0(t) = t, in exact arithmetic. depth <= 64.
Rational ifs_evaluate(const Rational& x, int depth);

/// q(b) - q(a). Throws EmptyInterval unless a < b.
DyadicValue q_gap(const Rational& a, const Rational& b);

}  // namespace minkowski
