#pragma once

// Stern-Brocot machinery: mediants, the Minkowski sequences M_N and
// continued-fraction encoding of rationals.

#include <iosfwd>
#include <vector>

#include "minkowski/numerics.hpp"

namespace minkowski {

inline constexpr int kMaxSequenceLevel = 25;

/// Level-N Stern-Brocot point set: 2^(N-1)+1 increasing rationals from 0/1
/// to 1/1, consecutive entries being Farey neighbours.
struct MinkowskiSequence {
  int level = 1;
  std::vector<Rational> points;
};

/// (a + a') / (b + b'), canonicalized.
Rational mediant(const Rational& x, const Rational& y);

/// Builds M_N by interleaving mediants between the neighbours of M_{N-1}.
/// Throws LevelTooLarge outside 1 <= N <= 25.
MinkowskiSequence minkowski_sequence(int level);

/// Partial quotients [a1, ..., an] of r in (0, 1), last quotient >= 2 unless
/// n == 1. Throws OutOfRange otherwise.
std::vector<mpz_class> continued_fraction(const Rational& r);

/// Inverse of continued_fraction; accepts non-canonical expansions too.
Rational from_continued_fraction(const std::vector<mpz_class>& quotients);

/// CSV with header "index,numerator,denominator".
void write_sequence_csv(std::ostream& out, const MinkowskiSequence& seq);
/// JSON object {"level": N, "points": ["p/q", ...]}.
void write_sequence_json(std::ostream& out, const MinkowskiSequence& seq);

}  // namespace minkowski
