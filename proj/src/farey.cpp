#include "minkowski/farey.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>

namespace minkowski {

Rational mediant(const Rational& x, const Rational& y) {
  return Rational(x.num() + y.num(), x.den() + y.den());
}

MinkowskiSequence minkowski_sequence(int level) {
  if (level < 1 || level > kMaxSequenceLevel) {
    throw LevelTooLarge("sequence level must be in [1, " + std::to_string(kMaxSequenceLevel) +
                        "], got " + std::to_string(level));
  }
  MinkowskiSequence seq;
  seq.level = level;
  seq.points = {Rational(0), Rational(1)};
  for (int n = 2; n <= level; ++n) {
    std::vector<Rational> next;
    next.reserve(2 * seq.points.size() - 1);
    for (std::size_t i = 0; i + 1 < seq.points.size(); ++i) {
      next.push_back(seq.points[i]);
      next.push_back(mediant(seq.points[i], seq.points[i + 1]));
    }
    next.push_back(seq.points.back());
    seq.points = std::move(next);
  }
  return seq;
}

std::vector<mpz_class> continued_fraction(const Rational& r) {
  if (r.value() <= 0 || r.value() >= 1) {
    throw OutOfRange("continued_fraction needs 0 < r < 1, got " + r.to_string());
  }
  // r = 1 / (a1 + ...): run Euclid on (den, num).
  std::vector<mpz_class> quotients;
  mpz_class a = r.den();
  mpz_class b = r.num();
  mpz_class q;
  mpz_class rem;
  while (b != 0) {
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    quotients.push_back(q);
    a = b;
    b = rem;
  }
  return quotients;
}

Rational from_continued_fraction(const std::vector<mpz_class>& quotients) {
  if (quotients.empty()) throw InvalidArgument("empty continued fraction");
  // Backward evaluation of 1/(a1 + 1/(a2 + ...)).
  mpq_class value(0);
  for (auto it = quotients.rbegin(); it != quotients.rend(); ++it) {
    if (*it <= 0) throw InvalidArgument("partial quotients must be positive");
    value = 1 / (mpq_class(*it) + value);
  }
  return Rational(value);
}

void write_sequence_csv(std::ostream& out, const MinkowskiSequence& seq) {
  out << "index,numerator,denominator\n";
  for (std::size_t i = 0; i < seq.points.size(); ++i) {
    out << i << ',' << seq.points[i].num().get_str() << ',' << seq.points[i].den().get_str()
        << '\n';
  }
}

void write_sequence_json(std::ostream& out, const MinkowskiSequence& seq) {
  nlohmann::ordered_json doc;
  doc["level"] = seq.level;
  auto& points = doc["points"] = nlohmann::ordered_json::array();
  for (const Rational& p : seq.points) points.push_back(p.to_string());
  out << doc.dump(2) << '\n';
}

}  // namespace minkowski
