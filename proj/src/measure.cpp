#include "minkowski/measure.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "minkowski/farey.hpp"
#include "minkowski/qfunc.hpp"

namespace minkowski {

namespace {

// Sums run with this many extra bits and are rounded once at the end, so
// that exact results (m_1 = 1/2 on symmetric node sets) come out exact.
constexpr mpfr_prec_t kAccumulatorGuardBits = 64;

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Rational> nodes, std::vector<Rational> weights,
                                 std::optional<int> level)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), level_(level) {
  if (nodes_.size() != weights_.size()) throw DimensionMismatch("nodes and weights differ in length");
  if (nodes_.empty()) throw InvalidArgument("a measure needs at least one node");
  Rational total;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (i > 0 && !(nodes_[i - 1] < nodes_[i])) throw InvalidArgument("nodes must be strictly increasing");
    if (weights_[i].value() <= 0) throw InvalidArgument("weights must be positive");
    total += weights_[i];
  }
  if (total != Rational(1)) throw InvalidArgument("weights must sum to 1, got " + total.to_string());
}

DiscreteMeasure empirical_measure(int level) {
  if (level < 1 || level > kMaxMeasureLevel) {
    throw LevelTooLarge("measure level must be in [1, " + std::to_string(kMaxMeasureLevel) + "], got " +
                        std::to_string(level));
  }
  MinkowskiSequence seq = minkowski_sequence(level);
  const Rational weight(1, static_cast<long>(seq.points.size()));
  std::vector<Rational> weights(seq.points.size(), weight);
  return DiscreteMeasure(std::move(seq.points), std::move(weights), level);
}

MomentVector discrete_moments(const DiscreteMeasure& mu, int k_max, const PrecisionContext& ctx) {
  if (k_max < 0) throw InvalidArgument("k_max must be nonnegative");
  const mpfr_prec_t wide = ctx.bits() + kAccumulatorGuardBits;
  const std::size_t n = mu.size();
  std::vector<BigReal> nodes;
  std::vector<BigReal> powers;  // w_i x_i^k
  nodes.reserve(n);
  powers.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes.emplace_back(wide);
    mpfr_set_q(nodes.back().get(), mu.nodes()[i].value().get_mpq_t(), MPFR_RNDN);
    powers.emplace_back(wide);
    mpfr_set_q(powers.back().get(), mu.weights()[i].value().get_mpq_t(), MPFR_RNDN);
  }

  MomentVector out;
  out.provenance = {MomentSource::kDiscrete, mu.level().value_or(0), 0, ctx.digits()};
  out.values.reserve(static_cast<std::size_t>(k_max) + 1);
  out.values.emplace_back(1, ctx);
  BigReal sum(wide);
  for (int k = 1; k <= k_max; ++k) {
    mpfr_set_zero(sum.get(), 1);
    for (std::size_t i = 0; i < n; ++i) {
      mpfr_mul(powers[i].get(), powers[i].get(), nodes[i].get(), MPFR_RNDN);
      mpfr_add(sum.get(), sum.get(), powers[i].get(), MPFR_RNDN);
    }
    out.values.emplace_back(ctx);
    mpfr_set(out.values.back().get(), sum.get(), MPFR_RNDN);
  }
  return out;
}

BigReal integrate(const DiscreteMeasure& mu, const std::function<BigReal(const BigReal&)>& f,
                  const PrecisionContext& ctx) {
  const mpfr_prec_t wide = ctx.bits() + kAccumulatorGuardBits;
  BigReal sum(wide);
  BigReal term(wide);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const BigReal value = f(BigReal::from_rational(mu.nodes()[i], ctx));
    mpfr_set_q(term.get(), mu.weights()[i].value().get_mpq_t(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), value.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  BigReal out(ctx);
  mpfr_set(out.get(), sum.get(), MPFR_RNDN);
  return out;
}

Rational sup_distance(int level) {
  if (level < 1 || level > 14) {
    throw LevelTooLarge("sup_distance level must be in [1, 14], got " + std::to_string(level));
  }
  const MinkowskiSequence seq = minkowski_sequence(level);
  const auto count = static_cast<long>(seq.points.size());
  Rational best;
  for (long i = 0; i < count; ++i) {
    const Rational q = q_rational(seq.points[static_cast<std::size_t>(i)]).value();
    const Rational before = abs(Rational(i, count) - q);     // q_N(x-)
    const Rational after = abs(Rational(i + 1, count) - q);  // q_N(x)
    if (before > best) best = before;
    if (after > best) best = after;
  }
  return best;
}

void write_measure_csv(std::ostream& out, const DiscreteMeasure& mu) {
  out << "node_num,node_den,weight_num,weight_den\n";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    out << mu.nodes()[i].num().get_str() << ',' << mu.nodes()[i].den().get_str() << ','
        << mu.weights()[i].num().get_str() << ',' << mu.weights()[i].den().get_str() << '\n';
  }
}

DiscreteMeasure read_measure_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "node_num,node_den,weight_num,weight_den") {
    throw ParseError("measure CSV must start with the header node_num,node_den,weight_num,weight_den");
  }
  std::vector<Rational> nodes;
  std::vector<Rational> weights;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 4) throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields");
    nodes.push_back(Rational::parse(fields[0] + "/" + fields[1]));
    weights.push_back(Rational::parse(fields[2] + "/" + fields[3]));
  }
  return DiscreteMeasure(std::move(nodes), std::move(weights));
}

}  // namespace minkowski
