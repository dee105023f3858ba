#include <doctest.h>

#include <sstream>

#include "minkowski/measure.hpp"

using namespace minkowski;

TEST_SUITE("measure") {

TEST_CASE("empirical measures") {
  const auto mu = empirical_measure(2);
  REQUIRE(mu.size() == 3);
  CHECK(mu.nodes()[1] == Rational(1, 2));
  for (const auto& w : mu.weights()) CHECK(w == Rational(1, 3));
  CHECK(mu.level() == 2);
  CHECK(empirical_measure(10).size() == 513);
  for (int n = 1; n <= 12; ++n) {
    const auto level_n = empirical_measure(n);
    Rational total;
    for (const auto& w : level_n.weights()) total += w;
    CHECK(total == Rational(1));
  }
  CHECK_THROWS_AS(empirical_measure(0), LevelTooLarge);
  CHECK_THROWS_AS(empirical_measure(21), LevelTooLarge);
}

TEST_CASE("measure validation") {
  using V = std::vector<Rational>;
  CHECK_THROWS_AS(DiscreteMeasure(V{Rational(0)}, V{}), DimensionMismatch);
  CHECK_THROWS_AS(DiscreteMeasure(V{Rational(1), Rational(0)}, V{Rational(1, 2), Rational(1, 2)}), InvalidArgument);
  CHECK_THROWS_AS(DiscreteMeasure(V{Rational(0), Rational(1)}, V{Rational(1, 2), Rational(1, 3)}), InvalidArgument);
  CHECK_THROWS_AS(DiscreteMeasure(V{Rational(0), Rational(1)}, V{Rational(3, 2), Rational(-1, 2)}), InvalidArgument);
  CHECK_NOTHROW(DiscreteMeasure(V{Rational(0), Rational(1)}, V{Rational(1, 4), Rational(3, 4)}));
}

TEST_CASE("discrete moments") {
  const PrecisionContext ctx(50);
  const auto m2 = discrete_moments(empirical_measure(2), 4, ctx);
  REQUIRE(m2.size() == 5);
  CHECK(m2[0] == BigReal(1, ctx));
  CHECK(within(m2[2], BigReal(5, ctx) / 12L, pow10(-48, ctx)));
  CHECK(m2.provenance.source == MomentSource::kDiscrete);

  for (int n = 1; n <= 12; ++n) {
    const auto m = discrete_moments(empirical_measure(n), 12, ctx);
    CHECK(m[1] == BigReal::parse("0.5", ctx));
    bool nonincreasing = true;
    for (std::size_t k = 1; k < m.size(); ++k) nonincreasing = nonincreasing && m[k] <= m[k - 1];
    CHECK(nonincreasing);
  }
}

TEST_CASE("m_2 of q_N approaches the limit monotonically") {
  const PrecisionContext ctx(40);
  const BigReal limit = BigReal::parse("0.29092647642930873638069776273912029008043710219559", ctx);
  BigReal last_gap(1, ctx);
  for (int n = 6; n <= 12; ++n) {
    const BigReal gap = abs(discrete_moments(empirical_measure(n), 2, ctx)[2] - limit);
    CHECK(gap < last_gap);
    last_gap = gap;
  }
}

TEST_CASE("integration") {
  const PrecisionContext ctx(30);
  const auto mu = empirical_measure(3);
  const BigReal mean = integrate(mu, [](const BigReal& x) { return x; }, ctx);
  CHECK(mean == BigReal::parse("0.5", ctx));
  const BigReal one = integrate(mu, [&](const BigReal&) { return BigReal(1, ctx); }, ctx);
  CHECK(within(one, BigReal(1, ctx), pow10(-28, ctx)));
}

TEST_CASE("sup distance closed form for N <= 12") {
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(sup_distance(n) == Rational(mpz_class(1), (mpz_class(1) << (n - 1)) + 1));
  }
  CHECK(sup_distance(2) == Rational(1, 3));
  CHECK(sup_distance(5) == Rational(1, 17));
  CHECK_THROWS_AS(sup_distance(15), LevelTooLarge);
}

TEST_CASE("measure CSV round trip") {
  const auto mu = empirical_measure(4);
  std::stringstream buf;
  write_measure_csv(buf, mu);
  const auto back = read_measure_csv(buf);
  CHECK(back.nodes() == mu.nodes());
  CHECK(back.weights() == mu.weights());

  std::istringstream bad("node_num,node_den,weight_num,weight_den\n0,1,1\n");
  CHECK_THROWS_AS(read_measure_csv(bad), ParseError);
  std::istringstream header("nodes\n");
  CHECK_THROWS_AS(read_measure_csv(header), ParseError);
}

}  // TEST_SUITE
