#include <doctest.h>

#include <random>

#include "minkowski/numerics.hpp"
#include "oracles.hpp"

using namespace minkowski;

namespace {

BigReal num(const char* text, const PrecisionContext& ctx) { return BigReal::parse(text, ctx); }

Matrix from_rows(const std::vector<std::vector<long>>& rows, const PrecisionContext& ctx) {
  Matrix m(rows.size(), rows.front().size(), ctx);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = BigReal(rows[i][j], ctx);
  }
  return m;
}

}  // namespace

TEST_SUITE("numerics") {

TEST_CASE("precision context maps digits to bits") {
  const PrecisionContext ctx(100);
  CHECK(ctx.digits() == 100);
  CHECK(ctx.bits() >= 333);
  CHECK_THROWS_AS(PrecisionContext(9), InvalidArgument);
}

TEST_CASE("decimal strings round-trip exactly") {
  const PrecisionContext ctx(60);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    BigReal x = BigReal(static_cast<long>(rng() % 1000000 + 1), ctx) / static_cast<long>(rng() % 997 + 1);
    if (i % 2) x = -x;
    CHECK(BigReal::parse(x.to_string(), ctx) == x);
  }
  CHECK(BigReal(ctx).to_string() == "0");
  CHECK(num("0.5", ctx).to_string(3) == "5.00e-1");
  CHECK_THROWS_AS(BigReal::parse("1.5x", ctx), ParseError);
  CHECK_THROWS_AS(BigReal::parse("", ctx), ParseError);
}

TEST_CASE("rationals are canonical") {
  const Rational r(6, -8);
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("-2/6").to_string() == "-1/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), ParseError);
  CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("solve_dense on identity and diagonal systems") {
  const PrecisionContext ctx(30);
  const std::vector<BigReal> rhs{BigReal(1, ctx), BigReal(2, ctx), BigReal(3, ctx)};
  const auto x = solve_dense(Matrix::identity(3, ctx), rhs, ctx);
  for (std::size_t i = 0; i < 3; ++i) CHECK(x[i] == rhs[i]);

  const auto y = solve_dense(from_rows({{2, 0}, {0, 4}}, ctx), std::vector<BigReal>{BigReal(2, ctx), BigReal(2, ctx)}, ctx);
  CHECK(y[0] == BigReal(1, ctx));
  CHECK(y[1] == num("0.5", ctx));
}

TEST_CASE("Hilbert 3x3 matches exact rational elimination") {
  const PrecisionContext ctx(50);
  Matrix h(3, 3, ctx);
  oracle::QMatrix hq(3, std::vector<mpq_class>(3));
  std::vector<BigReal> rhs(3, BigReal(ctx));
  std::vector<mpq_class> rhs_q(3, 0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      hq[i][j] = mpq_class(1, static_cast<unsigned long>(i + j + 1));
      h(i, j) = BigReal::from_rational(Rational(hq[i][j]), ctx);
      rhs_q[i] += hq[i][j];
    }
    rhs[i] = BigReal::from_rational(Rational(rhs_q[i]), ctx);
  }
  const auto exact = oracle::exact_solve(hq, rhs_q);
  const auto x = solve_dense(h, rhs, ctx);
  const BigReal tol = pow10(-45, ctx);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(exact[i] == 1);
    CHECK(within(x[i], BigReal::from_rational(Rational(exact[i]), ctx), tol));
  }
}

TEST_CASE("random well-conditioned systems recover the solution") {
  const PrecisionContext ctx(60);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-1000, 1000);
  for (std::size_t n : {5u, 20u, 50u}) {
    Matrix a(n, n, ctx);
    std::vector<BigReal> x0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = BigReal(entry(rng), ctx) / 1000L;
      a(i, i) += BigReal(static_cast<long>(n), ctx);
      x0.push_back(BigReal(entry(rng), ctx) / 1000L);
    }
    const auto x = solve_dense(a, a.multiply(x0), ctx);
    for (std::size_t i = 0; i < n; ++i) CHECK(within(x[i], x0[i], pow10(-45, ctx)));
  }
}

TEST_CASE("solver input validation") {
  const PrecisionContext ctx(20);
  CHECK_THROWS_AS(solve_dense(Matrix(2, 3, ctx), std::vector<BigReal>(2, BigReal(ctx)), ctx), DimensionMismatch);
  CHECK_THROWS_AS(solve_dense(Matrix::identity(2, ctx), std::vector<BigReal>(3, BigReal(ctx)), ctx),
                  DimensionMismatch);
  CHECK_THROWS_AS(solve_dense(from_rows({{1, 2}, {2, 4}}, ctx), std::vector<BigReal>(2, BigReal(1, ctx)), ctx),
                  SingularMatrix);
  CHECK(determinant(from_rows({{1, 2}, {2, 4}}, ctx), ctx).is_zero());
  CHECK(determinant(from_rows({{1, 2}, {3, 4}}, ctx), ctx) == BigReal(-2, ctx));
}

TEST_CASE("pivot ties go to the lowest row") {
  const PrecisionContext ctx(20);
  const Matrix a = from_rows({{1, 1}, {-1, 1}}, ctx);
  const LuDecomposition lu(a, ctx);
  CHECK(lu.determinant() == BigReal(2, ctx));
  const auto x = lu.solve(std::vector<BigReal>{BigReal(2, ctx), BigReal(0, ctx)});
  CHECK(x[0] == BigReal(1, ctx));
  CHECK(x[1] == BigReal(1, ctx));
}

TEST_CASE("cond_inf") {
  const PrecisionContext ctx(30);
  CHECK(cond_inf(Matrix::identity(5, ctx), ctx) == BigReal(1, ctx));
  CHECK(cond_inf(from_rows({{1, 0}, {0, 10}}, ctx), ctx) == BigReal(10, ctx));

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(-9, 9);
  Matrix a(6, 6, ctx);
  Matrix scaled(6, 6, ctx);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      a(i, j) = BigReal(entry(rng) + (i == j ? 30 : 0), ctx);
      scaled(i, j) = a(i, j) * -7L;
    }
  }
  const BigReal c = cond_inf(a, ctx);
  CHECK(c >= BigReal(1, ctx));
  CHECK(within(cond_inf(scaled, ctx), c, pow10(-25, ctx)));
}

TEST_CASE("tridiagonal eigenvalues") {
  const PrecisionContext ctx(40);
  const BigReal half = num("0.5", ctx);
  auto one = tridiag_eigenvalues(std::vector<BigReal>{half}, {}, ctx);
  REQUIRE(one.size() == 1);
  CHECK(within(one[0], half, pow10(-30, ctx)));

  auto two = tridiag_eigenvalues(std::vector<BigReal>{BigReal(ctx), BigReal(ctx)},
                                 std::vector<BigReal>{BigReal(1, ctx)}, ctx);
  CHECK(within(two[0], BigReal(-1, ctx), pow10(-30, ctx)));
  CHECK(within(two[1], BigReal(1, ctx), pow10(-30, ctx)));

  // Uniform measure on [0, 1]: b = 1/2, a_1^2 = 1/12.
  auto legendre = tridiag_eigenvalues(std::vector<BigReal>{half, half},
                                      std::vector<BigReal>{sqrt(BigReal(1, ctx) / 12L)}, ctx);
  const BigReal offset = BigReal(1, ctx) / (sqrt(BigReal(3, ctx)) * 2L);
  CHECK(within(legendre[0], half - offset, pow10(-30, ctx)));
  CHECK(within(legendre[1], half + offset, pow10(-30, ctx)));

  CHECK_THROWS_AS(tridiag_eigenvalues(std::vector<BigReal>{half, half}, std::vector<BigReal>{BigReal(ctx)}, ctx),
                  NonPositiveOffdiagonal);
  CHECK_THROWS_AS(tridiag_eigenvalues(std::vector<BigReal>{half, half}, {}, ctx), DimensionMismatch);
}

TEST_CASE("eigenvalues are strictly increasing and match the trace") {
  const PrecisionContext ctx(50);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> entry(1, 100);
  std::vector<BigReal> d, e;
  BigReal trace(ctx);
  for (int i = 0; i < 15; ++i) {
    d.push_back(BigReal(entry(rng), ctx) / 100L);
    trace += d.back();
    if (i > 0) e.push_back(BigReal(entry(rng), ctx) / 100L);
  }
  const auto ev = tridiag_eigenvalues(d, e, ctx);
  BigReal sum(ctx);
  for (std::size_t i = 0; i < ev.size(); ++i) {
    sum += ev[i];
    if (i > 0) CHECK(ev[i] > ev[i - 1]);
  }
  CHECK(within(sum, trace, pow10(-35, ctx)));
}

TEST_CASE("operations are deterministic") {
  const PrecisionContext ctx(40);
  Matrix a(4, 4, ctx);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) a(i, j) = BigReal(1, ctx) / static_cast<long>(i + 2 * j + 1);
  }
  const std::vector<BigReal> rhs(4, BigReal(1, ctx));
  const auto x1 = solve_dense(a, rhs, ctx);
  const auto x2 = solve_dense(a, rhs, ctx);
  for (std::size_t i = 0; i < 4; ++i) CHECK(x1[i].to_string() == x2[i].to_string());
}

}  // TEST_SUITE
