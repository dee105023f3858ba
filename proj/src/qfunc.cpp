#include "minkowski/qfunc.hpp"

#include <cmath>
#include <string>

#include "minkowski/farey.hpp"

namespace minkowski {

namespace {

bool is_power_of_two(const mpz_class& z) { return z > 0 && mpz_popcount(z.get_mpz_t()) == 1; }

void require_unit_interval(const Rational& r, const char* what) {
  if (r.value() < 0 || r.value() > 1) {
    throw OutOfRange(std::string(what) + " needs an argument in [0, 1], got " + r.to_string());
  }
}

}  // namespace

DyadicValue::DyadicValue(Rational value) : value_(std::move(value)) {
  if (value_.value() < 0 || value_.value() > 1) {
    throw OutOfRange("dyadic value outside [0, 1]: " + value_.to_string());
  }
  if (!is_power_of_two(value_.den())) {
    throw InvalidArgument("denominator is not a power of two: " + value_.to_string());
  }
}

unsigned long DyadicValue::exponent() const {
  return mpz_sizeinbase(value_.den().get_mpz_t(), 2) - 1;
}

Rational q_from_quotients(const std::vector<mpz_class>& quotients) {
  // 2 * sum (-1)^(k+1) 2^-S_k, accumulated over the common denominator 2^S_n.
  mpz_class partial = 0;
  std::vector<unsigned long> sums;
  sums.reserve(quotients.size());
  for (const mpz_class& a : quotients) {
    if (a <= 0) throw InvalidArgument("partial quotients must be positive");
    partial += a;
    if (!partial.fits_ulong_p()) throw OutOfRange("partial quotient sum too large");
    sums.push_back(partial.get_ui());
  }
  const unsigned long total = sums.back();
  mpz_class numerator = 0;
  mpz_class term;
  for (std::size_t k = 0; k < sums.size(); ++k) {
    mpz_ui_pow_ui(term.get_mpz_t(), 2, total - sums[k]);
    if (k % 2 == 0) {
      numerator += term;
    } else {
      numerator -= term;
    }
  }
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 2, total);
  return Rational(2 * numerator, denominator);
}

DyadicValue q_rational(const Rational& r) {
  require_unit_interval(r, "q_rational");
  if (r.value() == 0) return DyadicValue(Rational(0));
  if (r.value() == 1) return DyadicValue(Rational(1));
  return DyadicValue(q_from_quotients(continued_fraction(r)));
}

BigReal q_real(const BigReal& x, const PrecisionContext& ctx) {
  if (x.sign() < 0 || x > BigReal(1, ctx)) {
    throw OutOfRange("q_real needs an argument in [0, 1], got " + x.to_string(20));
  }
  BigReal result(ctx);
  if (x.is_zero()) return result;
  if (x == BigReal(1, ctx)) return BigReal(1, ctx);

  // Working precision ~1.5x the output precision.
  const mpfr_prec_t work_bits = ctx.bits() + ctx.bits() / 2 + 64;
  const double budget = ctx.digits() * 3.321928094887362 + 10.0;

  BigReal y(work_bits);
  mpfr_set(y.get(), x.get(), MPFR_RNDN);
  BigReal reciprocal(work_bits);
  BigReal quotient(work_bits);
  BigReal sum(work_bits);
  BigReal term(work_bits);
  long quotient_sum = 0;
  int sign = 1;
  for (;;) {
    mpfr_ui_div(reciprocal.get(), 1, y.get(), MPFR_RNDN);
    mpfr_floor(quotient.get(), reciprocal.get());
    if (quotient.sign() <= 0) break;
    if (mpfr_cmp_d(quotient.get(), budget - static_cast<double>(quotient_sum)) > 0) break;
    quotient_sum += mpfr_get_si(quotient.get(), MPFR_RNDN);
    mpfr_set_ui_2exp(term.get(), 1, -quotient_sum, MPFR_RNDN);
    if (sign > 0) {
      mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    } else {
      mpfr_sub(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    }
    sign = -sign;
    mpfr_sub(y.get(), reciprocal.get(), quotient.get(), MPFR_RNDN);
    if (y.is_zero()) break;
  }
  mpfr_mul_2ui(sum.get(), sum.get(), 1, MPFR_RNDN);
  mpfr_set(result.get(), sum.get(), MPFR_RNDN);
  return result;
}

Rational ifs_evaluate(const Rational& x, int depth) {
  require_unit_interval(x, "ifs_evaluate");
  if (depth < 0 || depth > 64) throw OutOfRange("ifs depth must be in [0, 64]");
  // Unroll q_n(x) = s * q_{n-1}(T(x)) + t into an affine accumulator.
  const mpq_class half(1, 2);
  mpq_class scale = 1;
  mpq_class offset = 0;
  mpq_class point = x.value();
  for (int level = 0; level < depth; ++level) {
    if (point <= half) {
      // q(x) = q(x/(1-x)) / 2
      point = point / (1 - point);
      scale *= half;
    } else {
      // q(x) = 1 - q((1-x)/x) / 2
      point = (1 - point) / point;
      offset += scale;
      scale *= -half;
    }
  }
  return Rational(mpq_class(offset + scale * point));
}

DyadicValue q_gap(const Rational& a, const Rational& b) {
  if (!(a < b)) throw EmptyInterval("q_gap needs a < b, got [" + a.to_string() + ", " + b.to_string() + "]");
  require_unit_interval(a, "q_gap");
  require_unit_interval(b, "q_gap");
  return DyadicValue(q_rational(b).value() - q_rational(a).value());
}

}  // namespace minkowski
