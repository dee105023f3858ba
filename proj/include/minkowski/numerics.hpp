#pragma once

// Arbitrary-precision substrate: exact rationals (GMP), decimal-parameterized
// binary floats (MPFR), dense LU solving and symmetric tridiagonal spectra.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "minkowski/errors.hpp"

namespace minkowski {

/// Working precision, expressed in decimal digits. Rounding is always
/// round-to-nearest-even.
class PrecisionContext {
 public:
  explicit PrecisionContext(int digits);

  int digits() const noexcept { return digits_; }
  /// Binary precision backing `digits` decimal digits, plus guard bits.
  mpfr_prec_t bits() const noexcept { return bits_; }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int digits_;
  mpfr_prec_t bits_;
};

class Rational;

/// Real number at a fixed binary precision. Binary operations round to the
/// larger of the two operand precisions.
class BigReal {
 public:
  explicit BigReal(const PrecisionContext& ctx);
  BigReal(long value, const PrecisionContext& ctx);
  explicit BigReal(mpfr_prec_t bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  /// Accepts anything mpfr_strtofr accepts in base 10 ("0.5", "-1.25e-7").
  static BigReal parse(std::string_view text, const PrecisionContext& ctx);
  static BigReal from_rational(const Rational& r, const PrecisionContext& ctx);
  static BigReal from_integer(const mpz_class& z, const PrecisionContext& ctx);
  /// 2^exponent, exact.
  static BigReal pow2(long exponent, const PrecisionContext& ctx);

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  int sign() const noexcept { return mpfr_sgn(value_); }
  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Base-2 exponent e such that 0.5 <= |x| / 2^e < 1 (x nonzero).
  long exponent() const noexcept { return mpfr_get_exp(value_); }

  /// Scientific notation with enough decimal digits to round-trip exactly.
  std::string to_string() const;
  /// Scientific notation with `significant` digits.
  std::string to_string(std::size_t significant) const;
  /// Fixed-point notation with `decimals` digits after the point.
  std::string to_fixed(int decimals) const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
  friend BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }
  BigReal operator-() const;

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_equal_p(a.value_, b.value_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

 private:
  void grow_to(mpfr_prec_t bits);

  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
/// Compares |a - b| against `tol`.
bool within(const BigReal& a, const BigReal& b, const BigReal& tol);
/// 10^exponent at the context's precision.
BigReal pow10(long exponent, const PrecisionContext& ctx);

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long num, long den = 1);  // NOLINT(google-explicit-constructor)
  Rational(mpz_class num, mpz_class den);
  explicit Rational(mpq_class value);

  /// "p/q" or an integer "p". Whitespace is not accepted.
  static Rational parse(std::string_view text);

  mpz_class num() const { return value_.get_num(); }
  mpz_class den() const { return value_.get_den(); }
  const mpq_class& value() const noexcept { return value_; }

  std::string to_string() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& r);

/// Dense row-major matrix of BigReal at a single precision.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const PrecisionContext& ctx);

  static Matrix identity(std::size_t n, const PrecisionContext& ctx);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigReal& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigReal& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Max absolute row sum.
  BigReal norm_inf() const;
  std::vector<BigReal> multiply(std::span<const BigReal> x) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigReal> data_;
};

/// LU factorization with partial pivoting (max magnitude, ties to the lowest
/// row index). A pivot smaller than 10^(-digits+5) relative to the largest
/// entry of the input raises SingularMatrix.
class LuDecomposition {
 public:
  LuDecomposition(Matrix a, const PrecisionContext& ctx);

  std::size_t size() const noexcept { return lu_.rows(); }
  std::vector<BigReal> solve(std::span<const BigReal> rhs) const;
  Matrix inverse() const;
  BigReal determinant() const;
  /// Smallest |pivot| divided by the largest input entry.
  const BigReal& min_relative_pivot() const noexcept { return min_relative_pivot_; }

 private:
  PrecisionContext ctx_;
  Matrix lu_;
  std::vector<std::size_t> perm_;
  int perm_sign_ = 1;
  BigReal min_relative_pivot_;
};

std::vector<BigReal> solve_dense(const Matrix& a, std::span<const BigReal> rhs,
                                 const PrecisionContext& ctx);

/// ||A||_inf * ||A^-1||_inf via the explicit inverse. Limited to n <= 600.
BigReal cond_inf(const Matrix& a, const PrecisionContext& ctx);

BigReal determinant(const Matrix& a, const PrecisionContext& ctx);

/// Ascending eigenvalues of the symmetric tridiagonal matrix with the given
/// diagonal and strictly positive off-diagonal, by Sturm-sequence bisection
/// to an absolute tolerance of 10^(-digits+10).
std::vector<BigReal> tridiag_eigenvalues(std::span<const BigReal> diag,
                                         std::span<const BigReal> offdiag,
                                         const PrecisionContext& ctx);

}  // namespace minkowski
