#include "minkowski/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <memory>
#include <utility>

namespace minkowski {

namespace {

constexpr double kLog2Of10 = 3.321928094887362347870319429489390175864831393;
constexpr mpfr_prec_t kGuardBits = 8;

struct MpfrStringDeleter {
  void operator()(char* s) const noexcept { mpfr_free_str(s); }
};

bool is_digit_run(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class parse_integer(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!is_digit_run(body)) throw ParseError("not an integer: '" + std::string(text) + "'");
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  return mpz_class(owned, 10);
}

}  // namespace

// ---------------------------------------------------------------- context

PrecisionContext::PrecisionContext(int digits) : digits_(digits) {
  if (digits < 10) throw InvalidArgument("precision must be at least 10 digits");
  bits_ = static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + kGuardBits;
}

// ---------------------------------------------------------------- BigReal

BigReal::BigReal(const PrecisionContext& ctx) : BigReal(ctx.bits()) {}

BigReal::BigReal(long value, const PrecisionContext& ctx) : BigReal(ctx.bits()) {
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::parse(std::string_view text, const PrecisionContext& ctx) {
  std::string owned(text);
  BigReal out(ctx);
  char* end = nullptr;
  if (owned.empty()) throw ParseError("empty number");
  mpfr_strtofr(out.value_, owned.c_str(), &end, 10, MPFR_RNDN);
  if (end != owned.c_str() + owned.size()) throw ParseError("not a decimal number: '" + owned + "'");
  if (!mpfr_number_p(out.value_)) throw ParseError("not a finite number: '" + owned + "'");
  return out;
}

BigReal BigReal::from_rational(const Rational& r, const PrecisionContext& ctx) {
  BigReal out(ctx);
  mpfr_set_q(out.value_, r.value().get_mpq_t(), MPFR_RNDN);
  return out;
}

BigReal BigReal::from_integer(const mpz_class& z, const PrecisionContext& ctx) {
  BigReal out(ctx);
  mpfr_set_z(out.value_, z.get_mpz_t(), MPFR_RNDN);
  return out;
}

BigReal BigReal::pow2(long exponent, const PrecisionContext& ctx) {
  BigReal out(ctx);
  mpfr_set_ui_2exp(out.value_, 1, exponent, MPFR_RNDN);
  return out;
}

std::string BigReal::to_string() const {
  return to_string(mpfr_get_str_ndigits(10, precision()));
}

std::string BigReal::to_string(std::size_t significant) const {
  if (mpfr_zero_p(value_)) return "0";
  if (!mpfr_number_p(value_)) return mpfr_nan_p(value_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, MpfrStringDeleter> raw(
      mpfr_get_str(nullptr, &exp10, 10, significant, value_, MPFR_RNDN));
  std::string digits(raw.get());
  std::string out;
  if (!digits.empty() && digits.front() == '-') {
    out.push_back('-');
    digits.erase(0, 1);
  }
  // value = 0.DIGITS * 10^exp10 = D.IGITS * 10^(exp10 - 1)
  out.push_back(digits.front());
  if (digits.size() > 1) {
    out.push_back('.');
    out.append(digits, 1, std::string::npos);
  }
  out.push_back('e');
  out += std::to_string(static_cast<long>(exp10) - 1);
  return out;
}

std::string BigReal::to_fixed(int decimals) const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*RNf", decimals, value_) < 0) return "nan";
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

void BigReal::grow_to(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, MPFR_RNDN);
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  grow_to(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  grow_to(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  grow_to(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  grow_to(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal out(*this);
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigReal abs(const BigReal& x) {
  BigReal out(x);
  mpfr_abs(out.get(), out.get(), MPFR_RNDN);
  return out;
}

BigReal sqrt(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal log(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_log(out.get(), x.get(), MPFR_RNDN);
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_exp(out.get(), x.get(), MPFR_RNDN);
  return out;
}

bool within(const BigReal& a, const BigReal& b, const BigReal& tol) {
  return abs(a - b) <= tol;
}

BigReal pow10(long exponent, const PrecisionContext& ctx) {
  BigReal out(ctx);
  mpfr_ui_pow_ui(out.get(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent),
                 MPFR_RNDN);
  if (exponent < 0) mpfr_ui_div(out.get(), 1, out.get(), MPFR_RNDN);
  return out;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  value_ = mpq_class(mpz_class(num), mpz_class(den));
  value_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  value_ = mpq_class(std::move(num), std::move(den));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw InvalidArgument("zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text), mpz_class(1));
  mpz_class num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!is_digit_run(den_text)) throw ParseError("bad denominator in '" + std::string(text) + "'");
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(std::move(num), std::move(den));
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.value_ == 0) throw InvalidArgument("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.value() < 0 ? -r : r; }

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, const PrecisionContext& ctx)
    : rows_(rows), cols_(cols), data_(rows * cols, BigReal(ctx)) {}

Matrix Matrix::identity(std::size_t n, const PrecisionContext& ctx) {
  Matrix m(n, n, ctx);
  for (std::size_t i = 0; i < n; ++i) mpfr_set_ui(m(i, i).get(), 1, MPFR_RNDN);
  return m;
}

BigReal Matrix::norm_inf() const {
  BigReal best(data_.empty() ? MPFR_PREC_MIN : data_.front().precision());
  BigReal row_sum(best.precision());
  for (std::size_t i = 0; i < rows_; ++i) {
    mpfr_set_zero(row_sum.get(), 1);
    for (std::size_t j = 0; j < cols_; ++j) {
      const BigReal& x = (*this)(i, j);
      if (x.sign() < 0) {
        mpfr_sub(row_sum.get(), row_sum.get(), x.get(), MPFR_RNDN);
      } else {
        mpfr_add(row_sum.get(), row_sum.get(), x.get(), MPFR_RNDN);
      }
    }
    if (row_sum > best) best = row_sum;
  }
  return best;
}

std::vector<BigReal> Matrix::multiply(std::span<const BigReal> x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  const mpfr_prec_t bits = data_.empty() ? MPFR_PREC_MIN : data_.front().precision();
  std::vector<BigReal> out(rows_, BigReal(bits));
  BigReal tmp(bits);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      mpfr_mul(tmp.get(), (*this)(i, j).get(), x[j].get(), MPFR_RNDN);
      mpfr_add(out[i].get(), out[i].get(), tmp.get(), MPFR_RNDN);
    }
  }
  return out;
}

// ---------------------------------------------------------------- LU

LuDecomposition::LuDecomposition(Matrix a, const PrecisionContext& ctx)
    : ctx_(ctx), lu_(std::move(a)), min_relative_pivot_(ctx) {
  const std::size_t n = lu_.rows();
  if (lu_.cols() != n) throw DimensionMismatch("LU requires a square matrix");
  perm_.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
  if (n == 0) return;

  BigReal scale(ctx);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (mpfr_cmpabs(lu_(i, j).get(), scale.get()) > 0) mpfr_abs(scale.get(), lu_(i, j).get(), MPFR_RNDN);
    }
  }
  if (scale.is_zero()) throw SingularMatrix("zero matrix");
  const BigReal threshold = scale * pow10(-(ctx.digits() - 5), ctx);
  mpfr_set_inf(min_relative_pivot_.get(), 1);

  BigReal factor(ctx);
  BigReal tmp(ctx);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (mpfr_cmpabs(lu_(i, k).get(), lu_(pivot_row, k).get()) > 0) pivot_row = i;
    }
    if (mpfr_cmpabs(lu_(pivot_row, k).get(), threshold.get()) < 0) {
      throw SingularMatrix("pivot " + std::to_string(k) + " below 10^-" +
                           std::to_string(ctx.digits() - 5) + " relative to the largest entry");
    }
    if (pivot_row != k) {
      for (std::size_t j = 0; j < n; ++j) mpfr_swap(lu_(k, j).get(), lu_(pivot_row, j).get());
      std::swap(perm_[k], perm_[pivot_row]);
      perm_sign_ = -perm_sign_;
    }
    const BigReal& pivot = lu_(k, k);
    mpfr_div(tmp.get(), pivot.get(), scale.get(), MPFR_RNDN);
    mpfr_abs(tmp.get(), tmp.get(), MPFR_RNDN);
    if (tmp < min_relative_pivot_) min_relative_pivot_ = tmp;

    for (std::size_t i = k + 1; i < n; ++i) {
      if (lu_(i, k).is_zero()) continue;
      mpfr_div(factor.get(), lu_(i, k).get(), pivot.get(), MPFR_RNDN);
      mpfr_set(lu_(i, k).get(), factor.get(), MPFR_RNDN);
      for (std::size_t j = k + 1; j < n; ++j) {
        mpfr_mul(tmp.get(), factor.get(), lu_(k, j).get(), MPFR_RNDN);
        mpfr_sub(lu_(i, j).get(), lu_(i, j).get(), tmp.get(), MPFR_RNDN);
      }
    }
  }
}

std::vector<BigReal> LuDecomposition::solve(std::span<const BigReal> rhs) const {
  const std::size_t n = size();
  if (rhs.size() != n) throw DimensionMismatch("right-hand side length does not match matrix");
  std::vector<BigReal> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    x.emplace_back(ctx_);
    mpfr_set(x.back().get(), rhs[perm_[i]].get(), MPFR_RNDN);
  }
  BigReal tmp(ctx_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      mpfr_mul(tmp.get(), lu_(i, j).get(), x[j].get(), MPFR_RNDN);
      mpfr_sub(x[i].get(), x[i].get(), tmp.get(), MPFR_RNDN);
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) {
      mpfr_mul(tmp.get(), lu_(i, j).get(), x[j].get(), MPFR_RNDN);
      mpfr_sub(x[i].get(), x[i].get(), tmp.get(), MPFR_RNDN);
    }
    mpfr_div(x[i].get(), x[i].get(), lu_(i, i).get(), MPFR_RNDN);
  }
  return x;
}

Matrix LuDecomposition::inverse() const {
  const std::size_t n = size();
  Matrix inv(n, n, ctx_);
  std::vector<BigReal> unit(n, BigReal(ctx_));
  for (std::size_t j = 0; j < n; ++j) {
    mpfr_set_ui(unit[j].get(), 1, MPFR_RNDN);
    std::vector<BigReal> column = solve(unit);
    mpfr_set_zero(unit[j].get(), 1);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = std::move(column[i]);
  }
  return inv;
}

BigReal LuDecomposition::determinant() const {
  BigReal det(perm_sign_, ctx_);
  for (std::size_t i = 0; i < size(); ++i) det *= lu_(i, i);
  return det;
}

std::vector<BigReal> solve_dense(const Matrix& a, std::span<const BigReal> rhs,
                                 const PrecisionContext& ctx) {
  if (a.rows() != a.cols()) throw DimensionMismatch("solve_dense requires a square matrix");
  if (rhs.size() != a.rows()) throw DimensionMismatch("right-hand side length does not match matrix");
  return LuDecomposition(a, ctx).solve(rhs);
}

BigReal cond_inf(const Matrix& a, const PrecisionContext& ctx) {
  if (a.rows() != a.cols()) throw DimensionMismatch("cond_inf requires a square matrix");
  if (a.rows() > 600) throw InvalidArgument("cond_inf is limited to n <= 600");
  const LuDecomposition lu(a, ctx);
  return a.norm_inf() * lu.inverse().norm_inf();
}

BigReal determinant(const Matrix& a, const PrecisionContext& ctx) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant requires a square matrix");
  try {
    return LuDecomposition(a, ctx).determinant();
  } catch (const SingularMatrix&) {
    return BigReal(ctx);
  }
}

// ---------------------------------------------------------------- eigenvalues

namespace {

// Number of eigenvalues strictly below x (Sturm sequence of the LDL^T pivots).
std::size_t count_below(std::span<const BigReal> diag, std::span<const BigReal> off_sq,
                        const BigReal& x, const BigReal& tiny, BigReal& q, BigReal& tmp) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    mpfr_sub(q.get(), diag[i].get(), x.get(), MPFR_RNDN);
    if (i > 0) {
      mpfr_div(tmp.get(), off_sq[i - 1].get(), tmp.get(), MPFR_RNDN);
      mpfr_sub(q.get(), q.get(), tmp.get(), MPFR_RNDN);
    }
    if (q.is_zero()) mpfr_neg(q.get(), tiny.get(), MPFR_RNDN);
    if (q.sign() < 0) ++count;
    mpfr_set(tmp.get(), q.get(), MPFR_RNDN);
  }
  return count;
}

}  // namespace

std::vector<BigReal> tridiag_eigenvalues(std::span<const BigReal> diag,
                                         std::span<const BigReal> offdiag,
                                         const PrecisionContext& ctx) {
  const std::size_t n = diag.size();
  if (n == 0) {
    if (!offdiag.empty()) throw DimensionMismatch("off-diagonal given for an empty matrix");
    return {};
  }
  if (offdiag.size() + 1 != n) throw DimensionMismatch("off-diagonal length must be n - 1");
  for (std::size_t i = 0; i < offdiag.size(); ++i) {
    if (offdiag[i].sign() <= 0) {
      throw NonPositiveOffdiagonal("off-diagonal entry " + std::to_string(i) + " is not positive");
    }
  }

  std::vector<BigReal> diag_w;
  std::vector<BigReal> off_sq;
  diag_w.reserve(n);
  for (const BigReal& d : diag) {
    diag_w.emplace_back(ctx);
    mpfr_set(diag_w.back().get(), d.get(), MPFR_RNDN);
  }
  for (const BigReal& e : offdiag) {
    off_sq.emplace_back(ctx);
    mpfr_sqr(off_sq.back().get(), e.get(), MPFR_RNDN);
  }

  // Gershgorin enclosure.
  BigReal lo(ctx);
  BigReal hi(ctx);
  for (std::size_t i = 0; i < n; ++i) {
    BigReal radius(ctx);
    if (i > 0) radius += offdiag[i - 1];
    if (i + 1 < n) radius += offdiag[i];
    BigReal left = diag_w[i] - radius;
    BigReal right = diag_w[i] + radius;
    if (i == 0 || left < lo) lo = left;
    if (i == 0 || right > hi) hi = right;
  }
  const BigReal tol = pow10(-(ctx.digits() - 10), ctx);
  const BigReal tiny = pow10(-(2 * ctx.digits()), ctx);

  std::vector<BigReal> out;
  out.reserve(n);
  BigReal q(ctx), tmp(ctx), mid(ctx), width(ctx);
  for (std::size_t k = 0; k < n; ++k) {
    // Find x with exactly k eigenvalues below and k+1 at or below.
    BigReal left = lo;
    BigReal right = hi;
    for (;;) {
      mpfr_sub(width.get(), right.get(), left.get(), MPFR_RNDN);
      if (width <= tol) break;
      mpfr_add(mid.get(), left.get(), right.get(), MPFR_RNDN);
      mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
      if (mid <= left || mid >= right) break;
      if (count_below(diag_w, off_sq, mid, tiny, q, tmp) > k) {
        right = mid;
      } else {
        left = mid;
      }
    }
    mpfr_add(mid.get(), left.get(), right.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    out.push_back(mid);
  }
  return out;
}

}  // namespace minkowski
