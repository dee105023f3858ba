#pragma once

// Moments of the Minkowski measure from truncations of two infinite linear
// systems:
//   A:  m_s = sum_{k>=0} (-1)^k c_{k+s} C(k+s-1, k) m_k,  c_k = sum_n 2^-n n^-k
//   B:  m_s = sum_{k>=0}        d_{k+s} C(k+s-1, k) m_k,  d_k = 2 c_k - 1
// for s >= 1 with m_0 = 1.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minkowski/numerics.hpp"

namespace minkowski {

enum class MomentSource { kSystemA, kSystemB, kDiscrete, kExternal };

std::string to_string(MomentSource source);
MomentSource moment_source_from_string(const std::string& text);

struct MomentProvenance {
  MomentSource source = MomentSource::kExternal;
  /// System size K for A/B, Minkowski level N for discrete moments.
  int size = 0;
  int series_terms = 0;
  int digits = 0;

  friend bool operator==(const MomentProvenance&, const MomentProvenance&) = default;
};

/// m_0..m_K with where they came from.
struct MomentVector {
  std::vector<BigReal> values;
  MomentProvenance provenance;

  std::size_t size() const noexcept { return values.size(); }
  const BigReal& operator[](std::size_t k) const { return values[k]; }
};

/// Memoizes c_k for one (terms, digits) pair.
class SeriesCache {
 public:
  SeriesCache(int terms, const PrecisionContext& ctx);

  const BigReal& c(int k);
  BigReal d(int k) { return c(k) * 2L - BigReal(1, ctx_); }
  int terms() const noexcept { return terms_; }

 private:
  int terms_;
  PrecisionContext ctx_;
  std::map<int, BigReal> values_;
};

/// sum_{n=1}^{terms} 1 / (2^n n^k).
BigReal c_series(int k, int terms, const PrecisionContext& ctx);
/// 2 c_series(k, terms) - 1.
BigReal d_series(int k, int terms, const PrecisionContext& ctx);

enum class MomentSystem { kA, kB };

struct LinearSystem {
  Matrix matrix;
  std::vector<BigReal> rhs;
};

/// K x K system for the unknowns m_1..m_K; the k = 0 term is on the rhs.
LinearSystem assemble_system(MomentSystem variant, int size, int terms,
                             const PrecisionContext& ctx);

struct MomentSolveOptions {
  MomentSystem variant = MomentSystem::kA;
  int size = 500;
  int terms = 400;
};

/// Solves the truncated system and prepends m_0 = 1.
MomentVector solve_moments(const MomentSolveOptions& options, const PrecisionContext& ctx);

struct MomentReport {
  bool m0_is_one = false;
  bool m1_within_tolerance = false;
  bool nonincreasing = false;
  /// Leading Hankel determinants det(m_{i+j})_{i,j<n} for n = 1..6 (as far
  /// as the vector reaches).
  std::vector<BigReal> hankel_determinants;
  bool hankel_positive = false;
  BigReal m1_error;

  bool ok() const noexcept { return m0_is_one && m1_within_tolerance && nonincreasing && hankel_positive; }
};

MomentReport validate_moments(const MomentVector& m, const BigReal& m1_tolerance,
                              const PrecisionContext& ctx);

/// Number of leading nines of |m_1| after "0.4", i.e. floor(-log10|m_1 - 1/2|)
/// for m_1 below 1/2. Used as the accuracy gauge.
int m1_accuracy_digits(const MomentVector& m, const PrecisionContext& ctx);

/// JSON cache document: {"provenance": {...}, "values": ["...", ...]}.
void write_moments_json(std::ostream& out, const MomentVector& m);
MomentVector read_moments_json(std::istream& in, const PrecisionContext& ctx);

}  // namespace minkowski
