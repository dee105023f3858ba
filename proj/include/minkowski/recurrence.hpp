#pragma once

// Three-term recurrence coefficients of monic orthogonal polynomials,
//   P_{n+1}(x) = (x - b_n) P_n(x) - a_n^2 P_{n-1}(x),
// computed by the discretized Stieltjes procedure or by the Chebyshev
// algorithm, plus the diagnostics built on them.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "minkowski/measure.hpp"
#include "minkowski/moments.hpp"
#include "minkowski/numerics.hpp"

namespace minkowski {

enum class RecurrenceMethod { kStieltjes, kChebyshev, kExternal };

std::string to_string(RecurrenceMethod method);
RecurrenceMethod recurrence_method_from_string(const std::string& text);

struct RecurrenceCoefficients {
  std::vector<BigReal> b;   // b_0, b_1, ...
  std::vector<BigReal> a2;  // a_1^2, a_2^2, ...  (a2[k - 1] is a_k^2)
  RecurrenceMethod method = RecurrenceMethod::kExternal;
  std::string source;
  int digits = 0;
  /// b_0..b_{T-1} and a_1^2..a_{T-1}^2 are trusted, T = trusted_prefix.
  std::size_t trusted_prefix = 0;

  const BigReal& a_squared(std::size_t k) const { return a2.at(k - 1); }
  /// min(|b|, |a2| + 1): how far the two arrays run together.
  std::size_t length() const noexcept { return std::min(b.size(), a2.size() + 1); }
};

/// Discretized Stieltjes procedure: returns b_0..b_{n_max} and
/// a_1^2..a_{n_max}^2. Throws DegreeTooLarge if n_max >= |nodes| and
/// LostOrthogonality if a squared norm is not positive.
RecurrenceCoefficients stieltjes(const DiscreteMeasure& mu, int n_max, const PrecisionContext& ctx);

struct ChebyshevOptions {
  /// The measure is symmetric about 1/2, so b_k = 1/2 serves as an accuracy
  /// control when setting trusted_prefix.
  bool symmetric = true;
  /// The b_k control tolerance is 10^tolerance_exponent.
  int tolerance_exponent = -20;
};

/// Chebyshev algorithm on ordinary moments m_0..m_{2 n_max}. Produces
/// a_1^2..a_{n_max}^2 and b_0..b_{n_max-1}, plus b_{n_max} when m_{2 n_max + 1}
/// is available. Stops at the first nonpositive sigma_{k,k}, recording
/// trusted_prefix = k. Throws InsufficientMoments.
RecurrenceCoefficients chebyshev(const MomentVector& m, int n_max, const PrecisionContext& ctx);
RecurrenceCoefficients chebyshev(const MomentVector& m, int n_max, const PrecisionContext& ctx,
                                 const ChebyshevOptions& options);

/// P_n(x) by forward recurrence. Requires n < trusted_prefix.
BigReal eval_monic(const RecurrenceCoefficients& rc, std::size_t n, const BigReal& x,
                   const PrecisionContext& ctx);

/// g_k = (a_1^2 ... a_k^2)^(1/k) for k = 1..trusted_prefix-1, via the mean of
/// logarithms.
std::vector<BigReal> geometric_means(const RecurrenceCoefficients& rc);

/// Zeros of P_n: eigenvalues of the n x n Jacobi matrix. Requires
/// 1 <= n < trusted_prefix.
std::vector<BigReal> jacobi_zeros(const RecurrenceCoefficients& rc, std::size_t n,
                                  const PrecisionContext& ctx);

/// Smallest k with |b_k - 1/2| > tol, or with a_k^2 <= 0; length() if none.
std::size_t trusted_prefix_scan(const RecurrenceCoefficients& rc, const BigReal& tol);
/// Same with the default tolerance 1e-20.
std::size_t trusted_prefix_scan(const RecurrenceCoefficients& rc);

struct NevaiReport {
  std::size_t count = 0;                  // coefficients a_1^2..a_count^2 used
  std::vector<BigReal> running_mean;      // mean of a_1^2..a_k^2, k = 1..count
  BigReal mean;
  BigReal min;
  BigReal max;
  BigReal geometric_mean;                 // (a_1^2 ... a_count^2)^(1/count)
  BigReal max_b_deviation;                // max |b_k - 1/2| over the prefix
  BigReal capacity_squared;               // (cap [0,1])^2 = 1/16
  BigReal nevai_limit;                    // 1/4
};

/// Requires trusted_prefix >= 5.
NevaiReport nevai_diagnostics(const RecurrenceCoefficients& rc);

/// CSV "k,b_k,a2_k" (a2_k blank at k = 0), full-precision decimals.
void write_coefficients_csv(std::ostream& out, const RecurrenceCoefficients& rc);
/// Reads the CSV form. Method is kExternal and trusted_prefix comes from
/// trusted_prefix_scan.
RecurrenceCoefficients read_coefficients_csv(std::istream& in, const PrecisionContext& ctx);
/// JSON {"provenance": {...}, "trusted_prefix": T, "b": [...], "a2": [...]}.
void write_coefficients_json(std::ostream& out, const RecurrenceCoefficients& rc);
RecurrenceCoefficients read_coefficients_json(std::istream& in);

/// Two-column plot data "k,value".
void write_plot_data(std::ostream& out, const std::string& value_name,
                     const std::vector<BigReal>& values, std::size_t first_index);

}  // namespace minkowski
