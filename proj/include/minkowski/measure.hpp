#pragma once

// The empirical distribution q_N of the Minkowski sequence as an exact
// discrete measure.

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "minkowski/moments.hpp"
#include "minkowski/numerics.hpp"

namespace minkowski {

inline constexpr int kMaxMeasureLevel = 20;

/// Finite positive measure with exact rational nodes and weights summing to 1.
class DiscreteMeasure {
 public:
  /// Validates: equal lengths, nodes strictly increasing, weights positive
  /// with total mass exactly one.
  DiscreteMeasure(std::vector<Rational> nodes, std::vector<Rational> weights,
                  std::optional<int> level = std::nullopt);

  const std::vector<Rational>& nodes() const noexcept { return nodes_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  /// Minkowski level N for empirical measures, empty for custom ones.
  std::optional<int> level() const noexcept { return level_; }

 private:
  std::vector<Rational> nodes_;
  std::vector<Rational> weights_;
  std::optional<int> level_;
};

/// Uniform weights 1/(2^(N-1)+1) on M_N, 1 <= N <= 20.
DiscreteMeasure empirical_measure(int level);

/// m_k = sum_i w_i x_i^k for k = 0..k_max.
MomentVector discrete_moments(const DiscreteMeasure& mu, int k_max, const PrecisionContext& ctx);

/// sum_i w_i f(x_i), accumulated left to right.
BigReal integrate(const DiscreteMeasure& mu, const std::function<BigReal(const BigReal&)>& f,
                  const PrecisionContext& ctx);

/// max over [0, 1] of |q_N(x) - q(x)|, evaluated exactly at both one-sided
/// limits of every jump of q_N. 1 <= N <= 14.
Rational sup_distance(int level);

/// CSV with header "node_num,node_den,weight_num,weight_den".
void write_measure_csv(std::ostream& out, const DiscreteMeasure& mu);
DiscreteMeasure read_measure_csv(std::istream& in);

}  // namespace minkowski
