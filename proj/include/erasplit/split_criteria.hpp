#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "erasplit/config.hpp"

namespace erasplit {

// Division by a zero denominator in a partition score: an empty partition
// with no L2 term. Callers are expected to guard; reaching this is a logic
// bug, not bad input.
class UndefinedScoreError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Sums of gradients/hessians over one set of rows. Squared-error regression
// has constant unit hessians, so sum_hess always equals count; both are kept
// because the scoring formulas are written against sum_hess.
struct GradAggregate {
  double sum_grad = 0.0;
  double sum_hess = 0.0;
  std::int64_t count = 0;

  void add(double grad) {
    sum_grad += grad;
    sum_hess += 1.0;
    count += 1;
  }

  GradAggregate& operator+=(const GradAggregate& o) {
    sum_grad += o.sum_grad;
    sum_hess += o.sum_hess;
    count += o.count;
    return *this;
  }

  GradAggregate& operator-=(const GradAggregate& o) {
    sum_grad -= o.sum_grad;
    sum_hess -= o.sum_hess;
    count -= o.count;
    return *this;
  }
};

inline GradAggregate operator+(GradAggregate a, const GradAggregate& b) {
  return a += b;
}
inline GradAggregate operator-(GradAggregate a, const GradAggregate& b) {
  return a -= b;
}

// One evaluated split proposal: rows with bin <= bin_threshold go left.
// score is criterion-specific; pooled_gain is always the original-criterion
// gain for the same partition. Per-era entries are nullopt where the era has
// an empty child.
struct SplitCandidate {
  int feature_index = -1;
  int bin_threshold = -1;
  double score = 0.0;
  double pooled_gain = 0.0;
  std::vector<std::optional<double>> per_era_gains;
  std::vector<std::optional<int>> per_era_directions;
  double left_value = 0.0;
  double right_value = 0.0;
};

// (sum_grad)^2 / (sum_hess + lambda). An empty partition scores 0 when
// lambda > 0 and throws UndefinedScoreError when lambda = 0.
double partition_score(const GradAggregate& agg, double l2);

// Pooled gain: 1/2 [ S(left) + S(right) - S(parent) ]. May be negative when
// lambda > 0.
double original_gain(const GradAggregate& parent, const GradAggregate& left,
                     const GradAggregate& right, double l2);

// Same formula restricted to one era's rows; nullopt when either child holds
// no rows of that era.
std::optional<double> era_gain(const GradAggregate& parent_j,
                               const GradAggregate& left_j,
                               const GradAggregate& right_j, double l2);

// Boltzmann operator: sum x_i e^{alpha x_i} / sum e^{alpha x_i}, evaluated
// with max-shifted exponentials. alpha = 0 is the arithmetic mean; the
// exact-min/max modes take the true extreme with no exponentials.
double boltzmann(std::span<const double> values, const BoltzmannAlpha& alpha);

// Aggregates per-era gains into one score. nullopt (reject) if any era's
// gain is undefined; splits must be defined in every era.
std::optional<double> era_split_score(
    std::span<const std::optional<double>> era_gains,
    const BoltzmannAlpha& alpha);

// sign(v_l - v_r); exact ties give 0.
int split_direction(double v_l, double v_r);

// |sum of directions| / M in [0, 1]. nullopt (reject) if any era's direction
// is undefined, mirroring era_split_score.
std::optional<double> directional_score(
    std::span<const std::optional<int>> directions);

}  // namespace erasplit
