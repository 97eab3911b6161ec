#include "erasplit/split_criteria.hpp"

#include <algorithm>
#include <cmath>

#include "erasplit/common.hpp"

namespace erasplit {

double partition_score(const GradAggregate& agg, double l2) {
  const double denom = agg.sum_hess + l2;
  if (denom <= 0.0) {
    if (agg.count == 0 && l2 > 0.0) {
      return 0.0;
    }
    throw UndefinedScoreError(
        "partition_score: zero denominator (empty partition, no L2 term)");
  }
  return agg.sum_grad * agg.sum_grad / denom;
}

double original_gain(const GradAggregate& parent, const GradAggregate& left,
                     const GradAggregate& right, double l2) {
  return 0.5 * (partition_score(left, l2) + partition_score(right, l2) -
                partition_score(parent, l2));
}

std::optional<double> era_gain(const GradAggregate& parent_j,
                               const GradAggregate& left_j,
                               const GradAggregate& right_j, double l2) {
  if (left_j.count == 0 || right_j.count == 0) {
    return std::nullopt;
  }
  return original_gain(parent_j, left_j, right_j, l2);
}

double boltzmann(std::span<const double> values, const BoltzmannAlpha& alpha) {
  if (values.empty()) {
    throw DataError("boltzmann: empty input");
  }
  switch (alpha.mode) {
    case BoltzmannAlpha::Mode::kExactMin:
      return *std::min_element(values.begin(), values.end());
    case BoltzmannAlpha::Mode::kExactMax:
      return *std::max_element(values.begin(), values.end());
    case BoltzmannAlpha::Mode::kFinite:
      break;
  }
  const double a = alpha.value;
  double shift = a * values[0];
  for (double v : values) {
    shift = std::max(shift, a * v);
  }
  double num = 0.0;
  double den = 0.0;
  for (double v : values) {
    const double w = std::exp(a * v - shift);
    num += v * w;
    den += w;
  }
  return num / den;
}

std::optional<double> era_split_score(
    std::span<const std::optional<double>> era_gains,
    const BoltzmannAlpha& alpha) {
  std::vector<double> defined;
  defined.reserve(era_gains.size());
  for (const auto& g : era_gains) {
    if (!g.has_value()) {
      return std::nullopt;
    }
    defined.push_back(*g);
  }
  return boltzmann(defined, alpha);
}

int split_direction(double v_l, double v_r) {
  if (v_l > v_r) {
    return 1;
  }
  if (v_l < v_r) {
    return -1;
  }
  return 0;
}

std::optional<double> directional_score(
    std::span<const std::optional<int>> directions) {
  long long sum = 0;
  for (const auto& d : directions) {
    if (!d.has_value()) {
      return std::nullopt;
    }
    sum += *d;
  }
  return static_cast<double>(std::llabs(sum)) /
         static_cast<double>(directions.size());
}

}  // namespace erasplit
