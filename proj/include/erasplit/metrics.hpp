#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "erasplit/dataset.hpp"

namespace erasplit {

double mse(std::span<const double> pred, std::span<const double> target);

// Sample Pearson coefficient. Throws DataError when either vector is
// constant (zero variance) or shorter than 2.
double pearson(std::span<const double> pred, std::span<const double> target);

// Fraction of rows where round-half-away-from-zero(pred), clamped into
// {0, 1}, equals the target. Targets must be exactly 0 or 1.
double accuracy(std::span<const double> pred, std::span<const double> target);

struct EraCorr {
  std::vector<double> per_era;
  double mean = 0.0;
  double std_dev = 0.0;  // sample (n-1); 0 when fewer than 2 eras
  std::optional<double> sharpe;  // mean / std_dev, absent when std_dev = 0
};

// Pearson per era slice, then mean / sample std / their ratio. Throws
// DataError naming the era when a slice is degenerate (fewer than 2 rows or
// constant pred/target inside the slice).
EraCorr era_wise_corr(std::span<const double> pred,
                      std::span<const double> target,
                      std::span<const std::int32_t> eras, int n_eras);

struct MetricReport {
  double mse = 0.0;
  double pearson_corr = 0.0;
  std::optional<double> accuracy;  // only for {0,1} targets
  double era_corr_mean = 0.0;
  double era_corr_std = 0.0;
  std::optional<double> corr_sharpe;
  std::vector<double> per_era_corrs;
};

// Bundles every metric against a dataset's targets and eras; accuracy is
// filled only when the targets are all exactly 0 or 1.
MetricReport compute_metrics(std::span<const double> pred,
                             const Dataset& data);

}  // namespace erasplit
