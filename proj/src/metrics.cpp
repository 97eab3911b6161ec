#include "erasplit/metrics.hpp"

#include <cmath>
#include <string>

#include "erasplit/common.hpp"

namespace erasplit {

namespace {

void check_lengths(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DataError("metric inputs disagree on length: " +
                    std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()));
  }
  if (a.empty()) {
    throw DataError("metric inputs are empty");
  }
}

}  // namespace

double mse(std::span<const double> pred, std::span<const double> target) {
  check_lengths(pred, target);
  double acc = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = target[i] - pred[i];
    acc += d * d;
  }
  return acc / static_cast<double>(pred.size());
}

double pearson(std::span<const double> pred, std::span<const double> target) {
  check_lengths(pred, target);
  if (pred.size() < 2) {
    throw DataError("pearson: need at least 2 rows");
  }
  const double n = static_cast<double>(pred.size());
  double mean_p = 0.0;
  double mean_t = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    mean_p += pred[i];
    mean_t += target[i];
  }
  mean_p /= n;
  mean_t /= n;
  double cov = 0.0;
  double var_p = 0.0;
  double var_t = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double dp = pred[i] - mean_p;
    const double dt = target[i] - mean_t;
    cov += dp * dt;
    var_p += dp * dp;
    var_t += dt * dt;
  }
  if (var_p == 0.0 || var_t == 0.0) {
    throw DataError("pearson: undefined for a constant vector");
  }
  return cov / std::sqrt(var_p * var_t);
}

double accuracy(std::span<const double> pred, std::span<const double> target) {
  check_lengths(pred, target);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (target[i] != 0.0 && target[i] != 1.0) {
      throw DataError("accuracy: target at row " + std::to_string(i) +
                      " is not 0 or 1");
    }
    double rounded = std::round(pred[i]);
    rounded = std::min(1.0, std::max(0.0, rounded));
    if (rounded == target[i]) {
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(pred.size());
}

EraCorr era_wise_corr(std::span<const double> pred,
                      std::span<const double> target,
                      std::span<const std::int32_t> eras, int n_eras) {
  check_lengths(pred, target);
  if (eras.size() != pred.size()) {
    throw DataError("era_wise_corr: era vector length mismatch");
  }
  if (n_eras < 1) {
    throw DataError("era_wise_corr: need at least one era");
  }

  EraCorr out;
  out.per_era.reserve(static_cast<std::size_t>(n_eras));
  std::vector<double> p_slice;
  std::vector<double> t_slice;
  for (int j = 0; j < n_eras; ++j) {
    p_slice.clear();
    t_slice.clear();
    for (std::size_t i = 0; i < pred.size(); ++i) {
      if (eras[i] == j) {
        p_slice.push_back(pred[i]);
        t_slice.push_back(target[i]);
      }
    }
    try {
      out.per_era.push_back(pearson(p_slice, t_slice));
    } catch (const DataError& e) {
      throw DataError("era " + std::to_string(j) + ": " + e.what());
    }
  }

  double sum = 0.0;
  for (double c : out.per_era) {
    sum += c;
  }
  out.mean = sum / static_cast<double>(out.per_era.size());
  if (out.per_era.size() >= 2) {
    double ss = 0.0;
    for (double c : out.per_era) {
      ss += (c - out.mean) * (c - out.mean);
    }
    out.std_dev =
        std::sqrt(ss / static_cast<double>(out.per_era.size() - 1));
  }
  if (out.std_dev > 0.0) {
    out.sharpe = out.mean / out.std_dev;
  }
  return out;
}

MetricReport compute_metrics(std::span<const double> pred,
                             const Dataset& data) {
  MetricReport report;
  report.mse = mse(pred, data.targets);
  report.pearson_corr = pearson(pred, data.targets);

  bool binary = true;
  for (double y : data.targets) {
    if (y != 0.0 && y != 1.0) {
      binary = false;
      break;
    }
  }
  if (binary) {
    report.accuracy = accuracy(pred, data.targets);
  }

  const EraCorr era = era_wise_corr(pred, data.targets, data.eras, data.n_eras);
  report.era_corr_mean = era.mean;
  report.era_corr_std = era.std_dev;
  report.corr_sharpe = era.sharpe;
  report.per_era_corrs = era.per_era;
  return report;
}

}  // namespace erasplit
