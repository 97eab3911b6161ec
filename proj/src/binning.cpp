#include "erasplit/binning.hpp"

#include <algorithm>

#include "erasplit/common.hpp"

namespace erasplit {

FeatureBins compute_bin_edges(std::span<const double> values, int max_bins) {
  if (values.empty()) {
    throw DataError("compute_bin_edges: empty value vector");
  }
  if (max_bins < 2) {
    throw ConfigError("max_bins: must be >= 2");
  }

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<double> distinct;
  distinct.reserve(sorted.size());
  for (double v : sorted) {
    if (distinct.empty() || v != distinct.back()) {
      distinct.push_back(v);
    }
  }

  FeatureBins out;
  if (distinct.size() <= static_cast<std::size_t>(max_bins)) {
    out.edges.reserve(distinct.size() - 1);
    for (std::size_t i = 0; i + 1 < distinct.size(); ++i) {
      out.edges.push_back(0.5 * (distinct[i] + distinct[i + 1]));
    }
    return out;
  }

  const std::size_t n = sorted.size();
  const std::size_t b = static_cast<std::size_t>(max_bins);
  for (std::size_t k = 1; k < b; ++k) {
    std::size_t rank = (k * n) / b;  // 1 <= rank <= n-1 since b <= n
    double edge = 0.5 * (sorted[rank - 1] + sorted[rank]);
    if (out.edges.empty() || edge > out.edges.back()) {
      out.edges.push_back(edge);
    }
  }
  return out;
}

BinnedDataset bin_dataset(const Dataset& dataset, int max_bins) {
  if (max_bins > 65536) {
    throw ConfigError("max_bins: must be <= 65536");
  }
  BinnedDataset out;
  out.source = &dataset;
  out.feature_bins.reserve(dataset.n_features());
  out.bins.reserve(dataset.n_features());
  for (std::size_t f = 0; f < dataset.n_features(); ++f) {
    const std::vector<double>& column = dataset.columns[f];
    FeatureBins fb = compute_bin_edges(column, max_bins);
    std::vector<std::uint16_t> codes(column.size());
    for (std::size_t i = 0; i < column.size(); ++i) {
      codes[i] = static_cast<std::uint16_t>(fb.bin_index(column[i]));
    }
    out.feature_bins.push_back(std::move(fb));
    out.bins.push_back(std::move(codes));
  }
  return out;
}

}  // namespace erasplit
