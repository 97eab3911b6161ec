#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "erasplit/dataset.hpp"

namespace erasplit {

// Quantization grid for one feature. B bins are separated by B-1 strictly
// increasing edges; x maps to the smallest b with x <= edges[b], else B-1,
// so out-of-range values clamp to the outer bins.
struct FeatureBins {
  std::vector<double> edges;

  int n_bins() const { return static_cast<int>(edges.size()) + 1; }

  int bin_index(double x) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), x);
    return static_cast<int>(it - edges.begin());
  }
};

// If the column has at most max_bins distinct values, edges are midpoints
// between consecutive distinct values, so binning is lossless. Otherwise
// edges sit at the max_bins-1 interior quantiles of the empirical
// distribution, deduplicated.
FeatureBins compute_bin_edges(std::span<const double> values, int max_bins);

struct BinnedDataset {
  std::vector<std::vector<std::uint16_t>> bins;  // [n_features][n_rows]
  std::vector<FeatureBins> feature_bins;         // [n_features]
  const Dataset* source = nullptr;

  std::size_t n_rows() const { return source->n_rows(); }
  std::size_t n_features() const { return bins.size(); }
};

// The returned object keeps a pointer to `dataset`, which must outlive it.
BinnedDataset bin_dataset(const Dataset& dataset, int max_bins);

}  // namespace erasplit
