#include "erasplit/histogram.hpp"

#include <cassert>
#include <numeric>

#include "erasplit/common.hpp"

namespace erasplit {

std::vector<GradAggregate> Histogram::per_era_totals() const {
  std::vector<GradAggregate> totals(static_cast<std::size_t>(n_eras));
  for (int j = 0; j < n_eras; ++j) {
    for (int b = 0; b < bin_counts[0]; ++b) {
      totals[j] += at(0, j, b);
    }
  }
  return totals;
}

GradAggregate Histogram::total() const {
  GradAggregate agg;
  for (int j = 0; j < n_eras; ++j) {
    for (int b = 0; b < bin_counts[0]; ++b) {
      agg += at(0, j, b);
    }
  }
  return agg;
}

Histogram build_histogram(const BinnedDataset& binned,
                          std::span<const double> gradients,
                          std::span<const std::int32_t> rows,
                          std::vector<int> feature_ids) {
  if (rows.empty()) {
    throw DataError("build_histogram: empty row set");
  }
  if (gradients.size() != binned.n_rows()) {
    throw DataError("build_histogram: gradient vector length mismatch");
  }
  if (feature_ids.empty()) {
    feature_ids.resize(binned.n_features());
    std::iota(feature_ids.begin(), feature_ids.end(), 0);
  }

  Histogram hist;
  hist.n_eras = binned.source->n_eras;
  hist.feature_ids = std::move(feature_ids);
  hist.bin_counts.reserve(hist.feature_ids.size());
  hist.offsets.reserve(hist.feature_ids.size());
  std::size_t total_cells = 0;
  for (int f : hist.feature_ids) {
    const int b = binned.feature_bins[static_cast<std::size_t>(f)].n_bins();
    hist.bin_counts.push_back(b);
    hist.offsets.push_back(total_cells);
    total_cells += static_cast<std::size_t>(b) * hist.n_eras;
  }
  hist.cells.resize(total_cells);

  const std::vector<std::int32_t>& eras = binned.source->eras;
  for (std::size_t s = 0; s < hist.n_slots(); ++s) {
    const std::vector<std::uint16_t>& codes =
        binned.bins[static_cast<std::size_t>(hist.feature_ids[s])];
    for (std::int32_t row : rows) {
      hist.at(s, eras[static_cast<std::size_t>(row)],
              codes[static_cast<std::size_t>(row)])
          .add(gradients[static_cast<std::size_t>(row)]);
    }
  }
  return hist;
}

Histogram subtract_histogram(const Histogram& parent, const Histogram& child) {
  assert(parent.cells.size() == child.cells.size());
  assert(parent.feature_ids == child.feature_ids);
  Histogram out = parent;
  for (std::size_t i = 0; i < out.cells.size(); ++i) {
    out.cells[i] -= child.cells[i];
  }
  return out;
}

}  // namespace erasplit
