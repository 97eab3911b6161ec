#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "erasplit/binning.hpp"
#include "erasplit/split_criteria.hpp"

namespace erasplit {

// Per-node aggregate table: one GradAggregate per (feature slot, era, bin).
// Slots index into feature_ids, the (possibly subsampled) features this
// tree sees; cells are laid out slot-major, then era, then bin.
struct Histogram {
  std::vector<int> feature_ids;        // ascending global feature ids
  std::vector<int> bin_counts;         // [n_slots]
  std::vector<std::size_t> offsets;    // [n_slots] start into cells
  int n_eras = 0;
  std::vector<GradAggregate> cells;

  std::size_t n_slots() const { return feature_ids.size(); }

  GradAggregate& at(std::size_t slot, int era, int bin) {
    return cells[offsets[slot] +
                 static_cast<std::size_t>(era) * bin_counts[slot] + bin];
  }
  const GradAggregate& at(std::size_t slot, int era, int bin) const {
    return cells[offsets[slot] +
                 static_cast<std::size_t>(era) * bin_counts[slot] + bin];
  }

  // Parent aggregates are always derived from slot 0 in (era, bin) order so
  // every criterion sees bit-identical sums.
  std::vector<GradAggregate> per_era_totals() const;
  GradAggregate total() const;
};

// Accumulates gradients of `rows` into a fresh table. feature_ids must be
// ascending; empty means all features.
Histogram build_histogram(const BinnedDataset& binned,
                          std::span<const double> gradients,
                          std::span<const std::int32_t> rows,
                          std::vector<int> feature_ids = {});

// parent - child, cell by cell: the sibling-subtraction shortcut. Shapes
// must match.
Histogram subtract_histogram(const Histogram& parent, const Histogram& child);

}  // namespace erasplit
