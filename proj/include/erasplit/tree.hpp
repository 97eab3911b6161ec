#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "erasplit/binning.hpp"
#include "erasplit/config.hpp"
#include "erasplit/histogram.hpp"
#include "erasplit/split_criteria.hpp"

namespace erasplit {

// feature_index < 0 marks a leaf. Internal nodes route x <= raw_threshold
// left; raw_threshold is the raw-value bin edge of the chosen bin boundary,
// so prediction never touches the binned representation.
struct TreeNode {
  int feature_index = -1;
  double raw_threshold = 0.0;
  int left_child = -1;
  int right_child = -1;
  double leaf_value = 0.0;

  bool is_leaf() const { return feature_index < 0; }
  bool operator==(const TreeNode&) const = default;
};

struct RegressionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  int n_leaves = 0;
  std::vector<int> feature_subset;  // ascending global feature ids

  double predict_row(std::span<const double> row) const {
    int node = 0;
    while (!nodes[node].is_leaf()) {
      const TreeNode& n = nodes[node];
      node = row[static_cast<std::size_t>(n.feature_index)] <= n.raw_threshold
                 ? n.left_child
                 : n.right_child;
    }
    return nodes[node].leaf_value;
  }

  bool operator==(const RegressionTree&) const = default;
};

// Shrunken mean of the node's gradients: sum_grad / (sum_hess + lambda).
double leaf_value(const GradAggregate& agg, double l2);

// Scans every (feature slot, bin threshold) pair in the histogram and
// returns the best valid candidate under config.split_type, or nullopt when
// no candidate is valid. Ties break by larger pooled_gain, then lower
// feature index, then lower bin threshold. node_agg must match the
// histogram's pooled total (used for cross-checking counts).
std::optional<SplitCandidate> find_best_split(const Histogram& hist,
                                              const GradAggregate& node_agg,
                                              const TrainConfig& config);

// Fired once per expanded node, before its children are created. rows and
// hist describe the parent node being split; alternate criteria can be
// re-scored on the same histogram.
struct SplitEvent {
  int node_id = 0;
  int depth = 0;
  const std::vector<std::int32_t>* rows = nullptr;
  const Histogram* hist = nullptr;
  GradAggregate node_agg;
  const SplitCandidate* chosen = nullptr;
};
using SplitObserver = std::function<void(const SplitEvent&)>;

// Best-first growth: expandable leaves are kept with their best candidate
// and the leaf with the globally best (score, pooled_gain, creation order)
// is split until max_leaves, the depth bound, or candidate exhaustion stops
// growth. rng drives colsample_bytree feature subsampling only.
RegressionTree grow_tree(const BinnedDataset& binned,
                         std::span<const double> gradients,
                         const TrainConfig& config, std::mt19937_64& rng,
                         const SplitObserver& observer = {});

double predict_tree(const RegressionTree& tree, std::span<const double> row);

}  // namespace erasplit
