#include "erasplit/tree.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include "erasplit/common.hpp"
#include "erasplit/rng.hpp"

namespace erasplit {

double leaf_value(const GradAggregate& agg, double l2) {
  assert(agg.count >= 1);
  return agg.sum_grad / (agg.sum_hess + l2);
}

std::optional<SplitCandidate> find_best_split(const Histogram& hist,
                                              const GradAggregate& node_agg,
                                              const TrainConfig& config) {
  const int n_eras = hist.n_eras;
  const std::vector<GradAggregate> parent_era = hist.per_era_totals();
  GradAggregate parent;
  for (const GradAggregate& pe : parent_era) {
    parent += pe;
  }
  assert(parent.count == node_agg.count);
  (void)node_agg;
  if (parent.count < 2) {
    return std::nullopt;
  }

  const double l2 = config.l2_regularization;
  const int min_child = config.min_child_samples;

  std::optional<SplitCandidate> best;
  std::vector<GradAggregate> left(static_cast<std::size_t>(n_eras));
  std::vector<std::optional<double>> era_gains(
      static_cast<std::size_t>(n_eras));
  std::vector<std::optional<int>> directions(
      static_cast<std::size_t>(n_eras));

  for (std::size_t s = 0; s < hist.n_slots(); ++s) {
    const int n_bins = hist.bin_counts[s];
    if (n_bins < 2) {
      continue;
    }
    std::fill(left.begin(), left.end(), GradAggregate{});
    for (int t = 0; t + 1 < n_bins; ++t) {
      for (int j = 0; j < n_eras; ++j) {
        left[static_cast<std::size_t>(j)] += hist.at(s, j, t);
      }
      GradAggregate pooled_left;
      for (const GradAggregate& lj : left) {
        pooled_left += lj;
      }
      if (pooled_left.count < min_child ||
          parent.count - pooled_left.count < min_child) {
        continue;
      }
      const GradAggregate pooled_right = parent - pooled_left;
      const double pooled_gain =
          original_gain(parent, pooled_left, pooled_right, l2);

      for (int j = 0; j < n_eras; ++j) {
        const GradAggregate& lj = left[static_cast<std::size_t>(j)];
        const GradAggregate rj =
            parent_era[static_cast<std::size_t>(j)] - lj;
        era_gains[static_cast<std::size_t>(j)] =
            era_gain(parent_era[static_cast<std::size_t>(j)], lj, rj, l2);
        if (lj.count > 0 && rj.count > 0) {
          // Directions compare the plain per-era child means; the L2 term
          // shrinks left and right unevenly and could flip a sign.
          directions[static_cast<std::size_t>(j)] = split_direction(
              lj.sum_grad / static_cast<double>(lj.count),
              rj.sum_grad / static_cast<double>(rj.count));
        } else {
          directions[static_cast<std::size_t>(j)] = std::nullopt;
        }
      }

      double score = 0.0;
      switch (config.split_type) {
        case SplitType::kOriginal:
          score = pooled_gain;
          break;
        case SplitType::kEraSplit: {
          const std::optional<double> s_era =
              era_split_score(era_gains, config.boltzmann_alpha);
          if (!s_era.has_value()) {
            continue;
          }
          score = *s_era;
          break;
        }
        case SplitType::kDirectionalEraSplit: {
          const std::optional<double> s_dir = directional_score(directions);
          if (!s_dir.has_value()) {
            continue;
          }
          if (config.directional_require_positive_gain &&
              !(pooled_gain > 0.0)) {
            continue;
          }
          score = *s_dir;
          break;
        }
      }
      if (!(score > 0.0)) {
        continue;
      }

      // Enumeration runs feature-ascending, threshold-ascending, so keeping
      // the incumbent on full ties realizes the documented tie-break order.
      const bool better =
          !best.has_value() || score > best->score ||
          (score == best->score && pooled_gain > best->pooled_gain);
      if (better) {
        SplitCandidate c;
        c.feature_index = hist.feature_ids[s];
        c.bin_threshold = t;
        c.score = score;
        c.pooled_gain = pooled_gain;
        c.per_era_gains.assign(era_gains.begin(), era_gains.end());
        c.per_era_directions.assign(directions.begin(), directions.end());
        c.left_value = leaf_value(pooled_left, l2);
        c.right_value = leaf_value(pooled_right, l2);
        best = std::move(c);
      }
    }
  }
  return best;
}

namespace {

struct PendingLeaf {
  int node_id = 0;
  int depth = 0;
  std::vector<std::int32_t> rows;
  Histogram hist;
  GradAggregate agg;
  SplitCandidate best;
  std::uint64_t seq = 0;
};

// Expansion order: score, then pooled_gain, then creation order.
bool expands_before(const PendingLeaf& a, const PendingLeaf& b) {
  if (a.best.score != b.best.score) {
    return a.best.score > b.best.score;
  }
  if (a.best.pooled_gain != b.best.pooled_gain) {
    return a.best.pooled_gain > b.best.pooled_gain;
  }
  return a.seq < b.seq;
}

std::vector<int> sample_feature_subset(std::size_t n_features,
                                       double colsample,
                                       std::mt19937_64& rng) {
  std::vector<int> ids(n_features);
  std::iota(ids.begin(), ids.end(), 0);
  if (colsample >= 1.0) {
    return ids;
  }
  const std::size_t k = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::llround(colsample * static_cast<double>(n_features))));
  if (k >= n_features) {
    return ids;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j =
        i + static_cast<std::size_t>(uniform_index(rng, n_features - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(k);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

RegressionTree grow_tree(const BinnedDataset& binned,
                         std::span<const double> gradients,
                         const TrainConfig& config, std::mt19937_64& rng,
                         const SplitObserver& observer) {
  const std::size_t n = binned.n_rows();
  assert(gradients.size() == n);

  RegressionTree tree;
  tree.feature_subset =
      sample_feature_subset(binned.n_features(), config.colsample_bytree, rng);

  std::vector<PendingLeaf> pending;
  std::uint64_t next_seq = 0;

  auto try_enqueue = [&](int node_id, int depth,
                         std::vector<std::int32_t> rows, Histogram hist) {
    if (config.max_depth != -1 && depth >= config.max_depth) {
      return;
    }
    if (rows.size() < 2) {
      return;
    }
    GradAggregate agg = hist.total();
    std::optional<SplitCandidate> best = find_best_split(hist, agg, config);
    if (!best.has_value()) {
      return;
    }
    pending.push_back(PendingLeaf{node_id, depth, std::move(rows),
                                  std::move(hist), agg, std::move(*best),
                                  next_seq++});
  };

  std::vector<std::int32_t> root_rows(n);
  std::iota(root_rows.begin(), root_rows.end(), 0);
  Histogram root_hist =
      build_histogram(binned, gradients, root_rows, tree.feature_subset);
  tree.nodes.push_back(TreeNode{});
  tree.nodes[0].leaf_value = leaf_value(root_hist.total(), config.l2_regularization);
  int n_leaves = 1;

  try_enqueue(0, 0, std::move(root_rows), std::move(root_hist));

  while (n_leaves < config.max_leaves && !pending.empty()) {
    std::size_t bi = 0;
    for (std::size_t i = 1; i < pending.size(); ++i) {
      if (expands_before(pending[i], pending[bi])) {
        bi = i;
      }
    }
    PendingLeaf p = std::move(pending[bi]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(bi));

    if (observer) {
      SplitEvent event;
      event.node_id = p.node_id;
      event.depth = p.depth;
      event.rows = &p.rows;
      event.hist = &p.hist;
      event.node_agg = p.agg;
      event.chosen = &p.best;
      observer(event);
    }

    const SplitCandidate& c = p.best;
    const std::vector<std::uint16_t>& codes =
        binned.bins[static_cast<std::size_t>(c.feature_index)];
    std::vector<std::int32_t> left_rows;
    std::vector<std::int32_t> right_rows;
    for (std::int32_t row : p.rows) {
      if (codes[static_cast<std::size_t>(row)] <= c.bin_threshold) {
        left_rows.push_back(row);
      } else {
        right_rows.push_back(row);
      }
    }
    assert(!left_rows.empty() && !right_rows.empty());

    const int left_id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(TreeNode{});
    tree.nodes.back().leaf_value = c.left_value;
    const int right_id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(TreeNode{});
    tree.nodes.back().leaf_value = c.right_value;

    TreeNode& parent_node = tree.nodes[static_cast<std::size_t>(p.node_id)];
    parent_node.feature_index = c.feature_index;
    parent_node.raw_threshold =
        binned.feature_bins[static_cast<std::size_t>(c.feature_index)]
            .edges[static_cast<std::size_t>(c.bin_threshold)];
    parent_node.left_child = left_id;
    parent_node.right_child = right_id;
    n_leaves += 1;

    if (n_leaves < config.max_leaves) {
      const int child_depth = p.depth + 1;
      const bool depth_ok =
          config.max_depth == -1 || child_depth < config.max_depth;
      const bool left_is_small = left_rows.size() <= right_rows.size();
      const bool want_left = depth_ok && left_rows.size() >= 2;
      const bool want_right = depth_ok && right_rows.size() >= 2;
      const bool want_small = left_is_small ? want_left : want_right;
      const bool want_large = left_is_small ? want_right : want_left;
      if (want_small || want_large) {
        // The smaller child is always built directly; the larger one comes
        // from sibling subtraction off the parent table.
        std::vector<std::int32_t>& small_rows =
            left_is_small ? left_rows : right_rows;
        std::vector<std::int32_t>& large_rows =
            left_is_small ? right_rows : left_rows;
        const int small_id = left_is_small ? left_id : right_id;
        const int large_id = left_is_small ? right_id : left_id;
        Histogram small_hist = build_histogram(binned, gradients, small_rows,
                                               tree.feature_subset);
        if (want_large) {
          try_enqueue(large_id, child_depth, std::move(large_rows),
                      subtract_histogram(p.hist, small_hist));
        }
        if (want_small) {
          try_enqueue(small_id, child_depth, std::move(small_rows),
                      std::move(small_hist));
        }
      }
    }
  }

  tree.n_leaves = n_leaves;
  return tree;
}

double predict_tree(const RegressionTree& tree, std::span<const double> row) {
  return tree.predict_row(row);
}

}  // namespace erasplit
