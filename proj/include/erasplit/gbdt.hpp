#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "erasplit/binning.hpp"
#include "erasplit/config.hpp"
#include "erasplit/dataset.hpp"
#include "erasplit/tree.hpp"

namespace erasplit {

// Least-squares boosting ensemble: prediction is
// init_value + learning_rate * sum of tree outputs.
struct GBDTModel {
  double init_value = 0.0;
  double learning_rate = 0.1;
  std::vector<RegressionTree> trees;
  TrainConfig config;
  std::vector<FeatureBins> bin_edges;  // per training feature

  std::size_t n_features() const { return bin_edges.size(); }

  double predict_row(std::span<const double> row) const {
    double acc = 0.0;
    for (const RegressionTree& tree : trees) {
      acc += tree.predict_row(row);
    }
    return init_value + learning_rate * acc;
  }
};

// LS Boost: constant initial model at the target mean, then one tree per
// round on the residuals g_i = y_i - F_{m-1}(x_i), applied with constant
// shrinkage. Single-leaf trees still occupy their round. The observer, when
// set, fires for every node split of every tree.
GBDTModel fit(const Dataset& dataset, const TrainConfig& config,
              const SplitObserver& observer = {});

// features is column-major: features[f][i] like Dataset::columns. Throws
// DataError on a feature-count mismatch.
std::vector<double> predict(const GBDTModel& model,
                            const std::vector<std::vector<double>>& features);

// Versioned JSON document; load rejects unknown format versions. The
// per-tree feature subsets are training bookkeeping and are not persisted.
void save_model(const GBDTModel& model, const std::filesystem::path& path);
GBDTModel load_model(const std::filesystem::path& path);

// Large-scale benchmark preset (2000 rounds, depth 5, 32 leaves, learning
// rate 0.01, colsample 0.1) for users bringing their own era-tagged data.
TrainConfig numerai_benchmark_config();

}  // namespace erasplit
