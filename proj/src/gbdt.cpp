#include "erasplit/gbdt.hpp"

#include <fstream>

#include <json.hpp>

#include "erasplit/common.hpp"
#include "erasplit/json_io.hpp"

namespace erasplit {

GBDTModel fit(const Dataset& dataset, const TrainConfig& config,
              const SplitObserver& observer) {
  config.validate();
  const std::size_t n = dataset.n_rows();

  GBDTModel model;
  model.learning_rate = config.learning_rate;
  model.config = config;

  double target_sum = 0.0;
  for (double y : dataset.targets) {
    target_sum += y;
  }
  model.init_value = target_sum / static_cast<double>(n);

  BinnedDataset binned = bin_dataset(dataset, config.max_bins);
  model.bin_edges = binned.feature_bins;

  std::mt19937_64 rng(config.random_seed);
  std::vector<double> current(n, model.init_value);
  std::vector<double> residuals(n);
  std::vector<double> row_buf(dataset.n_features());

  model.trees.reserve(static_cast<std::size_t>(config.n_boosting_rounds));
  for (int round = 0; round < config.n_boosting_rounds; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      residuals[i] = dataset.targets[i] - current[i];
    }
    RegressionTree tree = grow_tree(binned, residuals, config, rng, observer);
    for (std::size_t i = 0; i < n; ++i) {
      dataset.gather_row(i, row_buf.data());
      current[i] += config.learning_rate * tree.predict_row(row_buf);
    }
    model.trees.push_back(std::move(tree));
  }
  return model;
}

std::vector<double> predict(const GBDTModel& model,
                            const std::vector<std::vector<double>>& features) {
  if (features.size() != model.n_features()) {
    throw DataError("predict: model expects " +
                    std::to_string(model.n_features()) + " features, got " +
                    std::to_string(features.size()));
  }
  const std::size_t n = features.empty() ? 0 : features[0].size();
  for (const auto& column : features) {
    if (column.size() != n) {
      throw DataError("predict: ragged feature columns");
    }
  }
  std::vector<double> out(n);
  std::vector<double> row(features.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t f = 0; f < features.size(); ++f) {
      row[f] = features[f][i];
    }
    out[i] = model.predict_row(row);
  }
  return out;
}

namespace {

constexpr int kFormatVersion = 1;

}  // namespace

void save_model(const GBDTModel& model, const std::filesystem::path& path) {
  nlohmann::json doc;
  doc["format_version"] = kFormatVersion;
  doc["init_value"] = model.init_value;
  doc["learning_rate"] = model.learning_rate;
  doc["config"] = config_to_json(model.config);

  nlohmann::json edges = nlohmann::json::array();
  for (const FeatureBins& fb : model.bin_edges) {
    edges.push_back(fb.edges);
  }
  doc["bin_edges"] = std::move(edges);

  nlohmann::json trees = nlohmann::json::array();
  for (const RegressionTree& tree : model.trees) {
    nlohmann::json t;
    auto& fi = t["feature_index"] = nlohmann::json::array();
    auto& th = t["raw_threshold"] = nlohmann::json::array();
    auto& lc = t["left_child"] = nlohmann::json::array();
    auto& rc = t["right_child"] = nlohmann::json::array();
    auto& lv = t["leaf_value"] = nlohmann::json::array();
    for (const TreeNode& node : tree.nodes) {
      fi.push_back(node.feature_index);
      th.push_back(node.raw_threshold);
      lc.push_back(node.left_child);
      rc.push_back(node.right_child);
      lv.push_back(node.leaf_value);
    }
    trees.push_back(std::move(t));
  }
  doc["trees"] = std::move(trees);

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DataError("cannot open '" + path.string() + "' for writing");
  }
  out << doc.dump(2) << '\n';
  if (!out) {
    throw DataError("failed writing '" + path.string() + "'");
  }
}

GBDTModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError("cannot open '" + path.string() + "' for reading");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError("'" + path.string() + "': " + e.what());
  }

  try {
    const int version = doc.at("format_version");
    if (version != kFormatVersion) {
      throw DataError("'" + path.string() + "': unsupported format_version " +
                      std::to_string(version) + ", expected " +
                      std::to_string(kFormatVersion));
    }
    GBDTModel model;
    model.init_value = doc.at("init_value");
    model.learning_rate = doc.at("learning_rate");
    model.config = config_from_json(doc.at("config"));
    for (const auto& edges : doc.at("bin_edges")) {
      FeatureBins fb;
      fb.edges = edges.get<std::vector<double>>();
      model.bin_edges.push_back(std::move(fb));
    }
    for (const auto& t : doc.at("trees")) {
      const auto& fi = t.at("feature_index");
      const auto& th = t.at("raw_threshold");
      const auto& lc = t.at("left_child");
      const auto& rc = t.at("right_child");
      const auto& lv = t.at("leaf_value");
      if (fi.size() != th.size() || fi.size() != lc.size() ||
          fi.size() != rc.size() || fi.size() != lv.size() || fi.empty()) {
        throw DataError("'" + path.string() +
                        "': tree node arrays disagree on length");
      }
      RegressionTree tree;
      tree.nodes.resize(fi.size());
      for (std::size_t i = 0; i < fi.size(); ++i) {
        TreeNode& node = tree.nodes[i];
        node.feature_index = fi[i];
        node.raw_threshold = th[i];
        node.left_child = lc[i];
        node.right_child = rc[i];
        node.leaf_value = lv[i];
        if (node.is_leaf()) {
          tree.n_leaves += 1;
        }
      }
      model.trees.push_back(std::move(tree));
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("'" + path.string() + "': " + e.what());
  }
}

TrainConfig numerai_benchmark_config() {
  TrainConfig config;
  config.split_type = SplitType::kOriginal;
  config.n_boosting_rounds = 2000;
  config.max_depth = 5;
  config.max_leaves = 32;
  config.learning_rate = 0.01;
  config.colsample_bytree = 0.1;
  return config;
}

}  // namespace erasplit
