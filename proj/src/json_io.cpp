#include "erasplit/json_io.hpp"

namespace erasplit {

nlohmann::json config_to_json(const TrainConfig& config) {
  return nlohmann::json{
      {"split_type", to_string(config.split_type)},
      {"boltzmann_alpha", to_string(config.boltzmann_alpha)},
      {"l2_regularization", config.l2_regularization},
      {"learning_rate", config.learning_rate},
      {"n_boosting_rounds", config.n_boosting_rounds},
      {"max_leaves", config.max_leaves},
      {"max_depth", config.max_depth},
      {"min_child_samples", config.min_child_samples},
      {"max_bins", config.max_bins},
      {"colsample_bytree", config.colsample_bytree},
      {"random_seed", config.random_seed},
      {"directional_require_positive_gain",
       config.directional_require_positive_gain},
  };
}

TrainConfig config_from_json(const nlohmann::json& j) {
  TrainConfig config;
  config.split_type = split_type_from_string(j.at("split_type"));
  config.boltzmann_alpha = boltzmann_alpha_from_string(j.at("boltzmann_alpha"));
  config.l2_regularization = j.at("l2_regularization");
  config.learning_rate = j.at("learning_rate");
  config.n_boosting_rounds = j.at("n_boosting_rounds");
  config.max_leaves = j.at("max_leaves");
  config.max_depth = j.at("max_depth");
  config.min_child_samples = j.at("min_child_samples");
  config.max_bins = j.at("max_bins");
  config.colsample_bytree = j.at("colsample_bytree");
  config.random_seed = j.at("random_seed");
  if (j.contains("directional_require_positive_gain")) {
    config.directional_require_positive_gain =
        j.at("directional_require_positive_gain");
  }
  return config;
}

nlohmann::json metric_report_to_json(const MetricReport& report) {
  nlohmann::json j{
      {"mse", report.mse},
      {"pearson_corr", report.pearson_corr},
      {"era_corr_mean", report.era_corr_mean},
      {"era_corr_std", report.era_corr_std},
      {"per_era_corrs", report.per_era_corrs},
  };
  j["accuracy"] = report.accuracy.has_value()
                      ? nlohmann::json(*report.accuracy)
                      : nlohmann::json(nullptr);
  j["corr_sharpe"] = report.corr_sharpe.has_value()
                         ? nlohmann::json(*report.corr_sharpe)
                         : nlohmann::json(nullptr);
  return j;
}

}  // namespace erasplit
