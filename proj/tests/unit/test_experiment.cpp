#include <doctest.h>

#include <random>
#include <vector>

#include "erasplit/common.hpp"
#include "erasplit/experiment.hpp"
#include "erasplit/rng.hpp"
#include "test_support.hpp"

using namespace erasplit;

namespace {

bool same_config(const TrainConfig& a, const TrainConfig& b) {
  return a.boltzmann_alpha.mode == b.boltzmann_alpha.mode &&
         a.boltzmann_alpha.value == b.boltzmann_alpha.value &&
         a.l2_regularization == b.l2_regularization &&
         a.learning_rate == b.learning_rate &&
         a.n_boosting_rounds == b.n_boosting_rounds &&
         a.max_leaves == b.max_leaves && a.max_depth == b.max_depth &&
         a.min_child_samples == b.min_child_samples &&
         a.max_bins == b.max_bins &&
         a.colsample_bytree == b.colsample_bytree &&
         a.random_seed == b.random_seed;
}

GridSpec tiny_grid() {
  GridSpec grid = default_grid_spec();
  grid.n_boosting_rounds = {3, 5};
  grid.max_leaves = {4};
  grid.n_configs = 2;
  grid.seed = 17;
  return grid;
}

}  // namespace

TEST_CASE("default grid passes config validation") {
  CHECK_NOTHROW(default_grid_spec().validate());
  GridSpec bad = default_grid_spec();
  bad.learning_rate.push_back(0.0);
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = default_grid_spec();
  bad.n_configs = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("grid search emits three runs per config in stable order") {
  std::mt19937_64 rng(73);
  const Dataset train = testsupport::random_dataset(rng, 60, 3, 3);
  const Dataset test = testsupport::random_dataset(rng, 30, 3, 2);

  std::vector<std::size_t> seen;
  const std::vector<RunRecord> records =
      run_grid_search(train, test, tiny_grid(), 2,
                      [&seen](const RunRecord& r) {
                        seen.push_back(r.run_index);
                      });
  REQUIRE(records.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(seen[i] == i);  // callback fires strictly in run order
    CHECK(records[i].run_index == i);
    CHECK(records[i].config_index == i / 3);
    CHECK(records[i].error.empty());
    REQUIRE(records[i].train_metrics.has_value());
    REQUIRE(records[i].test_metrics.has_value());
  }
  CHECK(records[0].split_type == SplitType::kOriginal);
  CHECK(records[1].split_type == SplitType::kEraSplit);
  CHECK(records[2].split_type == SplitType::kDirectionalEraSplit);
  CHECK(same_config(records[0].config, records[1].config));
  CHECK(same_config(records[1].config, records[2].config));
  CHECK_FALSE(same_config(records[0].config, records[3].config));
}

TEST_CASE("grid sampling is deterministic in the seed") {
  std::mt19937_64 rng(79);
  const Dataset train = testsupport::random_dataset(rng, 40, 2, 2);
  const Dataset test = testsupport::random_dataset(rng, 20, 2, 2);
  const std::vector<RunRecord> a =
      run_grid_search(train, test, tiny_grid(), 1);
  const std::vector<RunRecord> b =
      run_grid_search(train, test, tiny_grid(), 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(same_config(a[i].config, b[i].config));
    CHECK(a[i].error == b[i].error);
    REQUIRE(a[i].train_metrics.has_value() == b[i].train_metrics.has_value());
    if (a[i].train_metrics.has_value()) {
      CHECK(a[i].train_metrics->mse == b[i].train_metrics->mse);
    }
  }
}

TEST_CASE("a failing run is recorded and the search continues") {
  std::mt19937_64 rng(83);
  const Dataset train = testsupport::random_dataset(rng, 40, 3, 2);
  const Dataset bad_test = testsupport::random_dataset(rng, 20, 2, 2);
  const std::vector<RunRecord> records =
      run_grid_search(train, bad_test, tiny_grid(), 2);
  REQUIRE(records.size() == 6);
  for (const RunRecord& r : records) {
    CHECK(r.train_metrics.has_value());  // training side still evaluated
    CHECK_FALSE(r.test_metrics.has_value());
    CHECK_FALSE(r.error.empty());
  }
}

TEST_CASE("degenerate demo reproduces the canonical example") {
  const DegenerateDemoReport report = run_degenerate_demo();
  CHECK(report.original.feature_name == "feature1");
  CHECK(report.original.raw_threshold == 2.5);
  CHECK(report.original.candidate.score == 2.0);
  CHECK_FALSE(report.original.candidate.per_era_gains[0].has_value());
  CHECK_FALSE(report.original.candidate.per_era_gains[1].has_value());

  CHECK(report.era_split.feature_name == "feature2");
  CHECK(report.era_split.raw_threshold == 2.5);
  CHECK(report.era_split.candidate.score == 0.25);
  CHECK(*report.era_split.candidate.per_era_gains[0] == 0.25);
  CHECK(*report.era_split.candidate.per_era_gains[1] == 0.25);

  CHECK(report.directional.feature_name == "feature2");
  CHECK(report.directional.candidate.score == 1.0);
}
