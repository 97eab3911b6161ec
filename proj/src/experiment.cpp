#include "erasplit/experiment.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>

#include "erasplit/common.hpp"
#include "erasplit/gbdt.hpp"
#include "erasplit/histogram.hpp"
#include "erasplit/rng.hpp"
#include "erasplit/tree.hpp"

namespace erasplit {

namespace {

template <typename T, typename Setter>
void probe_grid_values(const std::vector<T>& values, const char* field,
                       Setter set) {
  if (values.empty()) {
    throw ConfigError(std::string(field) + ": grid list must be non-empty");
  }
  for (const T& v : values) {
    TrainConfig probe;
    set(probe, v);
    probe.validate();
  }
}

}  // namespace

void GridSpec::validate() const {
  if (n_configs < 1) {
    throw ConfigError("n_configs: must be >= 1");
  }
  probe_grid_values(boltzmann_alpha, "boltzmann_alpha",
                    [](TrainConfig& c, BoltzmannAlpha v) {
                      c.boltzmann_alpha = v;
                    });
  probe_grid_values(l2_regularization, "l2_regularization",
                    [](TrainConfig& c, double v) { c.l2_regularization = v; });
  probe_grid_values(learning_rate, "learning_rate",
                    [](TrainConfig& c, double v) { c.learning_rate = v; });
  probe_grid_values(n_boosting_rounds, "n_boosting_rounds",
                    [](TrainConfig& c, int v) { c.n_boosting_rounds = v; });
  probe_grid_values(max_leaves, "max_leaves",
                    [](TrainConfig& c, int v) { c.max_leaves = v; });
  probe_grid_values(max_depth, "max_depth",
                    [](TrainConfig& c, int v) { c.max_depth = v; });
  probe_grid_values(min_child_samples, "min_child_samples",
                    [](TrainConfig& c, int v) { c.min_child_samples = v; });
  probe_grid_values(max_bins, "max_bins",
                    [](TrainConfig& c, int v) { c.max_bins = v; });
  probe_grid_values(colsample_bytree, "colsample_bytree",
                    [](TrainConfig& c, double v) { c.colsample_bytree = v; });
}

GridSpec default_grid_spec() {
  GridSpec grid;
  grid.boltzmann_alpha = {
      BoltzmannAlpha::finite(-2.0), BoltzmannAlpha::finite(-1.0),
      BoltzmannAlpha::finite(0.0), BoltzmannAlpha::finite(1.0),
      BoltzmannAlpha::finite(2.0)};
  grid.l2_regularization = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  grid.learning_rate = {0.01, 0.05, 0.1, 0.5, 1.0};
  grid.n_boosting_rounds = {5, 10, 20, 50, 100, 150};
  grid.max_leaves = {5, 7, 10, 16, 32};
  grid.max_depth = {2, 3, 4, 5, 7, 9, 15};
  grid.min_child_samples = {1, 3, 5, 10, 20};
  grid.max_bins = {3, 4, 5, 7, 9};
  grid.colsample_bytree = {0.1, 0.3, 0.5, 0.7, 0.9, 1.0};
  return grid;
}

namespace {

template <typename T>
const T& pick(const std::vector<T>& values, std::mt19937_64& rng) {
  return values[uniform_index(rng, values.size())];
}

TrainConfig sample_config(const GridSpec& grid, std::mt19937_64& rng) {
  TrainConfig config;
  config.boltzmann_alpha = pick(grid.boltzmann_alpha, rng);
  config.l2_regularization = pick(grid.l2_regularization, rng);
  config.learning_rate = pick(grid.learning_rate, rng);
  config.n_boosting_rounds = pick(grid.n_boosting_rounds, rng);
  config.max_leaves = pick(grid.max_leaves, rng);
  config.max_depth = pick(grid.max_depth, rng);
  config.min_child_samples = pick(grid.min_child_samples, rng);
  config.max_bins = pick(grid.max_bins, rng);
  config.colsample_bytree = pick(grid.colsample_bytree, rng);
  return config;
}

constexpr SplitType kSplitOrder[3] = {SplitType::kOriginal,
                                      SplitType::kEraSplit,
                                      SplitType::kDirectionalEraSplit};

RunRecord execute_run(const Dataset& train, const Dataset& test,
                      TrainConfig config, std::size_t run_index,
                      std::size_t config_index) {
  RunRecord record;
  record.run_index = run_index;
  record.config_index = config_index;
  record.config = config;
  record.split_type = config.split_type;

  const auto started = std::chrono::steady_clock::now();
  try {
    const GBDTModel model = fit(train, config);
    try {
      const std::vector<double> train_pred = predict(model, train.columns);
      record.train_metrics = compute_metrics(train_pred, train);
    } catch (const DataError& e) {
      record.error += "train metrics: " + std::string(e.what()) + "; ";
    }
    try {
      const std::vector<double> test_pred = predict(model, test.columns);
      record.test_metrics = compute_metrics(test_pred, test);
    } catch (const DataError& e) {
      record.error += "test metrics: " + std::string(e.what()) + "; ";
    }
  } catch (const std::exception& e) {
    record.error += e.what();
  }
  record.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return record;
}

}  // namespace

std::vector<RunRecord> run_grid_search(
    const Dataset& train, const Dataset& test, const GridSpec& grid,
    int n_threads, const std::function<void(const RunRecord&)>& on_record) {
  grid.validate();

  std::mt19937_64 rng(grid.seed);
  std::vector<TrainConfig> configs;
  configs.reserve(static_cast<std::size_t>(grid.n_configs));
  for (int c = 0; c < grid.n_configs; ++c) {
    TrainConfig config = sample_config(grid, rng);
    config.random_seed = derive_seed(grid.seed, static_cast<std::uint64_t>(c));
    configs.push_back(config);
  }

  const std::size_t n_runs = configs.size() * 3;
  std::vector<std::optional<RunRecord>> results(n_runs);

  unsigned workers = n_threads > 0
                         ? static_cast<unsigned>(n_threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, n_runs));

  std::atomic<std::size_t> next_run{0};
  std::mutex mu;
  std::condition_variable ready_cv;

  auto worker_loop = [&]() {
    while (true) {
      const std::size_t i = next_run.fetch_add(1);
      if (i >= n_runs) {
        return;
      }
      const std::size_t config_index = i / 3;
      TrainConfig config = configs[config_index];
      config.split_type = kSplitOrder[i % 3];
      RunRecord record = execute_run(train, test, config, i, config_index);
      {
        std::lock_guard<std::mutex> lock(mu);
        results[i] = std::move(record);
      }
      ready_cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back(worker_loop);
  }

  // Records are committed strictly in run order so callback output is
  // deterministic and usable as an incremental log.
  std::exception_ptr callback_error;
  {
    std::unique_lock<std::mutex> lock(mu);
    for (std::size_t i = 0; i < n_runs; ++i) {
      ready_cv.wait(lock, [&] { return results[i].has_value(); });
      if (on_record && !callback_error) {
        try {
          on_record(*results[i]);
        } catch (...) {
          callback_error = std::current_exception();
        }
      }
    }
  }
  for (std::thread& t : pool) {
    t.join();
  }
  if (callback_error) {
    std::rethrow_exception(callback_error);
  }

  std::vector<RunRecord> out;
  out.reserve(n_runs);
  for (std::optional<RunRecord>& r : results) {
    out.push_back(std::move(*r));
  }
  return out;
}

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) {
    throw std::logic_error("degenerate demo: " + message);
  }
}

}  // namespace

DegenerateDemoReport run_degenerate_demo() {
  DegenerateDemoReport report;
  report.data = make_dataset({{1, 2, 3, 4}, {1, 3, 2, 4}}, {1, 2, 3, 4},
                             {0, 0, 1, 1}, {"feature1", "feature2"});

  const BinnedDataset binned = bin_dataset(report.data, 255);
  const std::vector<std::int32_t> rows = {0, 1, 2, 3};
  const Histogram hist = build_histogram(binned, report.data.targets, rows);
  const GradAggregate agg = hist.total();

  auto choose = [&](SplitType type) {
    TrainConfig config;
    config.split_type = type;
    config.boltzmann_alpha = BoltzmannAlpha::finite(0.0);
    std::optional<SplitCandidate> cand = find_best_split(hist, agg, config);
    require(cand.has_value(),
            to_string(type) + " found no valid split on the demo data");
    CriterionChoice choice;
    choice.split_type = type;
    choice.candidate = std::move(*cand);
    choice.feature_name = report.data.feature_names[static_cast<std::size_t>(
        choice.candidate.feature_index)];
    choice.raw_threshold =
        binned.feature_bins[static_cast<std::size_t>(
                                choice.candidate.feature_index)]
            .edges[static_cast<std::size_t>(choice.candidate.bin_threshold)];
    return choice;
  };

  report.original = choose(SplitType::kOriginal);
  require(report.original.candidate.feature_index == 0,
          "original criterion must pick feature1");
  require(report.original.raw_threshold == 2.5,
          "original criterion must split feature1 between 2 and 3");
  require(report.original.candidate.score == 2.0,
          "original criterion score must be exactly 2.0");
  for (const auto& gain : report.original.candidate.per_era_gains) {
    require(!gain.has_value(),
            "the original choice must be undefined in every era");
  }

  report.era_split = choose(SplitType::kEraSplit);
  require(report.era_split.candidate.feature_index == 1,
          "era-split criterion must pick feature2");
  require(report.era_split.raw_threshold == 2.5,
          "era-split criterion must split feature2 between 2 and 3");
  require(report.era_split.candidate.score == 0.25,
          "era-split score must be exactly 0.25");
  for (const auto& gain : report.era_split.candidate.per_era_gains) {
    require(gain.has_value() && *gain == 0.25,
            "era-split per-era gains must both be exactly 0.25");
  }

  report.directional = choose(SplitType::kDirectionalEraSplit);
  require(report.directional.candidate.feature_index == 1,
          "directional criterion must pick feature2");
  require(report.directional.candidate.score == 1.0,
          "directional score must be exactly 1.0 (full agreement)");

  return report;
}

}  // namespace erasplit
