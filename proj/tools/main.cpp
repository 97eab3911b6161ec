#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "erasplit/common.hpp"
#include "erasplit/dataset.hpp"
#include "erasplit/experiment.hpp"
#include "erasplit/gbdt.hpp"
#include "erasplit/json_io.hpp"
#include "erasplit/metrics.hpp"
#include "erasplit/synth.hpp"

namespace {

using namespace erasplit;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DataError("cannot open '" + path.string() + "' for writing");
  }
  out << text;
  if (!out) {
    throw DataError("failed writing '" + path.string() + "'");
  }
}

void write_json_file(const std::filesystem::path& path,
                     const nlohmann::json& doc) {
  write_text_file(path, doc.dump(2) + "\n");
}

int thread_cap_from_env() {
  const char* raw = std::getenv("ERA_GBDT_THREADS");
  if (raw == nullptr || *raw == '\0') {
    return 0;  // auto
  }
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 0) {
    throw ConfigError("ERA_GBDT_THREADS: expected a non-negative integer, "
                      "got '" + std::string(raw) + "'");
  }
  return static_cast<int>(value);
}

// --- gen-data ---------------------------------------------------------

struct GenDataCommon {
  std::string out_dir = ".";
};

void write_pair(const SyntheticPair& pair, const std::filesystem::path& dir,
                const nlohmann::json& spec_doc) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw DataError("cannot create directory '" + dir.string() + "': " +
                    ec.message());
  }
  save_dataset_csv(pair.train, dir / "train.csv");
  save_dataset_csv(pair.test, dir / "test.csv");
  write_json_file(dir / "spec.json", spec_doc);
  std::cout << "wrote " << (dir / "train.csv").string() << " ("
            << pair.train.n_rows() << " rows), "
            << (dir / "test.csv").string() << " (" << pair.test.n_rows()
            << " rows)\n";
}

void setup_gen_data(CLI::App& app, GenDataCommon& common) {
  CLI::App* gen =
      app.add_subcommand("gen-data", "Generate a synthetic train/test pair");
  gen->require_subcommand(1);

  static SineWaveSpec sine_storage;
  SineWaveSpec* sine_spec = &sine_storage;
  static double test_shift_value = 0.0;
  CLI::App* sine = gen->add_subcommand(
      "sine", "Sine wave with a per-era vertical target shift");
  sine->add_option("--out-dir", common.out_dir, "Output directory");
  sine->add_option("--n-eras", sine_spec->n_eras, "Training eras");
  sine->add_option("--rows-per-era", sine_spec->rows_per_era, "Rows per era");
  sine->add_option("--noise-sigma", sine_spec->noise_sigma,
                   "Gaussian noise level");
  sine->add_option("--shift-low", sine_spec->shift_low,
                   "Lower bound of the era shift");
  sine->add_option("--shift-high", sine_spec->shift_high,
                   "Upper bound of the era shift");
  CLI::Option* ts = sine->add_option("--test-shift", test_shift_value,
                                     "Fixed shift for the test era "
                                     "(default: drawn like training eras)");
  sine->add_option("--seed", sine_spec->seed, "Generator seed");
  sine->callback([&common, sine_spec, ts]() {
    if (ts->count() > 0) {
      sine_spec->test_shift = test_shift_value;
    }
    const SyntheticPair pair = gen_sine_wave(*sine_spec);
    nlohmann::json doc{
        {"experiment", "sine"},
        {"n_eras", sine_spec->n_eras},
        {"rows_per_era", sine_spec->rows_per_era},
        {"noise_sigma", sine_spec->noise_sigma},
        {"shift_low", sine_spec->shift_low},
        {"shift_high", sine_spec->shift_high},
        {"seed", sine_spec->seed},
    };
    doc["test_shift"] = sine_spec->test_shift.has_value()
                            ? nlohmann::json(*sine_spec->test_shift)
                            : nlohmann::json(nullptr);
    write_pair(pair, common.out_dir, doc);
  });

  static MemorizationSpec mem_storage;
  MemorizationSpec* mem = &mem_storage;
  CLI::App* memo = gen->add_subcommand(
      "memorization", "Spiral signal plus per-era shortcut clusters");
  memo->add_option("--out-dir", common.out_dir, "Output directory");
  memo->add_option("--n-train", mem->n_train, "Training rows");
  memo->add_option("--n-test", mem->n_test, "Test rows");
  memo->add_option("--dims", mem->dims, "Feature count (first two: spiral)");
  memo->add_option("--n-eras", mem->n_eras, "Training eras");
  memo->add_option("--spiral-turns", mem->spiral_turns, "Spiral winding");
  memo->add_option("--spiral-noise", mem->spiral_noise,
                   "Radial jitter of the spiral");
  memo->add_option("--shortcut-scale", mem->shortcut_scale,
                   "Scale of the shortcut clusters");
  memo->add_option("--seed", mem->seed, "Generator seed");
  memo->callback([&common, mem]() {
    const SyntheticPair pair = gen_memorization(*mem);
    nlohmann::json doc{
        {"experiment", "memorization"},
        {"n_train", mem->n_train},
        {"n_test", mem->n_test},
        {"dims", mem->dims},
        {"n_eras", mem->n_eras},
        {"spiral_turns", mem->spiral_turns},
        {"spiral_noise", mem->spiral_noise},
        {"shortcut_scale", mem->shortcut_scale},
        {"seed", mem->seed},
    };
    write_pair(pair, common.out_dir, doc);
  });
}

// --- config flags shared by train -------------------------------------

struct ConfigFlags {
  std::string split_type;
  std::string boltzmann_alpha;
  double l2_regularization = 0.0;
  double learning_rate = 0.0;
  int n_boosting_rounds = 0;
  int max_leaves = 0;
  int max_depth = 0;
  int min_child_samples = 0;
  int max_bins = 0;
  double colsample_bytree = 0.0;
  std::uint64_t random_seed = 0;
  bool directional_require_positive_gain = true;
  std::string config_file;
  std::string preset;

  CLI::Option* split_type_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* l2_opt = nullptr;
  CLI::Option* lr_opt = nullptr;
  CLI::Option* rounds_opt = nullptr;
  CLI::Option* leaves_opt = nullptr;
  CLI::Option* depth_opt = nullptr;
  CLI::Option* mcs_opt = nullptr;
  CLI::Option* bins_opt = nullptr;
  CLI::Option* colsample_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* dir_gain_opt = nullptr;
};

SplitType split_type_from_flag(const std::string& name) {
  if (name == "era") {
    return SplitType::kEraSplit;
  }
  if (name == "directional-era" || name == "directional") {
    return SplitType::kDirectionalEraSplit;
  }
  return split_type_from_string(name);
}

void add_config_flags(CLI::App* cmd, ConfigFlags& flags) {
  flags.split_type_opt = cmd->add_option(
      "--split-type", flags.split_type,
      "original | era-split | directional-era-split");
  flags.alpha_opt = cmd->add_option(
      "--boltzmann-alpha", flags.boltzmann_alpha,
      "Finite number, or 'min'/'max' for the exact extremes");
  flags.l2_opt = cmd->add_option("--l2-regularization",
                                 flags.l2_regularization, "L2 term (>= 0)");
  flags.lr_opt =
      cmd->add_option("--learning-rate", flags.learning_rate, "Shrinkage");
  flags.rounds_opt = cmd->add_option("--n-boosting-rounds",
                                     flags.n_boosting_rounds, "Trees to fit");
  flags.leaves_opt =
      cmd->add_option("--max-leaves", flags.max_leaves, "Leaf cap per tree");
  flags.depth_opt = cmd->add_option("--max-depth", flags.max_depth,
                                    "Depth cap (-1 = unlimited)");
  flags.mcs_opt = cmd->add_option("--min-child-samples",
                                  flags.min_child_samples,
                                  "Minimum pooled rows per child");
  flags.bins_opt =
      cmd->add_option("--max-bins", flags.max_bins, "Histogram bins (>= 2)");
  flags.colsample_opt = cmd->add_option(
      "--colsample-bytree", flags.colsample_bytree,
      "Fraction of features drawn per tree, in (0, 1]");
  flags.seed_opt =
      cmd->add_option("--random-seed", flags.random_seed, "Training seed");
  flags.dir_gain_opt = cmd->add_option(
      "--directional-require-positive-gain",
      flags.directional_require_positive_gain,
      "Directional splits must also have positive pooled gain");
  cmd->add_option("--config-file", flags.config_file,
                  "JSON file with a full config (flags override it)");
  cmd->add_option("--preset", flags.preset,
                  "Named config preset: numerai-benchmark");
}

TrainConfig resolve_config(const ConfigFlags& flags) {
  TrainConfig config;
  if (!flags.preset.empty()) {
    if (flags.preset == "numerai-benchmark") {
      config = numerai_benchmark_config();
    } else {
      throw ConfigError("--preset: unknown preset '" + flags.preset + "'");
    }
  }
  if (!flags.config_file.empty()) {
    std::ifstream in(flags.config_file, std::ios::binary);
    if (!in) {
      throw DataError("cannot open '" + flags.config_file + "' for reading");
    }
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw DataError("'" + flags.config_file + "': " + e.what());
    }
    try {
      config = config_from_json(doc);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("'" + flags.config_file + "': " + e.what());
    }
  }
  if (flags.split_type_opt->count() > 0) {
    config.split_type = split_type_from_flag(flags.split_type);
  }
  if (flags.alpha_opt->count() > 0) {
    config.boltzmann_alpha =
        boltzmann_alpha_from_string(flags.boltzmann_alpha);
  }
  if (flags.l2_opt->count() > 0) {
    config.l2_regularization = flags.l2_regularization;
  }
  if (flags.lr_opt->count() > 0) {
    config.learning_rate = flags.learning_rate;
  }
  if (flags.rounds_opt->count() > 0) {
    config.n_boosting_rounds = flags.n_boosting_rounds;
  }
  if (flags.leaves_opt->count() > 0) {
    config.max_leaves = flags.max_leaves;
  }
  if (flags.depth_opt->count() > 0) {
    config.max_depth = flags.max_depth;
  }
  if (flags.mcs_opt->count() > 0) {
    config.min_child_samples = flags.min_child_samples;
  }
  if (flags.bins_opt->count() > 0) {
    config.max_bins = flags.max_bins;
  }
  if (flags.colsample_opt->count() > 0) {
    config.colsample_bytree = flags.colsample_bytree;
  }
  if (flags.seed_opt->count() > 0) {
    config.random_seed = flags.random_seed;
  }
  if (flags.dir_gain_opt->count() > 0) {
    config.directional_require_positive_gain =
        flags.directional_require_positive_gain;
  }
  config.validate();
  return config;
}

// --- train -------------------------------------------------------------

struct TrainArgs {
  std::string train_csv;
  std::string model_out;
  std::string run_record_out;
  std::string era_column = "era";
  std::string target_column = "target";
  ConfigFlags flags;
};

void setup_train(CLI::App& app, TrainArgs& args) {
  CLI::App* cmd = app.add_subcommand("train", "Fit a model on a CSV dataset");
  cmd->add_option("train_csv", args.train_csv, "Training data")->required();
  cmd->add_option("--model-out", args.model_out, "Model file to write")
      ->required();
  cmd->add_option("--run-record", args.run_record_out,
                  "RunRecord JSON path (default: <model-out>.run.json)");
  cmd->add_option("--era-column", args.era_column, "Era column name");
  cmd->add_option("--target-column", args.target_column,
                  "Target column name");
  add_config_flags(cmd, args.flags);
  cmd->callback([&args]() {
    const TrainConfig config = resolve_config(args.flags);
    const Dataset train =
        load_dataset(args.train_csv, args.era_column, args.target_column);

    const auto started = std::chrono::steady_clock::now();
    const GBDTModel model = fit(train, config);
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - started)
                               .count();
    save_model(model, args.model_out);

    const std::vector<double> pred = predict(model, train.columns);
    nlohmann::json record{
        {"config", config_to_json(config)},
        {"split_type", to_string(config.split_type)},
        {"train_metrics", metric_report_to_json(compute_metrics(pred, train))},
        {"test_metrics", nullptr},
        {"wall_time_seconds", seconds},
    };
    const std::string record_path = args.run_record_out.empty()
                                        ? args.model_out + ".run.json"
                                        : args.run_record_out;
    write_json_file(record_path, record);
    std::cout << "wrote " << args.model_out << " and " << record_path << "\n";
  });
}

// --- predict / evaluate -------------------------------------------------

struct PredictArgs {
  std::string model_path;
  std::string data_csv;
  std::string out_path;
  std::string era_column = "era";
  std::string target_column = "target";
};

void setup_predict(CLI::App& app, PredictArgs& args) {
  CLI::App* cmd =
      app.add_subcommand("predict", "Write per-row predictions as CSV");
  cmd->add_option("model", args.model_path, "Model file")->required();
  cmd->add_option("data_csv", args.data_csv, "Data to predict on")->required();
  cmd->add_option("--out", args.out_path, "Output CSV path")->required();
  cmd->add_option("--era-column", args.era_column, "Era column name");
  cmd->add_option("--target-column", args.target_column,
                  "Target column name");
  cmd->callback([&args]() {
    const GBDTModel model = load_model(args.model_path);
    const Dataset data =
        load_dataset(args.data_csv, args.era_column, args.target_column);
    const std::vector<double> pred = predict(model, data.columns);
    std::string text = "prediction\n";
    for (double p : pred) {
      text += format_double(p);
      text += '\n';
    }
    write_text_file(args.out_path, text);
    std::cout << "wrote " << args.out_path << " (" << pred.size()
              << " rows)\n";
  });
}

struct EvaluateArgs {
  std::string model_path;
  std::string data_csv;
  std::string report_out;
  std::string era_column = "era";
  std::string target_column = "target";
};

void setup_evaluate(CLI::App& app, EvaluateArgs& args) {
  CLI::App* cmd = app.add_subcommand(
      "evaluate", "Score a model on a dataset and emit a metric report");
  cmd->add_option("model", args.model_path, "Model file")->required();
  cmd->add_option("data_csv", args.data_csv, "Evaluation data")->required();
  cmd->add_option("--report-out", args.report_out,
                  "Report JSON path (default: stdout)");
  cmd->add_option("--era-column", args.era_column, "Era column name");
  cmd->add_option("--target-column", args.target_column,
                  "Target column name");
  cmd->callback([&args]() {
    const GBDTModel model = load_model(args.model_path);
    const Dataset data =
        load_dataset(args.data_csv, args.era_column, args.target_column);
    const std::vector<double> pred = predict(model, data.columns);
    const nlohmann::json doc = metric_report_to_json(compute_metrics(pred, data));
    if (args.report_out.empty()) {
      std::cout << doc.dump(2) << '\n';
    } else {
      write_json_file(args.report_out, doc);
      std::cout << "wrote " << args.report_out << '\n';
    }
  });
}

// --- grid-search --------------------------------------------------------

struct GridArgs {
  std::string train_csv;
  std::string test_csv;
  std::string out_csv;
  std::string grid_file;
  int n_configs = -1;
  std::int64_t seed = -1;
  std::string era_column = "era";
  std::string target_column = "target";
};

GridSpec load_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError("cannot open '" + path + "' for reading");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError("'" + path + "': " + e.what());
  }
  GridSpec grid = default_grid_spec();
  try {
    if (doc.contains("boltzmann_alpha")) {
      grid.boltzmann_alpha.clear();
      for (const auto& entry : doc.at("boltzmann_alpha")) {
        if (entry.is_string()) {
          grid.boltzmann_alpha.push_back(
              boltzmann_alpha_from_string(entry.get<std::string>()));
        } else {
          grid.boltzmann_alpha.push_back(
              BoltzmannAlpha::finite(entry.get<double>()));
        }
      }
    }
    auto read_list = [&doc](const char* key, auto& target) {
      if (doc.contains(key)) {
        target = doc.at(key).template get<std::decay_t<decltype(target)>>();
      }
    };
    read_list("l2_regularization", grid.l2_regularization);
    read_list("learning_rate", grid.learning_rate);
    read_list("n_boosting_rounds", grid.n_boosting_rounds);
    read_list("max_leaves", grid.max_leaves);
    read_list("max_depth", grid.max_depth);
    read_list("min_child_samples", grid.min_child_samples);
    read_list("max_bins", grid.max_bins);
    read_list("colsample_bytree", grid.colsample_bytree);
    if (doc.contains("n_configs")) {
      grid.n_configs = doc.at("n_configs");
    }
    if (doc.contains("seed")) {
      grid.seed = doc.at("seed");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("'" + path + "': " + e.what());
  }
  return grid;
}

std::string csv_cell(const std::optional<double>& v) {
  return v.has_value() ? format_double(*v) : std::string();
}

std::string metric_cells(const std::optional<MetricReport>& m) {
  if (!m.has_value()) {
    return ",,,,,";
  }
  return format_double(m->mse) + "," + format_double(m->pearson_corr) + "," +
         csv_cell(m->accuracy) + "," + format_double(m->era_corr_mean) + "," +
         format_double(m->era_corr_std) + "," + csv_cell(m->corr_sharpe);
}

void setup_grid_search(CLI::App& app, GridArgs& args) {
  CLI::App* cmd = app.add_subcommand(
      "grid-search",
      "Random hyperparameter search; every config runs all three criteria");
  cmd->add_option("train_csv", args.train_csv, "Training data")->required();
  cmd->add_option("test_csv", args.test_csv, "Held-out data")->required();
  cmd->add_option("--out", args.out_csv, "Results CSV (written incrementally)")
      ->required();
  cmd->add_option("--grid-file", args.grid_file,
                  "JSON grid (defaults to the built-in table)");
  cmd->add_option("--n-configs", args.n_configs, "Configs to sample");
  cmd->add_option("--seed", args.seed, "Sampling seed");
  cmd->add_option("--era-column", args.era_column, "Era column name");
  cmd->add_option("--target-column", args.target_column,
                  "Target column name");
  cmd->callback([&args]() {
    GridSpec grid = args.grid_file.empty() ? default_grid_spec()
                                           : load_grid_file(args.grid_file);
    if (args.n_configs >= 0) {
      grid.n_configs = args.n_configs;
    }
    if (args.seed >= 0) {
      grid.seed = static_cast<std::uint64_t>(args.seed);
    }
    const Dataset train =
        load_dataset(args.train_csv, args.era_column, args.target_column);
    const Dataset test =
        load_dataset(args.test_csv, args.era_column, args.target_column);

    std::ofstream out(args.out_csv, std::ios::binary);
    if (!out) {
      throw DataError("cannot open '" + args.out_csv + "' for writing");
    }
    out << "run_index,config_index,split_type,boltzmann_alpha,"
           "l2_regularization,learning_rate,n_boosting_rounds,max_leaves,"
           "max_depth,min_child_samples,max_bins,colsample_bytree,"
           "random_seed,train_mse,train_pearson,train_accuracy,"
           "train_era_corr_mean,train_era_corr_std,train_corr_sharpe,"
           "test_mse,test_pearson,test_accuracy,test_era_corr_mean,"
           "test_era_corr_std,test_corr_sharpe,wall_time_seconds,error\n";
    out.flush();

    const int threads = thread_cap_from_env();
    run_grid_search(train, test, grid, threads, [&out](const RunRecord& r) {
      std::string error = r.error;
      for (char& c : error) {
        if (c == ',' || c == '\n' || c == '\r') {
          c = ';';
        }
      }
      const TrainConfig& c = r.config;
      out << r.run_index << ',' << r.config_index << ','
          << to_string(r.split_type) << ',' << to_string(c.boltzmann_alpha)
          << ',' << format_double(c.l2_regularization) << ','
          << format_double(c.learning_rate) << ',' << c.n_boosting_rounds
          << ',' << c.max_leaves << ',' << c.max_depth << ','
          << c.min_child_samples << ',' << c.max_bins << ','
          << format_double(c.colsample_bytree) << ',' << c.random_seed << ','
          << metric_cells(r.train_metrics) << ','
          << metric_cells(r.test_metrics) << ','
          << format_double(r.wall_time_seconds) << ',' << error << '\n';
      out.flush();
      if (!out) {
        throw DataError("failed writing grid results");
      }
    });
    std::cout << "wrote " << args.out_csv << " (" << grid.n_configs * 3
              << " runs)\n";
  });
}

// --- demo-degenerate ------------------------------------------------------

nlohmann::json candidate_to_json(const CriterionChoice& choice) {
  nlohmann::json gains = nlohmann::json::array();
  for (const auto& g : choice.candidate.per_era_gains) {
    gains.push_back(g.has_value() ? nlohmann::json(*g)
                                  : nlohmann::json(nullptr));
  }
  nlohmann::json dirs = nlohmann::json::array();
  for (const auto& d : choice.candidate.per_era_directions) {
    dirs.push_back(d.has_value() ? nlohmann::json(*d)
                                 : nlohmann::json(nullptr));
  }
  return nlohmann::json{
      {"split_type", to_string(choice.split_type)},
      {"feature", choice.feature_name},
      {"raw_threshold", choice.raw_threshold},
      {"score", choice.candidate.score},
      {"pooled_gain", choice.candidate.pooled_gain},
      {"per_era_gains", std::move(gains)},
      {"per_era_directions", std::move(dirs)},
      {"left_value", choice.candidate.left_value},
      {"right_value", choice.candidate.right_value},
  };
}

std::string describe_choice(const CriterionChoice& choice) {
  std::string line = choice.feature_name + " <= " +
                     format_double(choice.raw_threshold) + "  score " +
                     format_double(choice.candidate.score) +
                     "  pooled_gain " +
                     format_double(choice.candidate.pooled_gain);
  line += "  era gains: ";
  bool first = true;
  for (const auto& g : choice.candidate.per_era_gains) {
    if (!first) {
      line += ", ";
    }
    first = false;
    line += g.has_value() ? format_double(*g) : "undefined";
  }
  line += "  directions: ";
  first = true;
  for (const auto& d : choice.candidate.per_era_directions) {
    if (!first) {
      line += ", ";
    }
    first = false;
    line += d.has_value() ? std::to_string(*d) : "undefined";
  }
  return line;
}

void setup_demo(CLI::App& app, bool& as_json) {
  CLI::App* cmd = app.add_subcommand(
      "demo-degenerate",
      "Show the four-row example where the pooled criterion picks a split "
      "that improves no individual era");
  cmd->add_flag("--json", as_json, "Machine-readable report");
  cmd->callback([&as_json]() {
    const DegenerateDemoReport report = run_degenerate_demo();
    if (as_json) {
      nlohmann::json doc{
          {"data",
           {{"feature1", report.data.columns[0]},
            {"feature2", report.data.columns[1]},
            {"era", report.data.eras},
            {"gradient", report.data.targets}}},
          {"original", candidate_to_json(report.original)},
          {"era_split", candidate_to_json(report.era_split)},
          {"directional_era_split", candidate_to_json(report.directional)},
      };
      std::cout << doc.dump(2) << '\n';
      return;
    }
    std::cout << "Four rows, two eras; per-row gradients 1..4:\n"
              << "  feature1: 1 2 3 4\n"
              << "  feature2: 1 3 2 4\n"
              << "  era:      0 0 1 1\n\n"
              << "original:               " << describe_choice(report.original)
              << '\n'
              << "era-split (alpha 0):    "
              << describe_choice(report.era_split) << '\n'
              << "directional-era-split:  "
              << describe_choice(report.directional) << '\n'
              << "\nThe pooled choice splits feature1 between eras: no era "
                 "has rows on both\nsides, so no era improves. Requiring "
                 "every era to be defined flips the\nchoice to feature2, "
                 "which improves both eras and agrees in direction.\n";
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradient boosted trees with era-aware split criteria"};
  app.require_subcommand(1);

  GenDataCommon gen_common;
  TrainArgs train_args;
  PredictArgs predict_args;
  EvaluateArgs evaluate_args;
  GridArgs grid_args;
  bool demo_json = false;

  setup_gen_data(app, gen_common);
  setup_train(app, train_args);
  setup_predict(app, predict_args);
  setup_evaluate(app, evaluate_args);
  setup_grid_search(app, grid_args);
  setup_demo(app, demo_json);

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const erasplit::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const erasplit::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
