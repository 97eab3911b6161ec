#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "erasplit/common.hpp"
#include "erasplit/config.hpp"
#include "erasplit/dataset.hpp"
#include "erasplit/experiment.hpp"
#include "erasplit/gbdt.hpp"
#include "erasplit/metrics.hpp"
#include "erasplit/synth.hpp"

namespace py = pybind11;
using namespace erasplit;

namespace {

py::object alpha_to_py(const BoltzmannAlpha& alpha) {
  switch (alpha.mode) {
    case BoltzmannAlpha::Mode::kExactMin:
      return py::str("min");
    case BoltzmannAlpha::Mode::kExactMax:
      return py::str("max");
    default:
      return py::float_(alpha.value);
  }
}

BoltzmannAlpha alpha_from_py(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) {
    return boltzmann_alpha_from_string(obj.cast<std::string>());
  }
  return BoltzmannAlpha::finite(obj.cast<double>());
}

py::dict metrics_to_dict(const MetricReport& m) {
  py::dict d;
  d["mse"] = m.mse;
  d["pearson_corr"] = m.pearson_corr;
  d["accuracy"] = m.accuracy ? py::object(py::float_(*m.accuracy))
                             : py::object(py::none());
  d["era_corr_mean"] = m.era_corr_mean;
  d["era_corr_std"] = m.era_corr_std;
  d["corr_sharpe"] = m.corr_sharpe ? py::object(py::float_(*m.corr_sharpe))
                                   : py::object(py::none());
  d["per_era_corrs"] = m.per_era_corrs;
  return d;
}

py::dict candidate_to_dict(const CriterionChoice& choice) {
  py::dict d;
  d["split_type"] = to_string(choice.split_type);
  d["feature"] = choice.feature_name;
  d["raw_threshold"] = choice.raw_threshold;
  d["score"] = choice.candidate.score;
  d["pooled_gain"] = choice.candidate.pooled_gain;
  py::list gains;
  for (const auto& g : choice.candidate.per_era_gains) {
    gains.append(g ? py::object(py::float_(*g)) : py::object(py::none()));
  }
  d["per_era_gains"] = gains;
  py::list dirs;
  for (const auto& dir : choice.candidate.per_era_directions) {
    dirs.append(dir ? py::object(py::int_(*dir)) : py::object(py::none()));
  }
  d["per_era_directions"] = dirs;
  d["left_value"] = choice.candidate.left_value;
  d["right_value"] = choice.candidate.right_value;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gradient boosted trees with era-aware split criteria";

  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<TrainConfig>(m, "TrainConfig")
      .def(py::init<>())
      .def_property(
          "split_type",
          [](const TrainConfig& c) { return to_string(c.split_type); },
          [](TrainConfig& c, const std::string& s) {
            c.split_type = split_type_from_string(s);
          })
      .def_property(
          "boltzmann_alpha",
          [](const TrainConfig& c) { return alpha_to_py(c.boltzmann_alpha); },
          [](TrainConfig& c, const py::object& v) {
            c.boltzmann_alpha = alpha_from_py(v);
          })
      .def_readwrite("l2_regularization", &TrainConfig::l2_regularization)
      .def_readwrite("learning_rate", &TrainConfig::learning_rate)
      .def_readwrite("n_boosting_rounds", &TrainConfig::n_boosting_rounds)
      .def_readwrite("max_leaves", &TrainConfig::max_leaves)
      .def_readwrite("max_depth", &TrainConfig::max_depth)
      .def_readwrite("min_child_samples", &TrainConfig::min_child_samples)
      .def_readwrite("max_bins", &TrainConfig::max_bins)
      .def_readwrite("colsample_bytree", &TrainConfig::colsample_bytree)
      .def_readwrite("random_seed", &TrainConfig::random_seed)
      .def_readwrite("directional_require_positive_gain",
                     &TrainConfig::directional_require_positive_gain)
      .def("validate", &TrainConfig::validate);

  py::class_<Dataset>(m, "Dataset")
      .def(py::init([](std::vector<std::vector<double>> columns,
                       std::vector<double> targets,
                       std::vector<std::int64_t> eras,
                       std::vector<std::string> feature_names) {
             return make_dataset(std::move(columns), std::move(targets), eras,
                                 std::move(feature_names));
           }),
           py::arg("columns"), py::arg("targets"), py::arg("eras"),
           py::arg("feature_names") = std::vector<std::string>{})
      .def_static(
          "load",
          [](const std::string& path, const std::string& era_column,
             const std::string& target_column) {
            return load_dataset(path, era_column, target_column);
          },
          py::arg("path"), py::arg("era_column") = "era",
          py::arg("target_column") = "target")
      .def("save_csv",
           [](const Dataset& d, const std::string& path) {
             save_dataset_csv(d, path);
           },
           py::arg("path"))
      .def_property_readonly("n_rows", &Dataset::n_rows)
      .def_property_readonly("n_features", &Dataset::n_features)
      .def_readonly("n_eras", &Dataset::n_eras)
      .def_readonly("columns", &Dataset::columns)
      .def_readonly("targets", &Dataset::targets)
      .def_readonly("eras", &Dataset::eras)
      .def_readonly("feature_names", &Dataset::feature_names);

  py::class_<GBDTModel>(m, "GBDTModel")
      .def_readonly("init_value", &GBDTModel::init_value)
      .def_readonly("learning_rate", &GBDTModel::learning_rate)
      .def_property_readonly(
          "n_trees", [](const GBDTModel& m_) { return m_.trees.size(); })
      .def_property_readonly(
          "config", [](const GBDTModel& m_) { return m_.config; })
      .def("predict",
           [](const GBDTModel& m_,
              const std::vector<std::vector<double>>& columns) {
             return predict(m_, columns);
           },
           py::arg("columns"))
      .def("save",
           [](const GBDTModel& m_, const std::string& path) {
             save_model(m_, path);
           },
           py::arg("path"))
      .def_static("load",
                  [](const std::string& path) { return load_model(path); },
                  py::arg("path"));

  m.def("fit",
        [](const Dataset& data, const TrainConfig& config) {
          return fit(data, config);
        },
        py::arg("dataset"), py::arg("config") = TrainConfig{},
        py::call_guard<py::gil_scoped_release>());

  m.def("compute_metrics",
        [](const std::vector<double>& predictions, const Dataset& data) {
          return metrics_to_dict(compute_metrics(predictions, data));
        },
        py::arg("predictions"), py::arg("dataset"));

  m.def(
      "gen_sine_wave",
      [](int n_eras, int rows_per_era, double noise_sigma, double shift_low,
         double shift_high, std::uint64_t seed,
         std::optional<double> test_shift) {
        SineWaveSpec spec;
        spec.n_eras = n_eras;
        spec.rows_per_era = rows_per_era;
        spec.noise_sigma = noise_sigma;
        spec.shift_low = shift_low;
        spec.shift_high = shift_high;
        spec.seed = seed;
        spec.test_shift = test_shift;
        SyntheticPair pair = gen_sine_wave(spec);
        return py::make_tuple(std::move(pair.train), std::move(pair.test));
      },
      py::arg("n_eras") = 8, py::arg("rows_per_era") = 64,
      py::arg("noise_sigma") = 1.0, py::arg("shift_low") = -3.0,
      py::arg("shift_high") = 3.0, py::arg("seed") = 0,
      py::arg("test_shift") = std::nullopt);

  m.def(
      "gen_memorization",
      [](int n_train, int n_test, int dims, int n_eras, double spiral_turns,
         double spiral_noise, double shortcut_scale, std::uint64_t seed) {
        MemorizationSpec spec;
        spec.n_train = n_train;
        spec.n_test = n_test;
        spec.dims = dims;
        spec.n_eras = n_eras;
        spec.spiral_turns = spiral_turns;
        spec.spiral_noise = spiral_noise;
        spec.shortcut_scale = shortcut_scale;
        spec.seed = seed;
        SyntheticPair pair = gen_memorization(spec);
        return py::make_tuple(std::move(pair.train), std::move(pair.test));
      },
      py::arg("n_train") = 12288, py::arg("n_test") = 2000,
      py::arg("dims") = 18, py::arg("n_eras") = 16,
      py::arg("spiral_turns") = 1.0, py::arg("spiral_noise") = 0.05,
      py::arg("shortcut_scale") = 1.0, py::arg("seed") = 0);

  m.def("run_degenerate_demo", []() {
    const DegenerateDemoReport report = run_degenerate_demo();
    py::dict d;
    py::dict data;
    data["feature1"] = report.data.columns[0];
    data["feature2"] = report.data.columns[1];
    data["era"] = report.data.eras;
    data["gradient"] = report.data.targets;
    d["data"] = data;
    d["original"] = candidate_to_dict(report.original);
    d["era_split"] = candidate_to_dict(report.era_split);
    d["directional_era_split"] = candidate_to_dict(report.directional);
    return d;
  });

  m.def(
      "run_grid_search",
      [](const Dataset& train, const Dataset& test, int n_configs,
         std::uint64_t seed, int n_threads) {
        GridSpec grid = default_grid_spec();
        if (n_configs >= 0) {
          grid.n_configs = n_configs;
        }
        grid.seed = seed;
        std::vector<RunRecord> records;
        {
          py::gil_scoped_release release;
          records = run_grid_search(train, test, grid, n_threads);
        }
        py::list rows;
        for (const RunRecord& r : records) {
          py::dict row;
          row["run_index"] = r.run_index;
          row["config_index"] = r.config_index;
          row["split_type"] = to_string(r.split_type);
          py::dict cfg;
          cfg["boltzmann_alpha"] = alpha_to_py(r.config.boltzmann_alpha);
          cfg["l2_regularization"] = r.config.l2_regularization;
          cfg["learning_rate"] = r.config.learning_rate;
          cfg["n_boosting_rounds"] = r.config.n_boosting_rounds;
          cfg["max_leaves"] = r.config.max_leaves;
          cfg["max_depth"] = r.config.max_depth;
          cfg["min_child_samples"] = r.config.min_child_samples;
          cfg["max_bins"] = r.config.max_bins;
          cfg["colsample_bytree"] = r.config.colsample_bytree;
          cfg["random_seed"] = r.config.random_seed;
          row["config"] = cfg;
          row["train_metrics"] = r.train_metrics
                                     ? py::object(metrics_to_dict(*r.train_metrics))
                                     : py::object(py::none());
          row["test_metrics"] = r.test_metrics
                                    ? py::object(metrics_to_dict(*r.test_metrics))
                                    : py::object(py::none());
          row["wall_time_seconds"] = r.wall_time_seconds;
          row["error"] = r.error;
          rows.append(std::move(row));
        }
        return rows;
      },
      py::arg("train"), py::arg("test"), py::arg("n_configs") = -1,
      py::arg("seed") = 0, py::arg("n_threads") = 0);

  m.attr("__version__") = "0.1.0";
}
