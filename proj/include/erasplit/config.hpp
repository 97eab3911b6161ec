#pragma once

#include <cstdint>
#include <string>

namespace erasplit {

enum class SplitType {
  kOriginal,
  kEraSplit,
  kDirectionalEraSplit,
};

std::string to_string(SplitType type);
SplitType split_type_from_string(const std::string& name);  // throws ConfigError

// Aggregation temperature for per-era gains. The exact-min/max modes are
// distinguished flags, not large finite alphas: they take the true extreme
// of the defined per-era gains with no exponential arithmetic involved.
struct BoltzmannAlpha {
  enum class Mode { kFinite, kExactMin, kExactMax };

  Mode mode = Mode::kFinite;
  double value = 0.0;  // used only in kFinite mode

  static BoltzmannAlpha finite(double alpha) {
    return {Mode::kFinite, alpha};
  }
  static BoltzmannAlpha exact_min() { return {Mode::kExactMin, 0.0}; }
  static BoltzmannAlpha exact_max() { return {Mode::kExactMax, 0.0}; }

  bool operator==(const BoltzmannAlpha&) const = default;
};

std::string to_string(const BoltzmannAlpha& alpha);
BoltzmannAlpha boltzmann_alpha_from_string(const std::string& text);

struct TrainConfig {
  SplitType split_type = SplitType::kOriginal;
  BoltzmannAlpha boltzmann_alpha{};
  double l2_regularization = 0.0;
  double learning_rate = 0.1;
  int n_boosting_rounds = 100;
  int max_leaves = 31;
  int max_depth = -1;  // -1 means unlimited
  int min_child_samples = 1;
  int max_bins = 255;
  double colsample_bytree = 1.0;
  std::uint64_t random_seed = 0;
  // Directional scores ignore gain magnitudes, so by default a directional
  // split must also have strictly positive pooled gain to be taken. Exposed
  // as a switch to make the criterion's behaviour without the floor
  // observable.
  bool directional_require_positive_gain = true;

  // Throws ConfigError naming the offending field.
  void validate() const;

  bool operator==(const TrainConfig&) const = default;
};

}  // namespace erasplit
