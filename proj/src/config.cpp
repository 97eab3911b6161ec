#include "erasplit/config.hpp"

#include <charconv>
#include <cmath>

#include "erasplit/common.hpp"

namespace erasplit {

std::string to_string(SplitType type) {
  switch (type) {
    case SplitType::kOriginal:
      return "original";
    case SplitType::kEraSplit:
      return "era-split";
    case SplitType::kDirectionalEraSplit:
      return "directional-era-split";
  }
  throw ConfigError("split_type: unknown enum value");
}

SplitType split_type_from_string(const std::string& name) {
  if (name == "original") {
    return SplitType::kOriginal;
  }
  if (name == "era-split") {
    return SplitType::kEraSplit;
  }
  if (name == "directional-era-split") {
    return SplitType::kDirectionalEraSplit;
  }
  throw ConfigError("split_type: expected one of original, era-split, "
                    "directional-era-split, got '" + name + "'");
}

std::string to_string(const BoltzmannAlpha& alpha) {
  switch (alpha.mode) {
    case BoltzmannAlpha::Mode::kExactMin:
      return "min";
    case BoltzmannAlpha::Mode::kExactMax:
      return "max";
    case BoltzmannAlpha::Mode::kFinite: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", alpha.value);
      return buf;
    }
  }
  throw ConfigError("boltzmann_alpha: unknown mode");
}

BoltzmannAlpha boltzmann_alpha_from_string(const std::string& text) {
  if (text == "min") {
    return BoltzmannAlpha::exact_min();
  }
  if (text == "max") {
    return BoltzmannAlpha::exact_max();
  }
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw ConfigError(
        "boltzmann_alpha: expected a finite number, 'min', or 'max', got '" +
        text + "'");
  }
  return BoltzmannAlpha::finite(value);
}

void TrainConfig::validate() const {
  if (boltzmann_alpha.mode == BoltzmannAlpha::Mode::kFinite &&
      !std::isfinite(boltzmann_alpha.value)) {
    throw ConfigError("boltzmann_alpha: finite mode requires a finite value");
  }
  if (!(l2_regularization >= 0.0) || !std::isfinite(l2_regularization)) {
    throw ConfigError("l2_regularization: must be finite and >= 0");
  }
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
    throw ConfigError("learning_rate: must be finite and > 0");
  }
  if (n_boosting_rounds < 1) {
    throw ConfigError("n_boosting_rounds: must be >= 1");
  }
  if (max_leaves < 2) {
    throw ConfigError("max_leaves: must be >= 2");
  }
  if (max_depth < 1 && max_depth != -1) {
    throw ConfigError("max_depth: must be >= 1, or -1 for unlimited");
  }
  if (min_child_samples < 1) {
    throw ConfigError("min_child_samples: must be >= 1");
  }
  if (max_bins < 2) {
    throw ConfigError("max_bins: must be >= 2");
  }
  if (!(colsample_bytree > 0.0) || colsample_bytree > 1.0) {
    throw ConfigError("colsample_bytree: must be in (0, 1]");
  }
}

}  // namespace erasplit
