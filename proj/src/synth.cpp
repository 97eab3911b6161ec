#include "erasplit/synth.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "erasplit/common.hpp"
#include "erasplit/rng.hpp"

namespace erasplit {

void SineWaveSpec::validate() const {
  if (n_eras < 1) {
    throw ConfigError("n_eras: must be >= 1");
  }
  if (rows_per_era < 1) {
    throw ConfigError("rows_per_era: must be >= 1");
  }
  if (!(noise_sigma >= 0.0)) {
    throw ConfigError("noise_sigma: must be >= 0");
  }
  if (!(shift_low <= shift_high)) {
    throw ConfigError("shift_range: low must be <= high");
  }
}

SyntheticPair gen_sine_wave(const SineWaveSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);

  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  auto gen_era = [&](std::vector<double>& xs, std::vector<double>& ys,
                     double shift) {
    for (int i = 0; i < spec.rows_per_era; ++i) {
      const double x = uniform_real(rng, 0.0, kTwoPi);
      const double y = std::sin(x) + normal(rng) * spec.noise_sigma + shift;
      xs.push_back(x);
      ys.push_back(y);
    }
  };

  std::vector<double> train_x;
  std::vector<double> train_y;
  std::vector<std::int64_t> train_eras;
  for (int j = 0; j < spec.n_eras; ++j) {
    const double shift = uniform_real(rng, spec.shift_low, spec.shift_high);
    gen_era(train_x, train_y, shift);
    train_eras.insert(train_eras.end(),
                      static_cast<std::size_t>(spec.rows_per_era), j);
  }

  const double drawn_test_shift =
      uniform_real(rng, spec.shift_low, spec.shift_high);
  const double test_shift = spec.test_shift.value_or(drawn_test_shift);
  std::vector<double> test_x;
  std::vector<double> test_y;
  gen_era(test_x, test_y, test_shift);
  // The test era is standalone, so its fresh identifier densifies to 0.
  std::vector<std::int64_t> test_eras(
      static_cast<std::size_t>(spec.rows_per_era), spec.n_eras);

  SyntheticPair out;
  out.train = make_dataset({std::move(train_x)}, std::move(train_y),
                           train_eras, {"x"});
  out.test =
      make_dataset({std::move(test_x)}, std::move(test_y), test_eras, {"x"});
  return out;
}

void MemorizationSpec::validate() const {
  if (dims < 3) {
    throw ConfigError("dims: must be >= 3");
  }
  if (n_eras < 1) {
    throw ConfigError("n_eras: must be >= 1");
  }
  if (n_train < 1 || n_train % n_eras != 0) {
    throw ConfigError("n_train: must be a positive multiple of n_eras");
  }
  if ((n_train / n_eras) % 2 != 0) {
    throw ConfigError("n_train: rows per era must be even for exact class "
                      "balance");
  }
  if (n_test < 2 || n_test % 2 != 0) {
    throw ConfigError("n_test: must be even and >= 2");
  }
  if (!(spiral_turns > 0.0)) {
    throw ConfigError("spiral_turns: must be > 0");
  }
  if (!(spiral_noise >= 0.0)) {
    throw ConfigError("spiral_noise: must be >= 0");
  }
  if (!(shortcut_scale >= 0.0)) {
    throw ConfigError("shortcut_scale: must be >= 0");
  }
}

namespace {

constexpr double kSpiralInnerRadius = 0.25;
constexpr double kClusterSigma = 0.05;     // within-cluster spread, x scale
constexpr double kBackgroundSigma = 1.25;  // era offset spread, x scale
constexpr double kTestNoiseSigma = 1.0;    // test shortcut noise, x scale
constexpr double kMagnitudeLow = 0.9;      // signal-dim magnitude, x scale
constexpr double kMagnitudeHigh = 1.1;

}  // namespace

SyntheticPair gen_memorization(const MemorizationSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);

  const int n_short = spec.dims - 2;
  const int rows_per_era = spec.n_train / spec.n_eras;
  const double sigma_c = kClusterSigma * spec.shortcut_scale;

  std::vector<std::vector<double>> train_cols(
      static_cast<std::size_t>(spec.dims));
  std::vector<double> train_y;
  std::vector<std::int64_t> train_eras;

  auto spiral_point = [&](int label, double& x0, double& x1) {
    const double t = uniform_unit(rng);
    const double radius = kSpiralInnerRadius + (1.0 - kSpiralInnerRadius) * t +
                          normal(rng) * spec.spiral_noise;
    const double theta = 2.0 * std::numbers::pi * spec.spiral_turns * t +
                         static_cast<double>(label) * std::numbers::pi;
    x0 = radius * std::cos(theta);
    x1 = radius * std::sin(theta);
  };

  // Per (era, dim) cluster geometry: class 1 sits at offset + magnitude,
  // class 0 at offset - magnitude. The consistent sign keeps the pooled
  // union linearly separable along the all-ones direction, while the era
  // offsets spread the cluster gaps so that no single threshold falls
  // inside every era's gap -- shortcut splits are degenerate across eras.
  std::vector<double> offsets(static_cast<std::size_t>(n_short));
  std::vector<double> magnitudes(static_cast<std::size_t>(n_short));
  for (int j = 0; j < spec.n_eras; ++j) {
    for (int k = 0; k < n_short; ++k) {
      offsets[static_cast<std::size_t>(k)] =
          normal(rng) * kBackgroundSigma * spec.shortcut_scale;
      magnitudes[static_cast<std::size_t>(k)] =
          spec.shortcut_scale *
          uniform_real(rng, kMagnitudeLow, kMagnitudeHigh);
    }

    for (int i = 0; i < rows_per_era; ++i) {
      const int label = i % 2;
      double x0 = 0.0;
      double x1 = 0.0;
      spiral_point(label, x0, x1);
      train_cols[0].push_back(x0);
      train_cols[1].push_back(x1);
      for (int k = 0; k < n_short; ++k) {
        const double magnitude = magnitudes[static_cast<std::size_t>(k)];
        const double center = offsets[static_cast<std::size_t>(k)] +
                              (label == 1 ? magnitude : -magnitude);
        train_cols[static_cast<std::size_t>(2 + k)].push_back(
            center + normal(rng) * sigma_c);
      }
      train_y.push_back(static_cast<double>(label));
      train_eras.push_back(j);
    }
  }

  std::vector<std::vector<double>> test_cols(
      static_cast<std::size_t>(spec.dims));
  std::vector<double> test_y;
  // Standalone test dataset: the fresh era identifier densifies to 0.
  std::vector<std::int64_t> test_eras(static_cast<std::size_t>(spec.n_test),
                                      spec.n_eras);
  const double test_sigma = kTestNoiseSigma * spec.shortcut_scale;
  for (int i = 0; i < spec.n_test; ++i) {
    const int label = i % 2;
    double x0 = 0.0;
    double x1 = 0.0;
    spiral_point(label, x0, x1);
    test_cols[0].push_back(x0);
    test_cols[1].push_back(x1);
    for (int k = 0; k < n_short; ++k) {
      test_cols[static_cast<std::size_t>(2 + k)].push_back(normal(rng) *
                                                           test_sigma);
    }
    test_y.push_back(static_cast<double>(label));
  }

  SyntheticPair out;
  out.train = make_dataset(std::move(train_cols), std::move(train_y),
                           train_eras);
  out.test =
      make_dataset(std::move(test_cols), std::move(test_y), test_eras);
  return out;
}

}  // namespace erasplit
