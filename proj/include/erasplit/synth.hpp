#pragma once

#include <cstdint>
#include <optional>

#include "erasplit/dataset.hpp"

namespace erasplit {

struct SyntheticPair {
  Dataset train;
  Dataset test;
};

// Shifted sine wave: one feature x uniform on [0, 2pi], target
// sin(x) + gaussian noise + a per-era constant shift. The test set is one
// additional era generated the same way; test_shift overrides its drawn
// shift when set.
struct SineWaveSpec {
  int n_eras = 8;
  int rows_per_era = 64;
  double noise_sigma = 1.0;
  double shift_low = -3.0;
  double shift_high = 3.0;
  std::uint64_t seed = 0;
  std::optional<double> test_shift;

  void validate() const;  // throws ConfigError
};

SyntheticPair gen_sine_wave(const SineWaveSpec& spec);

// Memorization dataset: dims 0-1 hold two interlaced spiral arms (one per
// class, the era-invariant signal); every remaining dim holds per-era class
// clusters (the shortcuts). Each era parks its two class clusters at +/- its
// own magnitude on one designated shortcut dim and at an era-specific offset
// on the others, so pooled training rows stay linearly separable on the
// shortcut dims while test rows, whose shortcut dims are class-independent
// noise, are only classifiable through the spiral.
struct MemorizationSpec {
  int n_train = 12288;
  int n_test = 2000;
  int dims = 18;
  int n_eras = 16;
  double spiral_turns = 1.0;
  double spiral_noise = 0.05;
  double shortcut_scale = 1.0;
  std::uint64_t seed = 0;

  void validate() const;  // throws ConfigError
};

SyntheticPair gen_memorization(const MemorizationSpec& spec);

}  // namespace erasplit
