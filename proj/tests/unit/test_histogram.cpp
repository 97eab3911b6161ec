#include <doctest.h>

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "erasplit/binning.hpp"
#include "erasplit/histogram.hpp"
#include "erasplit/rng.hpp"
#include "test_support.hpp"

using namespace erasplit;

namespace {

std::vector<std::int32_t> all_rows(std::size_t n) {
  std::vector<std::int32_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = static_cast<std::int32_t>(i);
  }
  return rows;
}

}  // namespace

TEST_CASE("histogram of the four-row dataset places each gradient") {
  const Dataset d = make_dataset({{1, 2, 3, 4}, {1, 3, 2, 4}}, {1, 2, 3, 4},
                                 {0, 0, 1, 1});
  const BinnedDataset binned = bin_dataset(d, 255);
  const std::vector<double> grads = {1, 2, 3, 4};
  const Histogram h = build_histogram(binned, grads, all_rows(4));

  REQUIRE(h.n_slots() == 2);
  REQUIRE(h.bin_counts[0] == 4);
  CHECK(h.at(0, 0, 0).sum_grad == 1.0);
  CHECK(h.at(0, 0, 1).sum_grad == 2.0);
  CHECK(h.at(0, 0, 2).count == 0);
  CHECK(h.at(0, 0, 3).count == 0);
  CHECK(h.at(0, 1, 2).sum_grad == 3.0);
  CHECK(h.at(0, 1, 3).sum_grad == 4.0);
  // feature2 interleaves the eras across bins
  CHECK(h.at(1, 0, 0).sum_grad == 1.0);
  CHECK(h.at(1, 0, 2).sum_grad == 2.0);
  CHECK(h.at(1, 1, 1).sum_grad == 3.0);
  CHECK(h.at(1, 1, 3).sum_grad == 4.0);

  const GradAggregate total = h.total();
  CHECK(total.sum_grad == 10.0);
  CHECK(total.sum_hess == 4.0);
  CHECK(total.count == 4);
  const auto era_totals = h.per_era_totals();
  REQUIRE(era_totals.size() == 2);
  CHECK(era_totals[0].sum_grad == 3.0);
  CHECK(era_totals[1].sum_grad == 7.0);
}

TEST_CASE("single row fills exactly one cell per slot") {
  const Dataset d = make_dataset({{1, 2, 3}}, {0, 0, 0}, {0, 1, 2});
  const BinnedDataset binned = bin_dataset(d, 8);
  const std::vector<double> grads = {5, 6, 7};
  const std::vector<std::int32_t> rows = {1};
  const Histogram h = build_histogram(binned, grads, rows);
  int nonzero = 0;
  for (int j = 0; j < h.n_eras; ++j) {
    for (int b = 0; b < h.bin_counts[0]; ++b) {
      if (h.at(0, j, b).count > 0) {
        nonzero += 1;
        CHECK(h.at(0, j, b).sum_grad == 6.0);
        CHECK(j == 1);
      }
    }
  }
  CHECK(nonzero == 1);
}

TEST_CASE("histogram cells match brute-force per-group sums") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const Dataset d = testsupport::random_dataset(rng, 50, 3, 4);
    const BinnedDataset binned = bin_dataset(d, 6);
    std::vector<double> grads(50);
    for (double& g : grads) {
      g = normal(rng);
    }
    const Histogram h = build_histogram(binned, grads, all_rows(50));
    for (std::size_t slot = 0; slot < h.n_slots(); ++slot) {
      // brute force: sum rows per (era, bin) in row order
      std::map<std::pair<int, int>, GradAggregate> expect;
      for (int i = 0; i < 50; ++i) {
        expect[{d.eras[i], binned.bins[slot][i]}].add(grads[i]);
      }
      for (int j = 0; j < h.n_eras; ++j) {
        for (int b = 0; b < h.bin_counts[slot]; ++b) {
          const GradAggregate& cell = h.at(slot, j, b);
          const auto it = expect.find({j, b});
          if (it == expect.end()) {
            CHECK(cell.count == 0);
          } else {
            CHECK(cell.sum_grad == it->second.sum_grad);
            CHECK(cell.count == it->second.count);
          }
        }
      }
    }
  }
}

TEST_CASE("sibling subtraction reproduces direct construction") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 40 + static_cast<int>(uniform_index(rng, 40));
    const Dataset d = testsupport::random_dataset(rng, n, 3, 3);
    const BinnedDataset binned = bin_dataset(d, 8);
    std::vector<double> grads(n);
    for (double& g : grads) {
      g = normal(rng);
    }
    // split rows arbitrarily into two children
    std::vector<std::int32_t> left, right;
    for (int i = 0; i < n; ++i) {
      (uniform_unit(rng) < 0.5 ? left : right).push_back(i);
    }
    if (left.empty() || right.empty()) {
      continue;
    }
    const Histogram parent = build_histogram(binned, grads, all_rows(n));
    const Histogram left_h = build_histogram(binned, grads, left);
    const Histogram right_direct = build_histogram(binned, grads, right);
    const Histogram right_sub = subtract_histogram(parent, left_h);
    REQUIRE(right_sub.cells.size() == right_direct.cells.size());
    for (std::size_t c = 0; c < right_sub.cells.size(); ++c) {
      CHECK(right_sub.cells[c].sum_grad ==
            doctest::Approx(right_direct.cells[c].sum_grad).epsilon(1e-9));
      CHECK(right_sub.cells[c].count == right_direct.cells[c].count);
    }
  }
}

TEST_CASE("feature subsets keep global ids addressable") {
  const Dataset d = make_dataset({{1, 2}, {3, 4}, {5, 6}}, {1, 1}, {0, 0});
  const BinnedDataset binned = bin_dataset(d, 4);
  const std::vector<double> grads = {1, 2};
  const Histogram h = build_histogram(binned, grads, all_rows(2), {0, 2});
  REQUIRE(h.n_slots() == 2);
  CHECK(h.feature_ids == std::vector<int>{0, 2});
  CHECK(h.total().count == 2);
}
