#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "erasplit/common.hpp"
#include "erasplit/metrics.hpp"
#include "erasplit/rng.hpp"
#include "test_support.hpp"

using namespace erasplit;

namespace {

using V = std::vector<double>;

// Builds a 3-row target with an exact Pearson correlation rho against
// pred = [1,2,3]: mix the centered pred direction with an orthogonal one.
std::vector<double> target_with_corr(double rho) {
  const double a = rho / std::sqrt(2.0);
  const double b = std::sqrt(1.0 - rho * rho) / std::sqrt(6.0);
  return {-a + b, -2.0 * b, a + b};
}

}  // namespace

TEST_CASE("mse") {
  CHECK(mse(V{1, 2, 3}, V{1, 2, 3}) == 0.0);
  CHECK(mse(V{0, 0}, V{1, -1}) == 1.0);
  CHECK(mse(V{1, 2, 3}, V{2, 2, 2}) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(mse(V{1}, V{1, 2}), DataError);
}

TEST_CASE("pearson") {
  CHECK(pearson(V{1, 2, 3}, V{1, 2, 3}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pearson(V{1, 2, 3}, V{-1, -2, -3}) ==
        doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(pearson(V{1, 2, 3, 4}, V{1, 3, 2, 4}) ==
        doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(pearson(V{1, 1, 1}, V{1, 2, 3}), DataError);
  CHECK_THROWS_AS(pearson(V{1}, V{1}), DataError);
}

TEST_CASE("pearson affine invariance and sign flip") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(10), y(10);
    for (int i = 0; i < 10; ++i) {
      x[i] = normal(rng);
      y[i] = normal(rng);
    }
    const double base = pearson(x, y);
    std::vector<double> scaled = x;
    for (double& v : scaled) {
      v = 2.5 * v + 7.0;
    }
    CHECK(pearson(scaled, y) == doctest::Approx(base).epsilon(1e-12));
    std::vector<double> negated = x;
    for (double& v : negated) {
      v = -v;
    }
    CHECK(pearson(negated, y) == doctest::Approx(-base).epsilon(1e-12));
  }
}

TEST_CASE("accuracy") {
  CHECK(accuracy(V{0.4, 0.6}, V{0, 1}) == 1.0);
  CHECK(accuracy(V{0.6, 0.4}, V{0, 1}) == 0.0);
  CHECK(accuracy(V{1.7}, V{1}) == 1.0);   // rounds to 2, clamps to 1
  CHECK(accuracy(V{-0.4}, V{0}) == 1.0);  // rounds to 0
  CHECK(accuracy(V{-0.6}, V{0}) == 1.0);  // rounds to -1, clamps to 0
  CHECK(accuracy(V{0.5}, V{1}) == 1.0);   // half away from zero
  CHECK_THROWS_AS(accuracy(V{0.5}, V{2}), DataError);
}

TEST_CASE("era_wise_corr") {
  SUBCASE("hand-built per-era correlations aggregate correctly") {
    std::vector<double> pred = {1, 2, 3, 1, 2, 3};
    std::vector<double> target = target_with_corr(0.02);
    const std::vector<double> t2 = target_with_corr(0.04);
    target.insert(target.end(), t2.begin(), t2.end());
    const std::vector<std::int32_t> eras = {0, 0, 0, 1, 1, 1};
    const EraCorr ec = era_wise_corr(pred, target, eras, 2);
    REQUIRE(ec.per_era.size() == 2);
    CHECK(ec.per_era[0] == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(ec.per_era[1] == doctest::Approx(0.04).epsilon(1e-12));
    CHECK(ec.mean == doctest::Approx(0.03).epsilon(1e-12));
    CHECK(ec.std_dev == doctest::Approx(0.014142135623730951).epsilon(1e-9));
    REQUIRE(ec.sharpe.has_value());
    CHECK(*ec.sharpe == doctest::Approx(2.1213203435596424).epsilon(1e-9));
  }
  SUBCASE("perfect predictions give zero dispersion and no sharpe") {
    const std::vector<double> pred = {1, 2, 3, 4};
    const std::vector<std::int32_t> eras = {0, 0, 1, 1};
    const EraCorr ec = era_wise_corr(pred, pred, eras, 2);
    CHECK(ec.per_era == std::vector<double>{1.0, 1.0});
    CHECK(ec.mean == 1.0);
    CHECK(ec.std_dev == 0.0);
    CHECK_FALSE(ec.sharpe.has_value());
  }
  SUBCASE("single era reduces to plain pearson") {
    std::mt19937_64 rng(67);
    std::vector<double> pred(20), target(20);
    for (int i = 0; i < 20; ++i) {
      pred[i] = normal(rng);
      target[i] = normal(rng);
    }
    const std::vector<std::int32_t> eras(20, 0);
    const EraCorr ec = era_wise_corr(pred, target, eras, 1);
    CHECK(ec.mean == pearson(pred, target));
    CHECK(ec.std_dev == 0.0);
  }
  SUBCASE("degenerate era slice error names the era") {
    const std::vector<double> pred = {1, 2, 5, 5};
    const std::vector<double> target = {1, 2, 3, 4};
    const std::vector<std::int32_t> eras = {0, 0, 1, 1};
    CHECK_THROWS_WITH_AS(era_wise_corr(pred, target, eras, 2),
                         doctest::Contains("1"), DataError);
  }
}

TEST_CASE("shuffled predictions decorrelate") {
  std::mt19937_64 rng(71);
  const int rows_per_era = 200;
  const int n_eras = 8;
  std::vector<double> pred, target;
  std::vector<std::int32_t> eras;
  for (int j = 0; j < n_eras; ++j) {
    for (int i = 0; i < rows_per_era; ++i) {
      pred.push_back(normal(rng));
      target.push_back(normal(rng));
      eras.push_back(j);
    }
  }
  const EraCorr ec = era_wise_corr(pred, target, eras, n_eras);
  CHECK(std::abs(ec.mean) <= 3.0 / std::sqrt(rows_per_era * n_eras));
}

TEST_CASE("compute_metrics fills accuracy only for binary targets") {
  const Dataset binary =
      make_dataset({{0.1, 0.9, 0.2, 0.8}}, {0, 1, 0, 1}, {0, 0, 1, 1});
  const MetricReport r1 =
      compute_metrics(V{0.2, 0.7, 0.4, 0.6}, binary);
  REQUIRE(r1.accuracy.has_value());
  CHECK(*r1.accuracy == 1.0);

  const Dataset continuous =
      make_dataset({{0.1, 0.9, 0.2, 0.8}}, {0, 1.5, 0, 1}, {0, 0, 1, 1});
  const MetricReport r2 =
      compute_metrics(V{0.2, 0.7, 0.4, 0.6}, continuous);
  CHECK_FALSE(r2.accuracy.has_value());
}
