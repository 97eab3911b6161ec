#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "erasplit/common.hpp"
#include "erasplit/dataset.hpp"
#include "test_support.hpp"

using namespace erasplit;

namespace {

std::filesystem::path write_temp_csv(const std::string& name,
                                     const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

}  // namespace

TEST_CASE("load_dataset reads the four-row two-era file") {
  const auto path = write_temp_csv("erasplit_prop1.csv",
                                   "feature1,feature2,era,target\n"
                                   "1,1,0,-1\n"
                                   "2,3,0,-2\n"
                                   "3,2,1,-3\n"
                                   "4,4,1,-4\n");
  const Dataset d = load_dataset(path.string());
  CHECK(d.n_rows() == 4);
  CHECK(d.n_features() == 2);
  CHECK(d.n_eras == 2);
  CHECK(d.feature_names == std::vector<std::string>{"feature1", "feature2"});
  CHECK(d.columns[0] == std::vector<double>{1, 2, 3, 4});
  CHECK(d.columns[1] == std::vector<double>{1, 3, 2, 4});
  CHECK(d.eras == std::vector<std::int32_t>{0, 0, 1, 1});
  CHECK(d.targets == std::vector<double>{-1, -2, -3, -4});
}

TEST_CASE("era identifiers are densely re-indexed") {
  SUBCASE("a single identifier maps to era 0") {
    const auto path = write_temp_csv("erasplit_one_era.csv",
                                     "x,era,target\n"
                                     "1,7,0.5\n"
                                     "2,7,0.25\n");
    const Dataset d = load_dataset(path.string());
    CHECK(d.n_eras == 1);
    CHECK(d.eras == std::vector<std::int32_t>{0, 0});
  }
  SUBCASE("identifiers keep their sort order") {
    const auto path = write_temp_csv("erasplit_eras.csv",
                                     "x,era,target\n"
                                     "1,10,0\n"
                                     "2,20,0\n"
                                     "3,10,0\n");
    const Dataset d = load_dataset(path.string());
    CHECK(d.n_eras == 2);
    CHECK(d.eras == std::vector<std::int32_t>{0, 1, 0});
  }
}

TEST_CASE("load_dataset error handling") {
  SUBCASE("missing era column") {
    const auto path = write_temp_csv("erasplit_noera.csv", "x,target\n1,2\n");
    CHECK_THROWS_WITH_AS(load_dataset(path.string()),
                         doctest::Contains("era"), DataError);
  }
  SUBCASE("missing target column") {
    const auto path = write_temp_csv("erasplit_notgt.csv", "x,era\n1,2\n");
    CHECK_THROWS_WITH_AS(load_dataset(path.string()),
                         doctest::Contains("target"), DataError);
  }
  SUBCASE("non-numeric cell names the row and column") {
    const auto path = write_temp_csv("erasplit_bad.csv",
                                     "x,era,target\n1,0,0\nfoo,0,1\n");
    CHECK_THROWS_WITH_AS(load_dataset(path.string()), doctest::Contains(":3"),
                         DataError);
  }
  SUBCASE("empty file") {
    const auto path = write_temp_csv("erasplit_empty.csv", "");
    CHECK_THROWS_AS(load_dataset(path.string()), DataError);
  }
  SUBCASE("header only") {
    const auto path = write_temp_csv("erasplit_hdr.csv", "x,era,target\n");
    CHECK_THROWS_AS(load_dataset(path.string()), DataError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_dataset("/nonexistent/nope.csv"), DataError);
  }
}

TEST_CASE("make_dataset validation") {
  CHECK_THROWS_AS(make_dataset({{1.0, 2.0}}, {1.0}, {0, 0}), DataError);
  CHECK_THROWS_AS(
      make_dataset({{1.0, std::nan("")}}, {1.0, 2.0}, {0, 0}), DataError);
  CHECK_THROWS_AS(make_dataset({}, {}, {}), DataError);
}

TEST_CASE("group_rows_by_era") {
  SUBCASE("two eras") {
    const Dataset d = make_dataset({{1, 2, 3, 4}}, {0, 0, 0, 0}, {0, 0, 1, 1});
    const auto groups = group_rows_by_era(d);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0] == std::vector<std::int32_t>{0, 1});
    CHECK(groups[1] == std::vector<std::int32_t>{2, 3});
  }
  SUBCASE("single era") {
    const Dataset d = make_dataset({{1, 2, 3}}, {0, 0, 0}, {5, 5, 5});
    const auto groups = group_rows_by_era(d);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0] == std::vector<std::int32_t>{0, 1, 2});
  }
  SUBCASE("interleaved eras") {
    const Dataset d = make_dataset({{1, 2, 3}}, {0, 0, 0}, {1, 0, 1});
    const auto groups = group_rows_by_era(d);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0] == std::vector<std::int32_t>{1});
    CHECK(groups[1] == std::vector<std::int32_t>{0, 2});
  }
}

TEST_CASE("group_rows_by_era partitions all rows") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 60));
    const int m = 1 + static_cast<int>(uniform_index(rng, 5));
    const Dataset d =
        testsupport::random_dataset(rng, n, 2, std::min(m, n));
    const auto groups = group_rows_by_era(d);
    std::size_t total = 0;
    std::vector<bool> seen(d.n_rows(), false);
    for (const auto& g : groups) {
      for (std::int32_t idx : g) {
        CHECK_FALSE(seen[idx]);
        seen[idx] = true;
      }
      total += g.size();
    }
    CHECK(total == d.n_rows());
  }
}

TEST_CASE("CSV round-trip preserves the dataset exactly") {
  std::mt19937_64 rng(7);
  const Dataset original = testsupport::random_dataset(rng, 37, 3, 4);
  const auto path =
      std::filesystem::temp_directory_path() / "erasplit_roundtrip.csv";
  save_dataset_csv(original, path.string());
  const Dataset reloaded = load_dataset(path.string());
  CHECK(reloaded.columns == original.columns);
  CHECK(reloaded.targets == original.targets);
  CHECK(reloaded.eras == original.eras);
  CHECK(reloaded.feature_names == original.feature_names);
  CHECK(reloaded.n_eras == original.n_eras);
}
