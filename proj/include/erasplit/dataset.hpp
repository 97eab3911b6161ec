#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace erasplit {

// Column-major supervised dataset. Eras are dense ids in [0, n_eras);
// make_dataset re-indexes whatever integer labels the caller provides.
// Treat instances as immutable once built.
struct Dataset {
  std::vector<std::vector<double>> columns;  // [n_features][n_rows]
  std::vector<double> targets;               // [n_rows]
  std::vector<std::int32_t> eras;            // [n_rows], dense ids
  std::int32_t n_eras = 0;
  std::vector<std::string> feature_names;    // [n_features]

  std::size_t n_rows() const { return targets.size(); }
  std::size_t n_features() const { return columns.size(); }

  // Copies one row's features into a caller-provided buffer of size
  // n_features().
  void gather_row(std::size_t row, double* out) const;
};

// Validates shapes and values, re-indexes raw era labels to dense ids
// [0, n_eras) preserving ascending label order. Throws DataError on ragged
// columns, non-finite features/targets, or empty input. feature_names may be
// empty; default names f0, f1, ... are filled in.
Dataset make_dataset(std::vector<std::vector<double>> columns,
                     std::vector<double> targets,
                     const std::vector<std::int64_t>& raw_eras,
                     std::vector<std::string> feature_names = {});

// CSV with a header row; one era column of integers, one target column of
// reals, every other column a numeric feature. Comma separated, '.' decimal
// point. Errors carry the file position and column name.
Dataset load_dataset(const std::filesystem::path& path,
                     const std::string& era_column = "era",
                     const std::string& target_column = "target");

// Inverse of load_dataset: feature columns first (in stored order), then the
// era and target columns. Numbers are written with enough digits to
// round-trip exactly.
void save_dataset_csv(const Dataset& data, const std::filesystem::path& path,
                      const std::string& era_column = "era",
                      const std::string& target_column = "target");

// Row indices grouped by era id; result[j] lists the rows of era j in
// ascending row order.
std::vector<std::vector<std::int32_t>> group_rows_by_era(const Dataset& data);

}  // namespace erasplit
