#include "erasplit/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

#include "erasplit/common.hpp"

namespace erasplit {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double_cell(std::string_view cell, std::size_t line_no,
                         const std::string& column,
                         const std::filesystem::path& path) {
  cell = trim(cell);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw DataError(path.string() + ":" + std::to_string(line_no) +
                    ": column '" + column + "': cannot parse '" +
                    std::string(cell) + "' as a number");
  }
  if (!std::isfinite(value)) {
    throw DataError(path.string() + ":" + std::to_string(line_no) +
                    ": column '" + column + "': value is not finite");
  }
  return value;
}

std::int64_t parse_era_cell(std::string_view cell, std::size_t line_no,
                            const std::string& column,
                            const std::filesystem::path& path) {
  cell = trim(cell);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
    throw DataError(path.string() + ":" + std::to_string(line_no) +
                    ": column '" + column + "': cannot parse '" +
                    std::string(cell) + "' as an integer era label");
  }
  return value;
}

}  // namespace

void Dataset::gather_row(std::size_t row, double* out) const {
  for (std::size_t f = 0; f < columns.size(); ++f) {
    out[f] = columns[f][row];
  }
}

Dataset make_dataset(std::vector<std::vector<double>> columns,
                     std::vector<double> targets,
                     const std::vector<std::int64_t>& raw_eras,
                     std::vector<std::string> feature_names) {
  const std::size_t n = targets.size();
  if (n == 0) {
    throw DataError("dataset has no rows");
  }
  if (raw_eras.size() != n) {
    throw DataError("era labels and targets disagree on row count");
  }
  for (std::size_t f = 0; f < columns.size(); ++f) {
    if (columns[f].size() != n) {
      throw DataError("feature column " + std::to_string(f) +
                      " has " + std::to_string(columns[f].size()) +
                      " rows, expected " + std::to_string(n));
    }
    for (double v : columns[f]) {
      if (!std::isfinite(v)) {
        throw DataError("feature column " + std::to_string(f) +
                        " contains a non-finite value");
      }
    }
  }
  for (double y : targets) {
    if (!std::isfinite(y)) {
      throw DataError("target column contains a non-finite value");
    }
  }
  if (feature_names.empty()) {
    feature_names.reserve(columns.size());
    for (std::size_t f = 0; f < columns.size(); ++f) {
      feature_names.push_back("f" + std::to_string(f));
    }
  } else if (feature_names.size() != columns.size()) {
    throw DataError("feature name count does not match feature column count");
  }

  std::map<std::int64_t, std::int32_t> era_ids;
  for (std::int64_t label : raw_eras) {
    era_ids.emplace(label, 0);
  }
  std::int32_t next = 0;
  for (auto& [label, id] : era_ids) {
    id = next++;
  }

  Dataset out;
  out.columns = std::move(columns);
  out.targets = std::move(targets);
  out.eras.reserve(n);
  for (std::int64_t label : raw_eras) {
    out.eras.push_back(era_ids.at(label));
  }
  out.n_eras = next;
  out.feature_names = std::move(feature_names);
  return out;
}

Dataset load_dataset(const std::filesystem::path& path,
                     const std::string& era_column,
                     const std::string& target_column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw DataError("cannot open '" + path.string() + "' for reading");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = std::move(buffer).str();

  std::vector<std::string_view> lines;
  {
    std::string_view rest = text;
    while (!rest.empty()) {
      std::size_t nl = rest.find('\n');
      std::string_view line =
          nl == std::string_view::npos ? rest : rest.substr(0, nl);
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      lines.push_back(line);
      if (nl == std::string_view::npos) {
        break;
      }
      rest.remove_prefix(nl + 1);
    }
  }
  while (!lines.empty() && trim(lines.back()).empty()) {
    lines.pop_back();
  }
  if (lines.empty()) {
    throw DataError("'" + path.string() + "' is empty");
  }

  std::vector<std::string_view> header = split_fields(lines[0]);
  std::size_t era_idx = header.size();
  std::size_t target_idx = header.size();
  std::vector<std::size_t> feature_cols;
  std::vector<std::string> feature_names;
  for (std::size_t c = 0; c < header.size(); ++c) {
    std::string_view name = trim(header[c]);
    if (name == era_column) {
      era_idx = c;
    } else if (name == target_column) {
      target_idx = c;
    } else {
      feature_cols.push_back(c);
      feature_names.emplace_back(name);
    }
  }
  if (era_idx == header.size()) {
    throw DataError("'" + path.string() + "': header has no '" + era_column +
                    "' column");
  }
  if (target_idx == header.size()) {
    throw DataError("'" + path.string() + "': header has no '" +
                    target_column + "' column");
  }

  std::vector<std::vector<double>> columns(feature_cols.size());
  std::vector<double> targets;
  std::vector<std::int64_t> raw_eras;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) {
      throw DataError(path.string() + ":" + std::to_string(li + 1) +
                      ": blank line inside data");
    }
    std::vector<std::string_view> cells = split_fields(lines[li]);
    if (cells.size() != header.size()) {
      throw DataError(path.string() + ":" + std::to_string(li + 1) + ": has " +
                      std::to_string(cells.size()) + " fields, header has " +
                      std::to_string(header.size()));
    }
    raw_eras.push_back(parse_era_cell(cells[era_idx], li + 1, era_column, path));
    targets.push_back(
        parse_double_cell(cells[target_idx], li + 1, target_column, path));
    for (std::size_t f = 0; f < feature_cols.size(); ++f) {
      columns[f].push_back(parse_double_cell(cells[feature_cols[f]], li + 1,
                                             feature_names[f], path));
    }
  }
  if (targets.empty()) {
    throw DataError("'" + path.string() + "' has a header but no data rows");
  }

  return make_dataset(std::move(columns), std::move(targets), raw_eras,
                      std::move(feature_names));
}

void save_dataset_csv(const Dataset& data, const std::filesystem::path& path,
                      const std::string& era_column,
                      const std::string& target_column) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw DataError("cannot open '" + path.string() + "' for writing");
  }
  for (std::size_t f = 0; f < data.n_features(); ++f) {
    out << data.feature_names[f] << ',';
  }
  out << era_column << ',' << target_column << '\n';

  char buf[64];
  auto write_double = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
  };
  for (std::size_t i = 0; i < data.n_rows(); ++i) {
    for (std::size_t f = 0; f < data.n_features(); ++f) {
      write_double(data.columns[f][i]);
      out << ',';
    }
    out << data.eras[i] << ',';
    write_double(data.targets[i]);
    out << '\n';
  }
  if (!out) {
    throw DataError("failed writing '" + path.string() + "'");
  }
}

std::vector<std::vector<std::int32_t>> group_rows_by_era(const Dataset& data) {
  std::vector<std::vector<std::int32_t>> groups(
      static_cast<std::size_t>(data.n_eras));
  for (std::size_t i = 0; i < data.n_rows(); ++i) {
    groups[static_cast<std::size_t>(data.eras[i])].push_back(
        static_cast<std::int32_t>(i));
  }
  return groups;
}

}  // namespace erasplit
