#pragma once

#include <optional>
#include <string>
#include <vector>

#include "params.hpp"

namespace btzotto::cli {

/// Tabular output with preformatted cells; empty cells are absent values.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// 12 significant digits; NaN (absent) becomes the empty string.
[[nodiscard]] std::string format_number(double v);
[[nodiscard]] std::string format_number(const std::optional<double>& v);

[[nodiscard]] Table to_table(const Dataset& ds);
[[nodiscard]] std::string csv_text(const Table& t);

[[nodiscard]] std::string sha256_hex(const std::string& bytes);

/// Writes `bytes` to a sibling temporary file, then renames it over `path`.
void write_atomically(const std::string& path, const std::string& bytes);

/// Writes the CSV and `<path>.manifest.json` beside it.
void write_dataset(const std::string& path, const Table& t, const ParamSet& params);

}  // namespace btzotto::cli
