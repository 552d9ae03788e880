#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace h2tea {

// Empty cells stand for undefined values (e.g. IRR without a sign change).
using Cell = std::variant<std::monostate, double, std::string>;

struct Column {
  std::string name;
  std::string unit;   // rendered as "name (unit)" in headers when non-empty
  int precision = 6;  // fixed decimals for numeric cells; < 0 = shortest round-trip
};

enum class Format { table, csv, json };

// Throws config_error for anything but table/csv/json.
Format parse_format(std::string_view name);

// Row-major report. Every format prints numbers through the same fixed
// precision per column, so the numeric content is identical across formats.
struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);

  std::string to_csv() const;   // header + rows, LF endings
  std::string to_text() const;  // space-aligned columns
  std::string to_json() const;  // array of objects keyed by column name
  std::string render(Format f) const;
};

std::string format_number(double v, int precision);

}  // namespace h2tea
