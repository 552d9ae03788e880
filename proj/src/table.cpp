#include "h2tea/table.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "h2tea/errors.hpp"

namespace h2tea {

Format parse_format(std::string_view name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw config_error("format", "expected table, csv or json");
}

std::string format_number(double v, int precision) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  if (precision < 0) return fmt::format("{}", v);
  std::string s = fmt::format("{:.{}f}", v, precision);
  // "-0.00" -> "0.00"
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

namespace {

std::string header(const Column& c) { return c.unit.empty() ? c.name : c.name + " (" + c.unit + ")"; }

std::string cell_text(const Cell& cell, const Column& col) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d, col.precision);
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  return "";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw domain_error("row width does not match columns");
  rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(header(columns[i]));
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cell_text(row[i], columns[i]));
    }
    out += '\n';
  }
  return out;
}

std::string Table::to_text() const {
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) width[i] = header(columns[i]).size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], cell_text(row[i], columns[i]).size());
    }
  }
  auto line = [&](auto text_of) {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      std::string t = text_of(i);
      if (i) out += "  ";
      out += std::string(width[i] - t.size(), ' ') + t;
    }
    return out + '\n';
  };
  std::string out = line([&](std::size_t i) { return header(columns[i]); });
  for (const auto& row : rows) {
    out += line([&](std::size_t i) { return cell_text(row[i], columns[i]); });
  }
  return out;
}

std::string Table::to_json() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += r ? ",\n {" : "\n {";
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out += ", ";
      out += nlohmann::json(columns[i].name).dump() + ": ";
      const Cell& cell = rows[r][i];
      if (std::holds_alternative<double>(cell)) {
        out += cell_text(cell, columns[i]);
      } else if (const auto* s = std::get_if<std::string>(&cell)) {
        out += nlohmann::json(*s).dump();
      } else {
        out += "null";
      }
    }
    out += "}";
  }
  out += rows.empty() ? "]\n" : "\n]\n";
  return out;
}

std::string Table::render(Format f) const {
  switch (f) {
    case Format::table: return to_text();
    case Format::csv: return to_csv();
    case Format::json: return to_json();
  }
  return to_csv();
}

}  // namespace h2tea
