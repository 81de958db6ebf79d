// Minimal CSV emission: shortest round-trip doubles, empty cells for missing
// values, '\n' line endings.

#pragma once

#include <charconv>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

namespace bunching {

inline std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  if (r.ec != std::errc{}) return {};
  return std::string(buf, r.ptr);
}

using CsvCell = std::variant<std::monostate, double, std::int64_t, std::string>;

inline CsvCell cell(std::optional<double> v) {
  if (v) return *v;
  return std::monostate{};
}

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<CsvCell>>& rows() const { return rows_; }

  void add_row(std::vector<CsvCell> row) {
    row.resize(columns_.size());
    rows_.push_back(std::move(row));
  }

  void write(std::ostream& os) const {
    write_line(os, columns_);
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) os << ',';
        os << render(r[i]);
      }
      os << '\n';
    }
  }

 private:
  static std::string render(const CsvCell& c) {
    struct {
      std::string operator()(std::monostate) const { return {}; }
      std::string operator()(double v) const { return format_double(v); }
      std::string operator()(std::int64_t v) const { return std::to_string(v); }
      std::string operator()(const std::string& s) const { return s; }
    } visitor;
    return std::visit(visitor, c);
  }

  static void write_line(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << '\n';
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<CsvCell>> rows_;
};

}  // namespace bunching
