#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wreath/numeric.hpp"

namespace wreath {

class Cell {
 public:
  enum class Kind { Text, Integer, Float };

  static Cell text(std::string value);
  static Cell integer(const BigInt& value);
  static Cell integer(long long value);
  static Cell real(double value);

  Kind kind() const { return kind_; }
  /// Canonical text: integers in decimal, floats as shortest round-trip decimal.
  const std::string& str() const { return text_; }
  double number() const { return number_; }

 private:
  Kind kind_ = Kind::Text;
  std::string text_;
  double number_ = 0.0;
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Carried in JSON output only; CSV has a bare header.
  std::vector<std::pair<std::string, std::string>> metadata;

  void add_row(std::vector<Cell> row);
};

enum class Format { Csv, Json };
Format parse_format(const std::string& name);

std::string render_csv(const Table& table);
/// {"metadata": {...}, "rows": [{column: value, ...}, ...]}. Integers outside
/// the int64 range and non-finite floats become strings.
std::string render_json(const Table& table);
std::string render(const Table& table, Format format);

/// Writes to `path`, or to stdout when path is empty or "-". Throws std::runtime_error
/// when the file cannot be written.
void emit(const Table& table, Format format, const std::string& path);

}  // namespace wreath
