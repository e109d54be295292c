#include "wreath/emit.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include "json.hpp"

namespace wreath {

Cell Cell::text(std::string value) {
  Cell c;
  c.kind_ = Kind::Text;
  c.text_ = std::move(value);
  return c;
}

Cell Cell::integer(const BigInt& value) {
  Cell c;
  c.kind_ = Kind::Integer;
  c.text_ = value.get_str();
  c.number_ = value.get_d();
  return c;
}

Cell Cell::integer(long long value) {
  Cell c;
  c.kind_ = Kind::Integer;
  c.text_ = std::to_string(value);
  c.number_ = static_cast<double>(value);
  return c;
}

Cell Cell::real(double value) {
  Cell c;
  c.kind_ = Kind::Float;
  c.text_ = format_double(value);
  c.number_ = value;
  return c;
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match the header");
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw ValidationError("unknown format '" + name + "' (expected csv or json)");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

nlohmann::ordered_json cell_json(const Cell& c) {
  switch (c.kind()) {
    case Cell::Kind::Text:
      return c.str();
    case Cell::Kind::Integer: {
      BigInt v(c.str());
      if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
      return c.str();
    }
    case Cell::Kind::Float:
      if (!std::isfinite(c.number())) return c.str();
      return c.number();
  }
  return nullptr;
}

}  // namespace

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(table.columns[i]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i].str());
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table) {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) doc["metadata"][key] = value;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = cell_json(row[i]);
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(2) + "\n";
}

std::string render(const Table& table, Format format) {
  return format == Format::Csv ? render_csv(table) : render_json(table);
}

void emit(const Table& table, Format format, const std::string& path) {
  const std::string text = render(table, format);
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace wreath
