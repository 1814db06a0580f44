#include "freqpred/table.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "freqpred/rational.hpp"

namespace freqpred {

namespace {

bool needs_quotes(std::string_view cell) {
  return cell.find_first_of(",\"\n\r") != std::string_view::npos;
}

void write_cell(std::ostream& os, std::string_view cell) {
  if (!needs_quotes(cell)) {
    os << cell;
    return;
  }
  os << '"';
  for (char c : cell) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}

void write_record(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    write_cell(os, cells[i]);
  }
  os << '\n';
}

nlohmann::ordered_json json_cell(const std::string& cell, ColumnKind kind) {
  if (cell.empty()) return nullptr;
  switch (kind) {
    case ColumnKind::integer: {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec == std::errc() && ptr == cell.data() + cell.size()) return v;
      return cell;
    }
    case ColumnKind::number:
      if (cell == "inf" || cell == "-inf" || cell == "nan") return cell;
      return to_double(parse_rational(cell));
    case ColumnKind::boolean:
      return cell == "true";
    case ColumnKind::text:
      break;
  }
  return cell;
}

}  // namespace

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size())
    throw std::logic_error("Table: row width does not match the header");
  rows.push_back(std::move(row));
}

void write_csv(std::ostream& os, const Table& table) {
  std::vector<std::string> header;
  for (const auto& c : table.columns) header.push_back(c.name);
  write_record(os, header);
  for (const auto& row : table.rows) write_record(os, row);
}

std::string to_csv(const Table& table) {
  std::ostringstream os;
  write_csv(os, table);
  return os.str();
}

Table parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string cell;
  bool quoted = false;
  bool at_record_start = true;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    at_record_start = false;
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(cell));
      cell.clear();
    } else if (c == '\n') {
      record.push_back(std::move(cell));
      cell.clear();
      records.push_back(std::move(record));
      record.clear();
      at_record_start = true;
    } else {
      cell.push_back(c);
    }
  }
  if (quoted) throw ParseError("CSV: unterminated quoted field");
  if (!at_record_start) throw ParseError("CSV: last record is not newline-terminated");
  if (records.empty()) throw ParseError("CSV: missing header");

  Table table;
  for (auto& name : records.front()) table.columns.push_back({std::move(name), ColumnKind::text});
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.columns.size())
      throw ParseError("CSV: record " + std::to_string(r) + " has the wrong number of fields");
    table.rows.push_back(std::move(records[r]));
  }
  return table;
}

void write_json(std::ostream& os, const Table& table) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i)
      obj[table.columns[i].name] = json_cell(row[i], table.columns[i].kind);
    doc.push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

}  // namespace freqpred
