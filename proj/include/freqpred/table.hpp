#ifndef FREQPRED_TABLE_HPP
#define FREQPRED_TABLE_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace freqpred {

/// How a column is rendered in JSON. CSV always writes the cell text.
enum class ColumnKind {
  text,     // JSON string
  integer,  // JSON integer (falls back to a string beyond 64 bits)
  number,   // JSON floating-point number
  boolean,  // "true" / "false"
};

struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::text;
};

/// Rows of pre-rendered cells under a header. An empty cell is a missing
/// value (JSON null).
struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

/// Comma-separated, '\n'-terminated, RFC 4180 quoting only where needed.
void write_csv(std::ostream& os, const Table& table);
std::string to_csv(const Table& table);

/// Parses CSV written by write_csv. All columns come back as text.
Table parse_csv(std::string_view text);

/// One JSON array of objects, one object per row.
void write_json(std::ostream& os, const Table& table);

}  // namespace freqpred

#endif  // FREQPRED_TABLE_HPP
