#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cli {

struct Cell {
  enum class Kind { Real, Integer, Text };
  Kind kind = Kind::Real;
  double real = 0.0;
  long integer = 0;
  std::string text;

  static Cell num(double x);
  static Cell count(long n);
  static Cell str(std::string s);
};

// One tabular result set: the config echo travels with the data so a run can
// be reproduced from its own output.
struct Table {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Writes the table to `path` ("-" selects stdout). CSV rows carry 12
// significant digits; json-lines emits a meta object first, then one object
// per row. Output is byte-identical across runs. Throws std::runtime_error
// when the file cannot be written.
void write_table(const Table& table, const std::string& format, const std::string& path);

}  // namespace cli
