#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "json.hpp"
#include "selforg/version.hpp"

namespace cli {

Cell Cell::num(double x) {
  Cell c;
  c.kind = Kind::Real;
  c.real = x;
  return c;
}

Cell Cell::count(long n) {
  Cell c;
  c.kind = Kind::Integer;
  c.integer = n;
  return c;
}

Cell Cell::str(std::string s) {
  Cell c;
  c.kind = Kind::Text;
  c.text = std::move(s);
  return c;
}

namespace {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string csv_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == ',') {
      out += ';';
    } else if (c == '\n' || c == '\r') {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

void write_csv(const Table& t, std::ostream& out) {
  out << "# cavity_selforg " << selforg::kVersion << " " << t.subcommand << "\n";
  out << "# frequencies are in units of the recoil frequency omega_R\n";
  for (const auto& [key, value] : t.config) out << "# " << key << " = " << value << "\n";
  for (size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out << ',';
    out << t.columns[i];
  }
  out << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      switch (row[i].kind) {
        case Cell::Kind::Real:
          out << format_real(row[i].real);
          break;
        case Cell::Kind::Integer:
          out << row[i].integer;
          break;
        case Cell::Kind::Text:
          out << csv_escape(row[i].text);
          break;
      }
    }
    out << "\n";
  }
}

void write_json_lines(const Table& t, std::ostream& out) {
  nlohmann::ordered_json meta;
  meta["program"] = "cavity_selforg";
  meta["version"] = selforg::kVersion;
  meta["subcommand"] = t.subcommand;
  meta["units"] = "omega_R";
  nlohmann::ordered_json config;
  for (const auto& [key, value] : t.config) config[key] = value;
  meta["config"] = config;
  out << meta.dump() << "\n";
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (size_t i = 0; i < row.size(); ++i) {
      switch (row[i].kind) {
        case Cell::Kind::Real:
          if (std::isfinite(row[i].real)) {
            obj[t.columns[i]] = row[i].real;
          } else {
            obj[t.columns[i]] = nullptr;
          }
          break;
        case Cell::Kind::Integer:
          obj[t.columns[i]] = row[i].integer;
          break;
        case Cell::Kind::Text:
          obj[t.columns[i]] = row[i].text;
          break;
      }
    }
    out << obj.dump() << "\n";
  }
}

}  // namespace

void write_table(const Table& table, const std::string& format, const std::string& path) {
  const auto emit = [&](std::ostream& out) {
    if (format == "json-lines") {
      write_json_lines(table, out);
    } else {
      write_csv(table, out);
    }
  };
  if (path == "-") {
    emit(std::cout);
    std::cout.flush();
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    emit(out);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
  }
}

}  // namespace cli
