// Deterministic CSV output: UTF-8, comma separators, one header row,
// 17-significant-digit decimal formatting, no locale dependence.

#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace waveres {
namespace csv {

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<double>> rows;
};

inline std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline void write(std::ostream& out, const Table& table) {
  for (std::size_t j = 0; j < table.headers.size(); ++j) {
    if (j) out << ',';
    out << table.headers[j];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << format_value(row[j]);
    }
    out << '\n';
  }
}

inline void write_file(const std::string& path, const Table& table) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot open for writing: " + path);
  write(out, table);
  out.flush();
  if (!out)
    throw std::runtime_error("write failed: " + path);
}

}  // namespace csv
}  // namespace waveres
