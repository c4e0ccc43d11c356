#include "tormhd/io/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tormhd/error.hpp"

namespace tormhd::io {

std::string format_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  char buf[32];
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void write_csv(const std::string& path, const Table& table) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out << format_csv(table);
  out.close();
  if (!out) throw IoError(path, "write failed");
}

Table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open for reading");
  Table t;
  std::string line;
  if (!std::getline(in, line)) throw IoError(path, "missing header");
  std::stringstream head(line);
  for (std::string cell; std::getline(head, cell, ',');) t.columns.push_back(cell);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) {
      try {
        std::size_t used = 0;
        row.push_back(std::stod(cell, &used));
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw IoError(path, "line " + std::to_string(lineno) + ": bad number '" + cell + "'");
      }
    }
    if (row.size() != t.columns.size()) throw IoError(path, "line " + std::to_string(lineno) + ": wrong column count");
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace tormhd::io
