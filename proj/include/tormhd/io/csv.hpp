#pragma once

#include <string>
#include <vector>

namespace tormhd::io {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Comma-separated header line, then one row per record with every value
/// printed as %.17g, so values round-trip exactly.
std::string format_csv(const Table& table);
void write_csv(const std::string& path, const Table& table);
/// Throws IoError on unreadable files and ragged or non-numeric rows.
Table read_csv(const std::string& path);

}  // namespace tormhd::io
