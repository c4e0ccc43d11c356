#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace tormhd::io {

/// Hex SHA-256 of a file's bytes. Throws IoError.
std::string sha256_file(const std::string& path);

struct FileEntry {
  std::string name;  ///< relative to the run directory
  std::uintmax_t bytes = 0;
  std::string sha256;
};

struct RunManifest {
  nlohmann::json config;
  std::string version;
  std::uint64_t seed = 0;
  std::string start_time;  ///< UTC, ISO 8601
  std::string end_time;
  std::string status;      ///< completed | diverged | io_error
  bool partial = false;
  std::vector<FileEntry> files;
};

/// Current UTC time as ISO 8601.
std::string utc_now();

/// Checksums every file named in `names` (relative to `dir`) and writes
/// dir/manifest.json.
void write_manifest(const std::string& dir, RunManifest manifest, const std::vector<std::string>& names);
RunManifest read_manifest(const std::string& path);

/// Names of inventory files whose size or checksum no longer matches.
std::vector<std::string> verify_manifest(const std::string& dir, const RunManifest& manifest);

/// Library version string.
const char* version();

}  // namespace tormhd::io
