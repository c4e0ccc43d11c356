#include "tormhd/io/manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <memory>

#include "tormhd/error.hpp"

#ifndef TORMHD_VERSION
#define TORMHD_VERSION "unknown"
#endif

namespace tormhd::io {

namespace fs = std::filesystem;

const char* version() { return TORMHD_VERSION; }

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for checksum");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw IoError(path, "sha256 init failed");
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md, &len);
  std::string hex;
  char b[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(b, sizeof b, "%02x", md[i]);
    hex += b;
  }
  return hex;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const std::string& dir, RunManifest m, const std::vector<std::string>& names) {
  m.files.clear();
  for (const auto& n : names) {
    const std::string p = (fs::path(dir) / n).string();
    std::error_code ec;
    const auto bytes = fs::file_size(p, ec);
    if (ec) throw IoError(p, "cannot stat: " + ec.message());
    m.files.push_back({n, bytes, sha256_file(p)});
  }
  nlohmann::json j;
  j["version"] = m.version;
  j["seed"] = m.seed;
  j["config"] = m.config;
  j["start_time"] = m.start_time;
  j["end_time"] = m.end_time;
  j["status"] = m.status;
  j["partial"] = m.partial;
  j["files"] = nlohmann::json::array();
  for (const auto& f : m.files) j["files"].push_back({{"name", f.name}, {"bytes", f.bytes}, {"sha256", f.sha256}});
  const std::string path = (fs::path(dir) / "manifest.json").string();
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out << j.dump(2) << '\n';
  out.close();
  if (!out) throw IoError(path, "write failed");
}

RunManifest read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, "cannot open for reading");
  RunManifest m;
  try {
    const auto j = nlohmann::json::parse(in);
    m.version = j.at("version").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.config = j.at("config");
    m.start_time = j.at("start_time").get<std::string>();
    m.end_time = j.at("end_time").get<std::string>();
    m.status = j.at("status").get<std::string>();
    m.partial = j.at("partial").get<bool>();
    for (const auto& f : j.at("files"))
      m.files.push_back({f.at("name").get<std::string>(), f.at("bytes").get<std::uintmax_t>(),
                         f.at("sha256").get<std::string>()});
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path, std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::vector<std::string> verify_manifest(const std::string& dir, const RunManifest& m) {
  std::vector<std::string> bad;
  for (const auto& f : m.files) {
    const std::string p = (fs::path(dir) / f.name).string();
    std::error_code ec;
    const auto bytes = fs::file_size(p, ec);
    if (ec || bytes != f.bytes || sha256_file(p) != f.sha256) bad.push_back(f.name);
  }
  return bad;
}

}  // namespace tormhd::io
