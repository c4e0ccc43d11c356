#include "tormhd/replay.hpp"

#include <algorithm>
#include <filesystem>

#include "tormhd/error.hpp"
#include "tormhd/io/manifest.hpp"
#include "tormhd/io/snapshot.hpp"
#include "tormhd/monitor.hpp"
#include "tormhd/simulate.hpp"

namespace tormhd {

namespace fs = std::filesystem;

io::Table replay(const std::string& dir, const io::MonitorSpec& spec) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw ConfigError("in", dir + " is not a directory");
  std::vector<std::string> names;
  for (const auto& e : fs::directory_iterator(dir)) {
    const std::string n = e.path().filename().string();
    if (e.is_regular_file() && n.rfind("snap_", 0) == 0 && e.path().extension() == ".spc") names.push_back(n);
  }
  std::sort(names.begin(), names.end());
  if (names.empty()) throw ConfigError("in", "no snapshots in " + dir);

  const fs::path manifest = fs::path(dir) / "manifest.json";
  if (fs::exists(manifest)) {
    const auto m = io::read_manifest(manifest.string());
    for (const auto& bad : io::verify_manifest(dir, m))
      throw CorruptSnapshotError((fs::path(dir) / bad).string(), "checksum does not match the manifest");
  }

  std::unique_ptr<RunMonitor> monitor;
  double prev = 0.0;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string path = (fs::path(dir) / names[i]).string();
    const MhdState s = io::state_from_snapshot(io::read_snapshot(path), path);
    if (!monitor) {
      try {
        monitor = std::make_unique<RunMonitor>(s.grid().dim, spec.criteria, spec.axis_permutation);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("criteria", e.what());
      }
    } else if (!(s.t > prev)) {
      throw ConfigError("in", path + ": snapshot times must increase");
    }
    const double rate = ledger_rate(s, nonlinear_rate(s));
    if (i == 0) monitor->start_ledger(s, &rate);
    else monitor->advance_ledger(s, s.t - prev, &rate);
    monitor->record(s);
    prev = s.t;
  }
  return {monitor->columns(), monitor->rows()};
}

}  // namespace tormhd
