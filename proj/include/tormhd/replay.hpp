#pragma once

#include <string>

#include "tormhd/io/config.hpp"
#include "tormhd/io/csv.hpp"

namespace tormhd {

/// Recomputes the series of a run from the snap_*.spc files in `dir`, in
/// name order, with the same schema as the live run. When dir/manifest.json
/// exists every snapshot it lists is checksummed first.
///
/// The energy ledger is advanced between consecutive snapshots, so its
/// columns match the live run only when snapshots were taken every step.
///
/// Throws ConfigError for an empty directory or non-increasing times and
/// CorruptSnapshotError naming the offending file.
io::Table replay(const std::string& dir, const io::MonitorSpec& spec);

}  // namespace tormhd
