#pragma once

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "tormhd/simulate.hpp"

namespace tormhd::io {

/// Simulation config document (JSON). Keys, all optional unless noted:
///
///   grid        {dim: 2|3|4, modes: even >= 8, side_length: > 0}
///   initial     {preset, seed, decay, amplitude_u, amplitude_b, band}
///               or {snapshot: path}
///   nu, eta, dt, t_end, output_every, snapshot_every,
///   pressure_snapshots, seed, dealias: "native" | "three_halves",
///   axis_permutation  four distinct axis labels in 1..4, default [1,2,3,4]
///   criteria    [{theorem, pairs: [{p, r}], smallness}]
///
/// Exponents are numbers or the string "inf". Unknown keys and wrong types
/// throw ConfigError naming the key path, e.g. "criteria[0].pairs[1].r".
SimConfig parse_sim_config(const nlohmann::json& doc);
SimConfig load_sim_config(const std::string& path);

/// Echo of a config as a complete JSON document that parses back to it.
nlohmann::json to_json(const SimConfig& config);

/// Spec document for offline monitoring: {criteria, axis_permutation}.
struct MonitorSpec {
  std::vector<CriterionSpec> criteria;
  std::array<int, 4> axis_permutation{0, 1, 2, 3};
};
MonitorSpec parse_monitor_spec(const nlohmann::json& doc);
MonitorSpec load_monitor_spec(const std::string& path);

/// Parses a JSON file; syntax errors become ConfigError, unreadable files
/// IoError.
nlohmann::json load_json(const std::string& path);

}  // namespace tormhd::io
