#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "tormhd/criteria.hpp"
#include "tormhd/monitor.hpp"
#include "tormhd/presets.hpp"
#include "tormhd/rhs.hpp"
#include "tormhd/stepper.hpp"

namespace tormhd {

struct SimConfig {
  int dim = 4;
  int modes = 16;
  double side_length = 2.0 * std::numbers::pi;
  InitialCondition initial;
  std::string initial_snapshot;  ///< overrides `initial` when set
  double nu = 1.0;
  double eta = 1.0;
  double dt = 1e-3;
  double t_end = 0.1;
  int output_every = 1;    ///< steps between series rows
  int snapshot_every = 0;  ///< steps between snapshots; 0 disables them
  bool pressure_snapshots = false;
  std::uint64_t seed = 0;
  std::array<int, 4> axis_permutation{0, 1, 2, 3};
  Dealias dealias = Dealias::native;
  std::vector<CriterionSpec> criteria;

  Grid grid() const;
  /// t_end / dt; throws ConfigError unless it is a positive integer.
  long step_count() const;
};

/// Stability ceiling 1 / ((|u|_inf + |b|_inf) kappa_max) with kappa_max the
/// largest per-axis wavenumber of the band; infinite for the zero state.
double cfl_limit(const MhdState& state);

/// dD/dt along the full right-hand side (nonlinear rate k plus diffusion).
double ledger_rate(const MhdState& state, const NonlinearRate& k);

struct SimHooks {
  /// Called at every series row with the state and, when computed, its
  /// pressure.
  std::function<void(const MhdState&, const SpectralField* pressure)> on_output;
  bool want_pressure = false;
};

struct SimResult {
  std::string status = "completed";  ///< completed | diverged
  double end_time = 0.0;
  std::string message;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<MonitorStatus> statuses;
  EnergyLedger ledger;
  MhdState final_state;
  double max_divergence = 0.0;  ///< worst relative divergence over all steps
  long steps = 0;
  std::vector<std::string> files;  ///< snapshot names written into the output directory
};

/// Steps the configured system from its initial data to t_end. Series rows
/// are recorded every output_every steps and at the end; the energy ledger
/// advances every step. Snapshots go to `out_dir` (required when
/// snapshot_every > 0) as snap_<step>.spc and, with pressure_snapshots,
/// pressure_<step>.spc. A non-finite state ends the run with status
/// "diverged" and the rows recorded so far.
///
/// Throws ConfigError for invalid parameters, including dt above the
/// stability ceiling, and IoError for snapshot failures.
SimResult simulate(const SimConfig& config, const std::string& out_dir = {}, const SimHooks& hooks = {});

/// Snapshot file name for a step index.
std::string snapshot_name(long step);
std::string pressure_snapshot_name(long step);

}  // namespace tormhd
