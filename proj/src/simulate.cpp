#include "tormhd/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <memory>

#include "tormhd/error.hpp"
#include "tormhd/field_ops.hpp"
#include "tormhd/io/snapshot.hpp"
#include "tormhd/mode_table.hpp"
#include "tormhd/norms.hpp"
#include "tormhd/stepper.hpp"

namespace tormhd {

namespace {

std::string numbered(const char* stem, long step) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s_%08ld.spc", stem, step);
  return buf;
}

}  // namespace

double ledger_rate(const MhdState& s, const NonlinearRate& k) {
  const ModeTable& t = mode_table(s.grid());
  SpectralField du = k.du;
  SpectralField db = k.db;
  for (int c = 0; c < s.grid().dim; ++c) {
    auto a = du.component(c);
    auto b = db.component(c);
    const auto u = s.u.component(c);
    const auto v = s.b.component(c);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] -= s.nu * t.kappa_squared[i] * u[i];
      b[i] -= s.eta * t.kappa_squared[i] * v[i];
    }
  }
  return dissipation_rate(s, du, db);
}

std::string snapshot_name(long step) { return numbered("snap", step); }
std::string pressure_snapshot_name(long step) { return numbered("pressure", step); }

Grid SimConfig::grid() const {
  try {
    return make_grid(dim, modes, side_length);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("grid", e.what());
  }
}

long SimConfig::step_count() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt", "must be positive and finite");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw ConfigError("t_end", "must be positive and finite");
  const double q = t_end / dt;
  const long n = std::lround(q);
  if (n < 1 || std::fabs(q - static_cast<double>(n)) > 1e-9 * q)
    throw ConfigError("t_end", "must be a positive integer multiple of dt");
  return n;
}

double cfl_limit(const MhdState& s) {
  const double speed = lp_norm(s.u, kInf) + lp_norm(s.b, kInf);
  const double kmax = s.grid().band_limit * s.grid().kappa_unit();
  return speed > 0.0 ? 1.0 / (speed * kmax) : INFINITY;
}

SimResult simulate(const SimConfig& cfg, const std::string& out_dir, const SimHooks& hooks) {
  const long steps = cfg.step_count();
  if (cfg.output_every < 1) throw ConfigError("output_every", "must be >= 1");
  if (cfg.snapshot_every < 0) throw ConfigError("snapshot_every", "must be >= 0");
  if (!(cfg.nu >= 0.0)) throw ConfigError("nu", "must be non-negative");
  if (!(cfg.eta >= 0.0)) throw ConfigError("eta", "must be non-negative");
  const bool snapshots = cfg.snapshot_every > 0;
  if (snapshots && out_dir.empty()) throw ConfigError("snapshot_every", "snapshots need an output directory");

  MhdState state;
  if (!cfg.initial_snapshot.empty()) {
    state = io::state_from_snapshot(io::read_snapshot(cfg.initial_snapshot), cfg.initial_snapshot);
    if (!(state.grid() == cfg.grid()))
      throw ConfigError("initial.snapshot", "snapshot grid " + state.grid().describe() + " differs from the config grid");
    state.t = 0.0;
  } else {
    try {
      state = make_initial_state(cfg.grid(), cfg.initial, cfg.nu, cfg.eta);
    } catch (const std::invalid_argument& e) {
      throw ConfigError("initial.preset", e.what());
    }
  }
  state.nu = cfg.nu;
  state.eta = cfg.eta;
  const double ceiling = cfl_limit(state);
  if (cfg.dt > ceiling)
    throw ConfigError("dt", "exceeds the stability ceiling " + std::to_string(ceiling) + " of the initial data");

  std::unique_ptr<RunMonitor> monitor;
  try {
    monitor = std::make_unique<RunMonitor>(cfg.dim, cfg.criteria, cfg.axis_permutation);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("criteria", e.what());
  }
  SimResult res;
  res.columns = monitor->columns();
  const bool pressure_wanted = monitor->needs_pressure() || hooks.want_pressure || cfg.pressure_snapshots;

  const auto emit = [&](const MhdState& s, long n, bool row, bool snap) {
    SpectralField pi;
    if ((row || (snap && cfg.pressure_snapshots)) && pressure_wanted) pi = pressure_solve(s.u, s.b, cfg.dealias);
    if (row) {
      monitor->record(s, pi.empty() ? nullptr : &pi);
      if (hooks.on_output) hooks.on_output(s, pi.empty() ? nullptr : &pi);
    }
    if (snap) {
      const std::string name = snapshot_name(n);
      io::write_snapshot((std::filesystem::path(out_dir) / name).string(), s);
      res.files.push_back(name);
      if (cfg.pressure_snapshots) {
        const std::string pn = pressure_snapshot_name(n);
        io::write_field_snapshot((std::filesystem::path(out_dir) / pn).string(), pi, s.t, s.nu, s.eta);
        res.files.push_back(pn);
      }
    }
  };

  res.max_divergence = relative_divergence(state);
  long n = 0;
  try {
    for (;; ++n) {
      const NonlinearRate k1 = nonlinear_rate(state, cfg.dealias);
      const double rate = ledger_rate(state, k1);
      if (n == 0) monitor->start_ledger(state, &rate);
      else monitor->advance_ledger(state, cfg.dt, &rate);
      const bool last = n == steps;
      emit(state, n, last || n % cfg.output_every == 0, snapshots && (last || n % cfg.snapshot_every == 0));
      if (last) break;
      state = step_ifrk4(state, cfg.dt, cfg.dealias, &k1);
      state.t = static_cast<double>(n + 1) * cfg.dt;
      res.max_divergence = std::max(res.max_divergence, relative_divergence(state));
    }
  } catch (const DivergedError& e) {
    res.status = "diverged";
    res.message = e.what();
    monitor->mark_diverged();
  }
  res.steps = n;
  res.end_time = state.t;
  res.rows = monitor->rows();
  res.statuses = monitor->statuses();
  res.ledger = monitor->ledger();
  res.final_state = std::move(state);
  return res;
}

}  // namespace tormhd
