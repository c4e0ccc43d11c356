#pragma once

#include <array>
#include <string>
#include <vector>

#include "tormhd/criteria.hpp"
#include "tormhd/energy.hpp"
#include "tormhd/series.hpp"
#include "tormhd/state.hpp"

namespace tormhd {

/// Turns a sequence of states into series rows: the energy ledger, W/X/Y/Z,
/// the norms and accumulators of every criterion spec, both sides of the
/// Gronwall inequalities and the bootstrap trigger. The same object drives
/// live runs and snapshot replays, so both emit one schema.
///
/// Column order: time, energy, dissipation_integral, defect, W, X, Y, Z; then
/// per spec its norm tags ("L8_u3"), accumulators ("acc_T1_1_u3" or
/// "sup_T1_1_u3") and Gronwall columns ("gr_T1_1_wy_rhs", "gr_T1_1_wy_ratio",
/// "gr_T1_1_xz_rhs", "gr_T1_1_xz_ratio"); last "L{N}_grad_u", "L{N}_grad_b",
/// "bootstrap" and "divergence". Repeated names appear once.
class RunMonitor {
 public:
  RunMonitor(int dim, std::vector<CriterionSpec> specs, std::array<int, 4> permutation = {0, 1, 2, 3});

  const std::vector<std::string>& columns() const noexcept { return columns_; }
  bool needs_pressure() const noexcept { return needs_pressure_; }

  /// Energy bookkeeping; `rate` is dD/dt at the state (see energy.hpp).
  void start_ledger(const MhdState& state, const double* rate = nullptr);
  void advance_ledger(const MhdState& state, double dt, const double* rate = nullptr);

  /// Appends a row for `state`, whose time must exceed the previous row's.
  /// The ledger must already be advanced to the state's time. `pressure` is
  /// required when needs_pressure().
  const std::vector<double>& record(const MhdState& state, const SpectralField* pressure = nullptr);

  /// Flags every criterion status as diverged.
  void mark_diverged();

  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  const NormSeries& series() const noexcept { return series_; }
  const std::vector<MonitorStatus>& statuses() const noexcept { return statuses_; }
  const EnergyLedger& ledger() const noexcept { return ledger_; }
  const std::vector<CriterionSpec>& specs() const noexcept { return specs_; }

 private:
  struct GronwallTrack {
    double sup_lhs = 0.0;
    double int_lhs = 0.0;
    double initial = 0.0;
    double int_rhs = 0.0;
    double prev_lhs = 0.0;
    double prev_rhs = 0.0;
  };
  struct NormColumn {
    std::string tag;
    std::string quantity;
    double p;
  };

  void add_column(const std::string& name);
  static double track(GronwallTrack& g, bool first, double dt, double sup_term, double int_term, double rhs);

  int dim_;
  std::vector<CriterionSpec> specs_;
  std::array<int, 4> perm_;
  bool needs_pressure_ = false;
  std::vector<std::string> columns_;
  std::vector<NormColumn> norms_;
  std::vector<MonitorStatus> statuses_;
  std::vector<std::array<GronwallTrack, 2>> gronwall_;
  NormSeries series_;
  EnergyLedger ledger_;
  bool ledger_started_ = false;
  std::vector<std::vector<double>> rows_;
};

}  // namespace tormhd
