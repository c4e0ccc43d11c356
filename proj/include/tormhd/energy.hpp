#pragma once

#include "tormhd/state.hpp"

namespace tormhd {

/// Running account of E = ||u||^2 + ||b||^2 against the dissipation
/// D = nu ||grad u||^2 + eta ||grad b||^2. The exact identity is
/// E(t) + 2 int_0^t D = E(0), so the defect E(0) - E(t) - 2 int D vanishes
/// up to time-integration error.
struct EnergyLedger {
  double initial_energy = 0.0;
  double current_energy = 0.0;
  /// int_0^t D dtau
  double dissipation_integral = 0.0;

  double time = 0.0;
  double trapezoid_sum = 0.0;
  double last_dissipation = 0.0;
  double initial_rate = 0.0;  ///< dD/dt at t = 0
  double last_rate = 0.0;
  bool has_rate = false;

  double defect() const { return initial_energy - current_energy - 2.0 * dissipation_integral; }
};

/// Time derivative of D along (du, db), the full right-hand side at `state`.
double dissipation_rate(const MhdState& state, const SpectralField& du, const SpectralField& db);

/// Ledger at the initial state; `rate` is dD/dt there when available.
EnergyLedger energy_ledger_start(const MhdState& state, const double* rate = nullptr);

/// Advances the ledger to `state`, one step dt after the previous update.
/// The trapezoid sum gets the endpoint correction -dt^2/12 (D'(t) - D'(0))
/// when rates are supplied at both ends, which makes the quadrature
/// fourth-order on a uniform step.
EnergyLedger energy_ledger_update(const EnergyLedger& ledger, const MhdState& state, double dt,
                                  const double* rate = nullptr);

}  // namespace tormhd
