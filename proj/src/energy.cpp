#include "tormhd/energy.hpp"

#include <stdexcept>

#include "tormhd/mode_table.hpp"
#include "tormhd/norms.hpp"

namespace tormhd {

namespace {

double rate_term(const SpectralField& f, const SpectralField& df, const RealBuffer& k2) {
  double s = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    const auto a = f.component(c);
    const auto b = df.component(c);
    for (std::size_t i = 0; i < a.size(); ++i)
      s += k2[i] * (a[i].real() * b[i].real() + a[i].imag() * b[i].imag());
  }
  return 2.0 * s;
}

}  // namespace

double dissipation_rate(const MhdState& state, const SpectralField& du, const SpectralField& db) {
  const ModeTable& t = mode_table(state.grid());
  const double vol = state.grid().volume();
  return vol * (state.nu * rate_term(state.u, du, t.kappa_squared) + state.eta * rate_term(state.b, db, t.kappa_squared));
}

EnergyLedger energy_ledger_start(const MhdState& state, const double* rate) {
  EnergyLedger l;
  l.initial_energy = energy(state);
  l.current_energy = l.initial_energy;
  l.time = state.t;
  l.last_dissipation = dissipation(state);
  if (rate) {
    l.initial_rate = *rate;
    l.last_rate = *rate;
    l.has_rate = true;
  }
  return l;
}

EnergyLedger energy_ledger_update(const EnergyLedger& ledger, const MhdState& state, double dt, const double* rate) {
  if (!(dt > 0.0)) throw std::invalid_argument("time step must be positive");
  EnergyLedger l = ledger;
  const double d = dissipation(state);
  l.trapezoid_sum += 0.5 * dt * (l.last_dissipation + d);
  l.last_dissipation = d;
  l.current_energy = energy(state);
  l.time = state.t;
  if (rate && l.has_rate) {
    l.last_rate = *rate;
    l.dissipation_integral = l.trapezoid_sum - dt * dt / 12.0 * (l.last_rate - l.initial_rate);
  } else {
    l.has_rate = false;
    l.dissipation_integral = l.trapezoid_sum;
  }
  return l;
}

}  // namespace tormhd
