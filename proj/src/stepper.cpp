#include "tormhd/stepper.hpp"

#include <cmath>
#include <stdexcept>

#include "tormhd/error.hpp"
#include "tormhd/field_ops.hpp"
#include "tormhd/mode_table.hpp"

namespace tormhd {

namespace {

// Per-mode exp(-c |kappa|^2 tau).
RealBuffer decay_factors(const Grid& grid, double c, double tau) {
  const ModeTable& t = mode_table(grid);
  RealBuffer e(t.kappa_squared.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::exp(-c * t.kappa_squared[i] * tau);
  return e;
}

// out = e .* (x + h y), component-wise; y may be null.
void scaled_sum(const RealBuffer& e, const SpectralField& x, double h, const SpectralField* y, SpectralField& out) {
  out = SpectralField(x.grid(), x.components());
  for (int c = 0; c < x.components(); ++c) {
    const auto xs = x.component(c);
    auto o = out.component(c);
    if (y) {
      const auto ys = y->component(c);
      for (std::size_t i = 0; i < o.size(); ++i) o[i] = e[i] * (xs[i] + h * ys[i]);
    } else {
      for (std::size_t i = 0; i < o.size(); ++i) o[i] = e[i] * xs[i];
    }
  }
}

bool finite(const SpectralField& f) {
  for (const auto& z : f.all())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

struct Factors {
  RealBuffer half;
  RealBuffer full;
};

}  // namespace

NonlinearRate nonlinear_rate(const MhdState& state, Dealias mode) {
  NonlinearRate r;
  nonlinear_rhs(state.u, state.b, r.du, r.db, mode);
  return r;
}

MhdState step_ifrk4(const MhdState& state, double dt, Dealias mode, const NonlinearRate* k1_in) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("time step must be positive and finite");
  validate_state(state);
  const Grid& grid = state.grid();
  const Factors fu{decay_factors(grid, state.nu, 0.5 * dt), decay_factors(grid, state.nu, dt)};
  const Factors fb{decay_factors(grid, state.eta, 0.5 * dt), decay_factors(grid, state.eta, dt)};
  const double h = dt;

  const NonlinearRate k1 = k1_in ? *k1_in : nonlinear_rate(state, mode);

  MhdState stage = state;
  // u_a = E(h/2) (u_n + h/2 k1)
  scaled_sum(fu.half, state.u, 0.5 * h, &k1.du, stage.u);
  scaled_sum(fb.half, state.b, 0.5 * h, &k1.db, stage.b);
  const NonlinearRate k2 = nonlinear_rate(stage, mode);

  // u_b = E(h/2) u_n + h/2 k2
  scaled_sum(fu.half, state.u, 0.0, nullptr, stage.u);
  scaled_sum(fb.half, state.b, 0.0, nullptr, stage.b);
  stage.u.add_scaled(0.5 * h, k2.du);
  stage.b.add_scaled(0.5 * h, k2.db);
  const NonlinearRate k3 = nonlinear_rate(stage, mode);

  // u_c = E(h) u_n + h E(h/2) k3
  SpectralField e3u, e3b;
  scaled_sum(fu.half, k3.du, 0.0, nullptr, e3u);
  scaled_sum(fb.half, k3.db, 0.0, nullptr, e3b);
  scaled_sum(fu.full, state.u, 0.0, nullptr, stage.u);
  scaled_sum(fb.full, state.b, 0.0, nullptr, stage.b);
  stage.u.add_scaled(h, e3u);
  stage.b.add_scaled(h, e3b);
  const NonlinearRate k4 = nonlinear_rate(stage, mode);

  // u_{n+1} = E(h) u_n + h/6 [E(h) k1 + 2 E(h/2)(k2 + k3) + k4]
  MhdState next = state;
  const auto combine = [h](const RealBuffer& ef, const RealBuffer& eh, const SpectralField& un,
                           const SpectralField& a, const SpectralField& b2, const SpectralField& b3,
                           const SpectralField& d, SpectralField& out) {
    out = SpectralField(un.grid(), un.components());
    for (int c = 0; c < un.components(); ++c) {
      const auto x = un.component(c);
      const auto r1 = a.component(c);
      const auto r2 = b2.component(c);
      const auto r3 = b3.component(c);
      const auto r4 = d.component(c);
      auto o = out.component(c);
      for (std::size_t i = 0; i < o.size(); ++i)
        o[i] = ef[i] * x[i] + (h / 6.0) * (ef[i] * r1[i] + 2.0 * eh[i] * (r2[i] + r3[i]) + r4[i]);
    }
  };
  combine(fu.full, fu.half, state.u, k1.du, k2.du, k3.du, k4.du, next.u);
  combine(fb.full, fb.half, state.b, k1.db, k2.db, k3.db, k4.db, next.b);
  leray_project_in_place(next.u);
  leray_project_in_place(next.b);
  next.t = state.t + dt;
  if (!finite(next.u) || !finite(next.b)) throw DivergedError(next.t, "non-finite coefficients after step");
  return next;
}

}  // namespace tormhd
