#pragma once

#include "tormhd/rhs.hpp"
#include "tormhd/state.hpp"

namespace tormhd {

/// Nonlinear right-hand side at one state (no diffusion).
struct NonlinearRate {
  SpectralField du;
  SpectralField db;
};

NonlinearRate nonlinear_rate(const MhdState& state, Dealias mode = Dealias::native);

/// One Lawson integrating-factor RK4 step. Diffusion is integrated exactly
/// by exp(-nu |kappa|^2 dt) and exp(-eta |kappa|^2 dt); the nonlinear part
/// is classical RK4 in the transformed variable. The result is re-projected
/// to be divergence-free and t advances by dt.
///
/// `k1` may carry the nonlinear rate at `state` when the caller already has
/// it. Throws std::invalid_argument for dt <= 0 and DivergedError when the
/// new state is not finite.
MhdState step_ifrk4(const MhdState& state, double dt, Dealias mode = Dealias::native,
                    const NonlinearRate* k1 = nullptr);

}  // namespace tormhd
