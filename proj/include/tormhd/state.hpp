#pragma once

#include "tormhd/spectral_field.hpp"

namespace tormhd {

/// Velocity u and magnetic field b on one grid at time t. The
/// Navier-Stokes system is the case b = 0.
struct MhdState {
  SpectralField u;
  SpectralField b;
  double t = 0.0;
  double nu = 1.0;
  double eta = 1.0;

  const Grid& grid() const { return u.grid(); }
  bool magnetic() const { return b.max_abs() > 0.0; }
};

/// Zero state with dim-component u and b.
MhdState zero_state(const Grid& grid, double nu = 1.0, double eta = 1.0);

/// Shape checks; throws std::invalid_argument on mismatch or negative
/// coefficients.
void validate_state(const MhdState& s);

/// max_k |kappa . uhat|, |kappa . bhat| relative to the largest gradient
/// coefficient of the two fields (0 for the zero state).
double relative_divergence(const MhdState& s);

}  // namespace tormhd
