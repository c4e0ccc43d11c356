#pragma once

#include <cstdint>
#include <string>

#include "tormhd/state.hpp"

namespace tormhd {

/// Named initial data. Amplitudes scale u and b separately; for the random
/// preset they are the root-mean-square values of the fields.
struct InitialCondition {
  std::string preset = "zero";  ///< zero | diffusion | taylor_green | random_divfree
  std::uint64_t seed = 0;
  double decay = 3.0;
  double amplitude_u = 1.0;
  double amplitude_b = 1.0;
  int band = -1;  ///< random_divfree only; -1 uses the grid band limit
};

/// Preset names accepted by make_initial_state.
const char* const* preset_names();

/// Builds the preset on `grid`:
///  - zero: u = b = 0;
///  - diffusion: u = A sin(x1) e2, b = B sin(x1) e3 (e2 in 2D); both are
///    steady shear layers for the nonlinearity, so only diffusion acts;
///  - taylor_green: u = A (sin x1 cos x2, -cos x1 sin x2, 0, 0), b = 0;
///  - random_divfree: independent random solenoidal u and b.
/// Coordinates are scaled by 2 pi / L. Throws std::invalid_argument for
/// unknown names.
MhdState make_initial_state(const Grid& grid, const InitialCondition& ic, double nu = 1.0, double eta = 1.0);

}  // namespace tormhd
