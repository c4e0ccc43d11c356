#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tormhd/aligned.hpp"
#include "tormhd/grid.hpp"

namespace tormhd {

/// Per-mode lookup arrays for one grid, indexed by flat coefficient index.
struct ModeTable {
  std::array<RealBuffer, kMaxDim> kappa;  ///< physical wavenumber per axis
  RealBuffer kappa_squared;               ///< |kappa|^2
  std::vector<std::uint8_t> in_band;
  std::vector<std::size_t> band_indices;  ///< flat indices of in-band modes
};

/// Cached table for the grid; the reference stays valid for the process lifetime.
const ModeTable& mode_table(const Grid& grid);

}  // namespace tormhd
