#pragma once

#include <array>
#include <cstddef>
#include <numbers>
#include <string>

namespace tormhd {

inline constexpr int kMaxDim = 4;

/// Integer wavevector; entries beyond the grid dimension are zero.
using Wavevector = std::array<int, kMaxDim>;

/// Physical wavevector 2*pi*k/L; entries beyond the grid dimension are zero.
using PhysicalWavevector = std::array<double, kMaxDim>;

/// Discretization of the periodic torus [0, L)^dim.
///
/// Coefficients are stored over the full M^dim index cube in FFT order: index
/// j along an axis carries wavenumber j for j < M/2 and j - M otherwise.
/// Fields are band-limited to |k_j| <= band_limit on every axis; with
/// 3*band_limit < M the collocation grid integrates products of three
/// band-limited fields exactly.
struct Grid {
  int dim = 4;
  int modes = 16;
  double side_length = 2.0 * std::numbers::pi;
  int band_limit = 5;

  std::size_t points() const noexcept;
  double kappa_unit() const noexcept { return 2.0 * std::numbers::pi / side_length; }
  double volume() const noexcept;

  int wavenumber(int index) const noexcept { return index < modes / 2 ? index : index - modes; }
  int index_of(int wavenumber) const noexcept { return wavenumber >= 0 ? wavenumber : wavenumber + modes; }

  std::size_t flat_index(const Wavevector& k) const noexcept;
  Wavevector wavevector(std::size_t flat) const noexcept;
  PhysicalWavevector kappa(const Wavevector& k) const noexcept;
  bool in_band(const Wavevector& k) const noexcept;

  /// True when cubic collocation quadrature on this grid is alias-free.
  bool alias_free_cubic() const noexcept { return 3 * band_limit < modes; }

  std::string describe() const;

  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Validated grid with band limit floor((M-1)/3), the largest K with 3K < M.
Grid make_grid(int dim, int modes, double side_length = 2.0 * std::numbers::pi);

/// Grid with an explicit band limit that may violate the alias-free bound.
/// Only meant for negative controls that must exhibit aliasing.
Grid make_debug_grid(int dim, int modes, int band_limit,
                     double side_length = 2.0 * std::numbers::pi);

/// Same torus resolved with a different number of modes per axis; the band
/// limit follows make_grid.
Grid with_modes(const Grid& grid, int modes);

/// Smallest power of two that is >= n and even.
int next_fft_size(int n);

}  // namespace tormhd
