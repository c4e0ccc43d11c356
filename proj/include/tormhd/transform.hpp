#pragma once

#include "tormhd/aligned.hpp"
#include "tormhd/spectral_field.hpp"

namespace tormhd {

/// Collocation values of component c on the uniform grid with `points`
/// samples per axis, row-major with the last axis fastest. Only the in-band
/// coefficients of f are used, so any points > 2K resolves the field exactly
/// and larger values give zero-padded (refined) sample grids.
RealBuffer to_physical(const SpectralField& f, int c, int points);
void to_physical(const SpectralField& f, int c, int points, RealBuffer& out);

/// Replaces component c of f by the in-band Fourier coefficients of the
/// samples `values` taken on a grid with `points` samples per axis.
void from_physical(const double* values, int points, SpectralField& f, int c);

/// Physical coordinate of sample index j on an axis with `points` samples.
inline double sample_coordinate(double side_length, int points, int j) {
  return side_length * static_cast<double>(j) / static_cast<double>(points);
}

/// Total sample count points^dim.
std::size_t sample_count(int dim, int points);

/// Drops cached FFT plans, e.g. after changing the thread count.
void clear_transform_cache();

}  // namespace tormhd
