#pragma once

#include <cstdint>
#include <functional>

#include "tormhd/spectral_field.hpp"

namespace tormhd {

/// Leray projection I - kappa kappa^T / |kappa|^2 applied per mode; the mean
/// mode passes through unchanged.
SpectralField leray_project(const SpectralField& f);
void leray_project_in_place(SpectralField& f);

/// Dilation f -> lambda f(lambda x). The result lives on the torus of side
/// L / lambda with the same modes, so ||f_lambda||^2 = lambda^(2-N) ||f||^2.
SpectralField rescale_field(const SpectralField& f, int lambda);

/// The same dilate viewed on the original torus of side L: mode k moves to
/// lambda k on a grid with `modes` per axis. Throws when lambda K exceeds the
/// band limit of the target grid.
SpectralField embed_periodic(const SpectralField& f, int lambda, int modes);

/// Copies the coefficients onto another resolution of the same torus.
/// Modes outside the target band are dropped.
SpectralField change_grid(const SpectralField& f, const Grid& target);

/// Random real field with coefficient magnitudes ~ |k|^(-decay) on the band
/// |k_j| <= band (default: the grid band limit). Vector fields
/// (components == dim) are projected to be divergence-free; scalar fields are
/// mean-zero. The draw depends only on (seed, dim, band, components), not on M.
SpectralField synth_random_divfree(const Grid& grid, int components, std::uint64_t seed,
                                   double decay = 3.0, int band = -1);

/// Band-limited interpolant of fn sampled on the M-point grid.
SpectralField sample_function(const Grid& grid, int components,
                              const std::function<double(const double* x, int component)>& fn);

/// L^2 inner product (integral over the torus, summed over components).
double inner_product(const SpectralField& f, const SpectralField& g);

/// Stack fields with equal grids into one multi-component field.
SpectralField stack(const std::vector<const SpectralField*>& parts);

}  // namespace tormhd
