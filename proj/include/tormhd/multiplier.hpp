#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "tormhd/spectral_field.hpp"

namespace tormhd {

/// Fourier multiplier m(k), applied coefficient-wise. Symbols that are
/// singular at k = 0 are defined as 0 there.
struct WaveMultiplier {
  std::function<Complex(const PhysicalWavevector& kappa, const Wavevector& k)> symbol;
  std::string description;
};

/// d/dx_axis, symbol i kappa_axis (axes are 0-based).
WaveMultiplier partial(int axis);
/// Laplacian restricted to the listed axes, symbol -sum kappa_a^2.
WaveMultiplier partial_laplacian(std::vector<int> axes);
/// Full Laplacian.
WaveMultiplier laplacian();
/// Lambda^s = (-Laplacian)^(s/2), symbol |kappa|^s and 0 at k = 0.
WaveMultiplier fractional_laplacian(double s);
/// Heat semigroup exp(-nu |kappa|^2 t).
WaveMultiplier heat(double nu, double t);
/// Pointwise product of two symbols.
WaveMultiplier compose(const WaveMultiplier& a, const WaveMultiplier& b);

/// Coefficient-wise product on every component. Throws when the symbol is
/// not conjugate-symmetric on the band, since the output would not be real.
SpectralField apply_multiplier(const SpectralField& f, const WaveMultiplier& m);

/// Same without the symmetry check, for symbols known to be admissible.
void apply_multiplier_in_place(SpectralField& f, const WaveMultiplier& m);

/// Gradient of a scalar field as a dim-component field.
SpectralField gradient(const SpectralField& f);

/// Component-wise derivative along one axis.
SpectralField derivative(const SpectralField& f, int axis);

/// Divergence of a dim-component field.
SpectralField divergence(const SpectralField& f);

/// max_k |kappa . fhat(k)| for a dim-component field.
double max_divergence(const SpectralField& f);

}  // namespace tormhd
