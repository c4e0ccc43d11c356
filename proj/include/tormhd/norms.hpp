#pragma once

#include <array>
#include <limits>

#include "tormhd/aligned.hpp"
#include "tormhd/spectral_field.hpp"
#include "tormhd/state.hpp"

namespace tormhd {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// ||f||_{L^2} by Parseval, summed over components.
double l2_norm(const SpectralField& f);

/// Sample grid used for the L^p quadrature of a field with band limit K:
/// the exact grid (> pK points) for even integer p, otherwise 2M.
int lp_quadrature_points(const Grid& grid, double p);

/// ||f||_{L^p} of the pointwise Euclidean magnitude over all components.
/// p = 2 is exact (Parseval); even integer p is exact up to rounding; other
/// p use trapezoid quadrature on the 2M grid; p = inf is the maximum over the
/// 2M collocation grid. `points` overrides the sample grid when positive.
double lp_norm(const SpectralField& f, double p, int points = 0);

/// Pointwise |f|^2 summed over components, sampled on `points` per axis.
RealBuffer squared_magnitude(const SpectralField& f, int points);

/// ||Lambda^s f||_{L^2}; the mean mode is excluded. Throws for s < 0.
double sobolev_seminorm(const SpectralField& f, double s);

/// ||grad f||^2_{L^2} as the sum over components of per-component gradients.
double gradient_energy(const SpectralField& f);

/// Full gradient of every component: dim * components scalar fields, ordered
/// (component, axis).
SpectralField jacobian(const SpectralField& f);

struct Anisotropic {
  double W = 0.0;
  double X = 0.0;
  double Y = 0.0;
  double Z = 0.0;
};

/// W, X, Y, Z with the partial gradient taken over the axes in `partial_axes`
/// (0-based). Valid for any dimension.
Anisotropic anisotropic_functionals(const SpectralField& u, const SpectralField& b,
                                    std::array<int, 2> partial_axes = {0, 1});

/// W, X, Y, Z of a 4D state with the partial gradient over axes 1 and 2.
Anisotropic wxyz(const MhdState& state);

/// ||u||^2 + ||b||^2.
double energy(const MhdState& state);

/// nu ||grad u||^2 + eta ||grad b||^2.
double dissipation(const MhdState& state);

}  // namespace tormhd
