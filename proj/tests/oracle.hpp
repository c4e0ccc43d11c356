#pragma once

// Independent reference evaluations for the tests: direct summation of the
// Fourier series at arbitrary points, with no FFTs and no library quadrature.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "tormhd/spectral_field.hpp"

namespace oracle {

using tormhd::Grid;
using tormhd::SpectralField;
using tormhd::Wavevector;

/// Value of component c at the physical point x by direct summation.
inline double value_at(const SpectralField& f, int c, const double* x) {
  const Grid& g = f.grid();
  const auto data = f.component(c);
  std::complex<double> s{};
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data[i] == std::complex<double>{}) continue;
    const Wavevector k = g.wavevector(i);
    double phase = 0.0;
    for (int d = 0; d < g.dim; ++d) phase += g.kappa_unit() * k[d] * x[d];
    s += data[i] * std::polar(1.0, phase);
  }
  return s.real();
}

/// Calls fn(x) at every point of the uniform grid with `points` per axis.
inline void for_each_point(const Grid& g, int points, const std::function<void(const double*)>& fn) {
  std::size_t total = 1;
  for (int d = 0; d < g.dim; ++d) total *= static_cast<std::size_t>(points);
  double x[4] = {0, 0, 0, 0};
  for (std::size_t n = 0; n < total; ++n) {
    std::size_t r = n;
    for (int d = g.dim - 1; d >= 0; --d) {
      x[d] = g.side_length * static_cast<double>(r % static_cast<std::size_t>(points)) / points;
      r /= static_cast<std::size_t>(points);
    }
    fn(x);
  }
}

/// Trapezoid integral of fn over the torus on `points` per axis.
inline double integral(const Grid& g, int points, const std::function<double(const double*)>& fn) {
  double s = 0.0;
  for_each_point(g, points, [&](const double* x) { s += fn(x); });
  return s * g.volume() / std::pow(static_cast<double>(points), g.dim);
}

/// Sum over coefficients of |fhat|^2 times the volume: Parseval's L^2 norm squared.
inline double parseval(const SpectralField& f) {
  double s = 0.0;
  for (const auto& z : f.all()) s += std::norm(z);
  return s * f.grid().volume();
}

}  // namespace oracle
