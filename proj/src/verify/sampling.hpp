#pragma once

// Collocation helpers shared by the verification checks.

#include <array>
#include <cstddef>

#include "tormhd/aligned.hpp"
#include "tormhd/spectral_field.hpp"

namespace tormhd::detail {

/// Samples of fields and their derivatives on a grid of `points` per axis,
/// with the quadrature weight volume / points^dim.
class Sampler {
 public:
  Sampler(const Grid& grid, int points);

  int points() const noexcept { return points_; }
  std::size_t size() const noexcept { return n_; }
  double weight() const noexcept { return weight_; }

  RealBuffer value(const SpectralField& f, int c) const;
  /// d f_c / dx_a
  RealBuffer d(const SpectralField& f, int c, int a) const;
  /// d^2 f_c / dx_a dx_b
  RealBuffer dd(const SpectralField& f, int c, int a, int b) const;

  /// weight * sum a b c, the trapezoid integral of a triple product.
  double integral(const RealBuffer& a, const RealBuffer& b, const RealBuffer& c) const;
  double integral(const RealBuffer& a, const RealBuffer& b) const;
  double integral(const RealBuffer& a) const;

 private:
  Grid grid_;
  int points_;
  std::size_t n_;
  double weight_;
};

/// Values, first and second derivatives of a 4-component field.
struct Derivatives {
  std::array<RealBuffer, 4> v;
  std::array<std::array<RealBuffer, 4>, 4> d;               ///< d[i][k] = d_k f_i
  std::array<std::array<RealBuffer, 10>, 4> second;         ///< packed a <= b

  Derivatives(const Sampler& s, const SpectralField& f, bool with_second = true);
  /// d_a d_b f_i
  const RealBuffer& h(int i, int a, int b) const;
};

}  // namespace tormhd::detail
