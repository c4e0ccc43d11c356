#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "tormhd/aligned.hpp"
#include "tormhd/grid.hpp"

namespace tormhd {

using Complex = std::complex<double>;

/// Real scalar or vector field on the torus, stored as Fourier coefficients
///   f(x) = sum_k fhat(k) exp(i 2 pi k.x / L)
/// over the full M^dim index cube of its grid, one block per component.
///
/// Construction does not enforce Hermitian symmetry or the band limit; the
/// checks below report them and the factory functions in field_ops.hpp
/// produce fields that satisfy both.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(const Grid& grid, int components);

  const Grid& grid() const noexcept { return grid_; }
  int components() const noexcept { return components_; }
  bool empty() const noexcept { return components_ == 0; }
  std::size_t modes_per_component() const noexcept { return per_component_; }

  std::span<Complex> component(int c);
  std::span<const Complex> component(int c) const;

  Complex& at(int c, const Wavevector& k) { return data_[offset(c) + grid_.flat_index(k)]; }
  const Complex& at(int c, const Wavevector& k) const { return data_[offset(c) + grid_.flat_index(k)]; }

  /// Interleaved (re, im) view of all components.
  double* raw() noexcept { return reinterpret_cast<double*>(data_.data()); }
  const double* raw() const noexcept { return reinterpret_cast<const double*>(data_.data()); }
  std::span<Complex> all() noexcept { return {data_.data(), data_.size()}; }
  std::span<const Complex> all() const noexcept { return {data_.data(), data_.size()}; }

  /// Component-range copy, e.g. a single component of a vector field.
  SpectralField extract(int first, int count = 1) const;

  void set_zero();

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double s);
  /// this += alpha * other
  void add_scaled(double alpha, const SpectralField& other);

  /// Largest |fhat(-k) - conj(fhat(k))| over all components.
  double hermitian_defect() const;
  /// Largest |fhat(k)| outside the band |k_j| <= K.
  double out_of_band_max() const;
  /// Largest coefficient magnitude.
  double max_abs() const;
  /// Mean (k = 0) coefficient of component c.
  Complex mean_mode(int c) const { return data_[offset(c)]; }

  /// Symmetrize to the nearest Hermitian field and zero the out-of-band modes.
  void make_real_band_limited();

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double s, SpectralField a) { return a *= s; }

 private:
  std::size_t offset(int c) const noexcept { return static_cast<std::size_t>(c) * per_component_; }
  void check_compatible(const SpectralField& other) const;

  Grid grid_{};
  int components_ = 0;
  std::size_t per_component_ = 0;
  ComplexBuffer data_;
};

/// Flat index of -k for the flat index of k.
std::size_t negated_index(const Grid& grid, std::size_t flat);

/// Relative max difference of coefficients, normalized by the larger max.
double max_relative_difference(const SpectralField& a, const SpectralField& b);

}  // namespace tormhd
