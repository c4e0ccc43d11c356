#include "tormhd/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tormhd {

SpectralField::SpectralField(const Grid& grid, int components)
    : grid_(grid), components_(components), per_component_(grid.points()) {
  if (components < 1) throw std::invalid_argument("field needs at least one component");
  data_.assign(per_component_ * static_cast<std::size_t>(components), Complex{});
}

std::span<Complex> SpectralField::component(int c) {
  if (c < 0 || c >= components_) throw std::out_of_range("component index out of range");
  return {data_.data() + offset(c), per_component_};
}

std::span<const Complex> SpectralField::component(int c) const {
  if (c < 0 || c >= components_) throw std::out_of_range("component index out of range");
  return {data_.data() + offset(c), per_component_};
}

SpectralField SpectralField::extract(int first, int count) const {
  if (first < 0 || count < 1 || first + count > components_)
    throw std::out_of_range("component range out of range");
  SpectralField out(grid_, count);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(offset(first)),
              per_component_ * static_cast<std::size_t>(count), out.data_.begin());
  return out;
}

void SpectralField::set_zero() { std::fill(data_.begin(), data_.end(), Complex{}); }

void SpectralField::check_compatible(const SpectralField& other) const {
  if (!(grid_ == other.grid_) || components_ != other.components_)
    throw std::invalid_argument("fields live on different grids or have different shapes");
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double s) {
  for (auto& z : data_) z *= s;
  return *this;
}

void SpectralField::add_scaled(double alpha, const SpectralField& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += alpha * other.data_[i];
}

std::size_t negated_index(const Grid& grid, std::size_t flat) {
  const std::size_t m = static_cast<std::size_t>(grid.modes);
  std::size_t out = 0;
  std::size_t stride = 1;
  for (int d = 0; d < grid.dim; ++d) {
    const std::size_t j = flat % m;
    flat /= m;
    out += ((m - j) % m) * stride;
    stride *= m;
  }
  return out;
}

double SpectralField::hermitian_defect() const {
  double worst = 0.0;
  for (int c = 0; c < components_; ++c) {
    const Complex* f = data_.data() + offset(c);
    for (std::size_t i = 0; i < per_component_; ++i)
      worst = std::max(worst, std::abs(f[negated_index(grid_, i)] - std::conj(f[i])));
  }
  return worst;
}

double SpectralField::out_of_band_max() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < per_component_; ++i) {
    if (grid_.in_band(grid_.wavevector(i))) continue;
    for (int c = 0; c < components_; ++c) worst = std::max(worst, std::abs(data_[offset(c) + i]));
  }
  return worst;
}

double SpectralField::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

void SpectralField::make_real_band_limited() {
  for (int c = 0; c < components_; ++c) {
    Complex* f = data_.data() + offset(c);
    for (std::size_t i = 0; i < per_component_; ++i) {
      if (!grid_.in_band(grid_.wavevector(i))) {
        f[i] = Complex{};
        continue;
      }
      const std::size_t j = negated_index(grid_, i);
      if (j < i) continue;
      if (j == i) {
        f[i] = Complex(f[i].real(), 0.0);
      } else {
        const Complex avg = 0.5 * (f[i] + std::conj(f[j]));
        f[i] = avg;
        f[j] = std::conj(avg);
      }
    }
  }
}

double max_relative_difference(const SpectralField& a, const SpectralField& b) {
  if (!(a.grid() == b.grid()) || a.components() != b.components())
    throw std::invalid_argument("fields live on different grids or have different shapes");
  const auto x = a.all();
  const auto y = b.all();
  double diff = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    diff = std::max(diff, std::abs(x[i] - y[i]));
    scale = std::max({scale, std::abs(x[i]), std::abs(y[i])});
  }
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace tormhd
