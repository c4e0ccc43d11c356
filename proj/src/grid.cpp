#include "tormhd/grid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tormhd {

std::size_t Grid::points() const noexcept {
  std::size_t n = 1;
  for (int d = 0; d < dim; ++d) n *= static_cast<std::size_t>(modes);
  return n;
}

double Grid::volume() const noexcept { return std::pow(side_length, dim); }

std::size_t Grid::flat_index(const Wavevector& k) const noexcept {
  std::size_t flat = 0;
  for (int d = 0; d < dim; ++d) flat = flat * static_cast<std::size_t>(modes) + static_cast<std::size_t>(index_of(k[d]));
  return flat;
}

Wavevector Grid::wavevector(std::size_t flat) const noexcept {
  Wavevector k{};
  for (int d = dim - 1; d >= 0; --d) {
    k[d] = wavenumber(static_cast<int>(flat % static_cast<std::size_t>(modes)));
    flat /= static_cast<std::size_t>(modes);
  }
  return k;
}

PhysicalWavevector Grid::kappa(const Wavevector& k) const noexcept {
  PhysicalWavevector out{};
  const double unit = kappa_unit();
  for (int d = 0; d < dim; ++d) out[d] = unit * k[d];
  return out;
}

bool Grid::in_band(const Wavevector& k) const noexcept {
  for (int d = 0; d < dim; ++d)
    if (std::abs(k[d]) > band_limit) return false;
  return true;
}

std::string Grid::describe() const {
  std::ostringstream os;
  os << "Grid{dim " << dim << ", M " << modes << ", K " << band_limit << ", L " << side_length << "}";
  return os.str();
}

namespace {

void check_common(int dim, int modes, double side_length) {
  if (dim < 2 || dim > kMaxDim) throw std::invalid_argument("grid dimension must be 2, 3 or 4");
  if (modes < 8) throw std::invalid_argument("grid needs at least 8 modes per axis");
  if (modes % 2 != 0) throw std::invalid_argument("modes per axis must be even");
  if (!(side_length > 0.0) || !std::isfinite(side_length))
    throw std::invalid_argument("side length must be positive and finite");
}

}  // namespace

Grid make_grid(int dim, int modes, double side_length) {
  check_common(dim, modes, side_length);
  return Grid{dim, modes, side_length, (modes - 1) / 3};
}

Grid make_debug_grid(int dim, int modes, int band_limit, double side_length) {
  check_common(dim, modes, side_length);
  if (band_limit < 1 || 2 * band_limit >= modes)
    throw std::invalid_argument("debug band limit must satisfy 1 <= K < M/2");
  return Grid{dim, modes, side_length, band_limit};
}

Grid with_modes(const Grid& grid, int modes) { return make_grid(grid.dim, modes, grid.side_length); }

int next_fft_size(int n) {
  int size = 2;
  while (size < n) size *= 2;
  return size;
}

}  // namespace tormhd
