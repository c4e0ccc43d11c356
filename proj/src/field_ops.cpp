#include "tormhd/field_ops.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "tormhd/mode_table.hpp"
#include "tormhd/transform.hpp"

namespace tormhd {

void leray_project_in_place(SpectralField& f) {
  const Grid& g = f.grid();
  if (f.components() != g.dim) throw std::invalid_argument("Leray projection needs a dim-component field");
  const ModeTable& t = mode_table(g);
  const std::size_t n = f.modes_per_component();
  std::array<Complex*, kMaxDim> c{};
  for (int d = 0; d < g.dim; ++d) c[d] = f.component(d).data();
  for (std::size_t i = 1; i < n; ++i) {
    const double k2 = t.kappa_squared[i];
    if (k2 == 0.0) continue;
    Complex dot{};
    for (int d = 0; d < g.dim; ++d) dot += t.kappa[d][i] * c[d][i];
    dot /= k2;
    for (int d = 0; d < g.dim; ++d) c[d][i] -= t.kappa[d][i] * dot;
  }
}

SpectralField leray_project(const SpectralField& f) {
  SpectralField out = f;
  leray_project_in_place(out);
  return out;
}

SpectralField rescale_field(const SpectralField& f, int lambda) {
  if (lambda < 1) throw std::invalid_argument("dilation factor must be a positive integer");
  Grid target = f.grid();
  target.side_length = f.grid().side_length / lambda;
  SpectralField out(target, f.components());
  const auto src = f.all();
  auto dst = out.all();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = static_cast<double>(lambda) * src[i];
  return out;
}

SpectralField embed_periodic(const SpectralField& f, int lambda, int modes) {
  if (lambda < 1) throw std::invalid_argument("dilation factor must be a positive integer");
  const Grid& g = f.grid();
  const Grid target = make_grid(g.dim, modes, g.side_length);
  if (lambda * g.band_limit > target.band_limit)
    throw std::invalid_argument("dilated band exceeds the band limit of the target grid");
  SpectralField out(target, f.components());
  for (std::size_t i = 0; i < f.modes_per_component(); ++i) {
    Wavevector k = g.wavevector(i);
    if (!g.in_band(k)) continue;
    for (int d = 0; d < g.dim; ++d) k[d] *= lambda;
    for (int c = 0; c < f.components(); ++c)
      out.at(c, k) = static_cast<double>(lambda) * f.component(c)[i];
  }
  return out;
}

SpectralField change_grid(const SpectralField& f, const Grid& target) {
  const Grid& g = f.grid();
  if (g.dim != target.dim || g.side_length != target.side_length)
    throw std::invalid_argument("target grid must discretize the same torus");
  SpectralField out(target, f.components());
  for (std::size_t i = 0; i < f.modes_per_component(); ++i) {
    const Wavevector k = g.wavevector(i);
    if (!g.in_band(k) || !target.in_band(k)) continue;
    for (int c = 0; c < f.components(); ++c) out.at(c, k) = f.component(c)[i];
  }
  return out;
}

SpectralField synth_random_divfree(const Grid& grid, int components, std::uint64_t seed, double decay,
                                   int band) {
  if (!(decay >= 0.0)) throw std::invalid_argument("spectral decay must be non-negative");
  if (components != 1 && components != grid.dim)
    throw std::invalid_argument("random fields are scalar or have dim components");
  if (band < 0) band = grid.band_limit;
  if (band > grid.band_limit) throw std::invalid_argument("requested band exceeds the grid band limit");

  SpectralField raw(grid, components);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  // Lexicographic walk over the cube [-band, band]^dim, independent of M.
  Wavevector k{};
  for (int d = 0; d < grid.dim; ++d) k[d] = -band;
  while (true) {
    for (int c = 0; c < components; ++c) {
      const double re = normal(rng);
      const double im = normal(rng);
      raw.at(c, k) = Complex(re, im);
    }
    int d = grid.dim - 1;
    while (d >= 0 && k[d] == band) {
      k[d] = -band;
      --d;
    }
    if (d < 0) break;
    ++k[d];
  }

  SpectralField out(grid, components);
  for (std::size_t i = 0; i < raw.modes_per_component(); ++i) {
    const Wavevector kv = grid.wavevector(i);
    bool inside = true;
    double k2 = 0.0;
    for (int d = 0; d < grid.dim; ++d) {
      inside = inside && std::abs(kv[d]) <= band;
      k2 += static_cast<double>(kv[d]) * kv[d];
    }
    if (!inside || k2 == 0.0) continue;
    const std::size_t j = negated_index(grid, i);
    const double amp = std::pow(k2, -0.5 * decay);
    for (int c = 0; c < components; ++c)
      out.component(c)[i] = 0.5 * amp * (raw.component(c)[i] + std::conj(raw.component(c)[j]));
  }
  if (components == grid.dim) leray_project_in_place(out);
  return out;
}

SpectralField sample_function(const Grid& grid, int components,
                              const std::function<double(const double* x, int component)>& fn) {
  SpectralField out(grid, components);
  const int m = grid.modes;
  const std::size_t n = sample_count(grid.dim, m);
  RealBuffer values(n);
  double x[kMaxDim] = {0.0, 0.0, 0.0, 0.0};
  for (int c = 0; c < components; ++c) {
    for (std::size_t flat = 0; flat < n; ++flat) {
      std::size_t rest = flat;
      for (int d = grid.dim - 1; d >= 0; --d) {
        x[d] = sample_coordinate(grid.side_length, m, static_cast<int>(rest % static_cast<std::size_t>(m)));
        rest /= static_cast<std::size_t>(m);
      }
      values[flat] = fn(x, c);
    }
    from_physical(values.data(), m, out, c);
  }
  return out;
}

double inner_product(const SpectralField& f, const SpectralField& g) {
  if (!(f.grid() == g.grid()) || f.components() != g.components())
    throw std::invalid_argument("fields live on different grids or have different shapes");
  const auto a = f.all();
  const auto b = g.all();
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
  return s * f.grid().volume();
}

SpectralField stack(const std::vector<const SpectralField*>& parts) {
  if (parts.empty()) throw std::invalid_argument("nothing to stack");
  int total = 0;
  for (const auto* p : parts) {
    if (!(p->grid() == parts.front()->grid())) throw std::invalid_argument("stacked fields need one grid");
    total += p->components();
  }
  SpectralField out(parts.front()->grid(), total);
  int c = 0;
  for (const auto* p : parts)
    for (int j = 0; j < p->components(); ++j, ++c)
      std::copy(p->component(j).begin(), p->component(j).end(), out.component(c).begin());
  return out;
}

}  // namespace tormhd
