#include "tormhd/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tormhd/mode_table.hpp"
#include "tormhd/multiplier.hpp"
#include "tormhd/simd/kernels.hpp"
#include "tormhd/transform.hpp"

namespace tormhd {

namespace {

double weighted_sum(const SpectralField& f, const RealBuffer& weight) {
  double s = 0.0;
  for (int c = 0; c < f.components(); ++c) {
    const auto v = f.component(c);
    for (std::size_t i = 0; i < v.size(); ++i) s += weight[i] * std::norm(v[i]);
  }
  return s * f.grid().volume();
}

int smooth_even_size(int n) {
  for (int m = std::max(n, 2);; ++m) {
    if (m % 2 != 0) continue;
    int r = m;
    for (int p : {2, 3, 5, 7})
      while (r % p == 0) r /= p;
    if (r == 1) return m;
  }
}

}  // namespace

double l2_norm(const SpectralField& f) {
  double s = 0.0;
  for (const auto& z : f.all()) s += std::norm(z);
  return std::sqrt(s * f.grid().volume());
}

int lp_quadrature_points(const Grid& grid, double p) {
  const double r = std::round(p);
  if (std::isfinite(p) && r == p && static_cast<long>(r) % 2 == 0)
    return smooth_even_size(static_cast<int>(r) * grid.band_limit + 1);
  return 2 * grid.modes;
}

RealBuffer squared_magnitude(const SpectralField& f, int points) {
  const auto& k = simd::kernels();
  RealBuffer acc;
  RealBuffer tmp;
  for (int c = 0; c < f.components(); ++c) {
    to_physical(f, c, points, tmp);
    if (c == 0) acc.assign(tmp.size(), 0.0);
    k.square_accumulate(tmp.data(), acc.data(), tmp.size());
  }
  return acc;
}

double lp_norm(const SpectralField& f, double p, int points) {
  if (!(p >= 1.0)) throw std::invalid_argument("L^p norm needs p >= 1");
  if (p == 2.0 && points <= 0) return l2_norm(f);
  if (points <= 0) points = lp_quadrature_points(f.grid(), p);
  const auto& k = simd::kernels();
  const RealBuffer mag2 = squared_magnitude(f, points);
  if (std::isinf(p)) return std::sqrt(k.max_abs(mag2.data(), mag2.size()));
  const double cell = f.grid().volume() / static_cast<double>(mag2.size());
  const double integral = k.sum_abs_pow(mag2.data(), mag2.size(), 0.5 * p) * cell;
  return std::pow(integral, 1.0 / p);
}

double sobolev_seminorm(const SpectralField& f, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("Sobolev order must be non-negative");
  const ModeTable& t = mode_table(f.grid());
  RealBuffer w(t.kappa_squared.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double k2 = t.kappa_squared[i];
    w[i] = k2 == 0.0 ? 0.0 : std::pow(k2, s);
  }
  return std::sqrt(weighted_sum(f, w));
}

double gradient_energy(const SpectralField& f) {
  const Grid& g = f.grid();
  double s = 0.0;
  for (int d = 0; d < g.dim; ++d) {
    const SpectralField df = derivative(f, d);
    const double n = l2_norm(df);
    s += n * n;
  }
  return s;
}

SpectralField jacobian(const SpectralField& f) {
  const Grid& g = f.grid();
  SpectralField out(g, f.components() * g.dim);
  const ModeTable& t = mode_table(g);
  for (int c = 0; c < f.components(); ++c) {
    const auto src = f.component(c);
    for (int d = 0; d < g.dim; ++d) {
      auto dst = out.component(c * g.dim + d);
      for (std::size_t i = 0; i < src.size(); ++i) dst[i] = Complex(0.0, t.kappa[d][i]) * src[i];
    }
  }
  return out;
}

Anisotropic anisotropic_functionals(const SpectralField& u, const SpectralField& b,
                                    std::array<int, 2> partial_axes) {
  const Grid& g = u.grid();
  for (int a : partial_axes)
    if (a < 0 || a >= g.dim) throw std::invalid_argument("partial-gradient axis out of range");
  const ModeTable& t = mode_table(g);
  const std::size_t n = t.kappa_squared.size();
  Anisotropic out;
  for (const SpectralField* f : {&u, &b}) {
    for (int c = 0; c < f->components(); ++c) {
      const auto v = f->component(c);
      for (std::size_t i = 0; i < n; ++i) {
        const double e = std::norm(v[i]);
        if (e == 0.0) continue;
        const double k2 = t.kappa_squared[i];
        const double ka = t.kappa[partial_axes[0]][i];
        const double kb = t.kappa[partial_axes[1]][i];
        const double p2 = ka * ka + kb * kb;
        out.W += p2 * e;
        out.X += k2 * e;
        out.Y += k2 * p2 * e;
        out.Z += k2 * k2 * e;
      }
    }
  }
  const double vol = g.volume();
  out.W *= vol;
  out.X *= vol;
  out.Y *= vol;
  out.Z *= vol;
  return out;
}

Anisotropic wxyz(const MhdState& state) {
  if (state.grid().dim != 4) throw std::invalid_argument("W, X, Y, Z are defined on the 4-torus");
  return anisotropic_functionals(state.u, state.b);
}

double energy(const MhdState& state) {
  const double a = l2_norm(state.u);
  const double b = l2_norm(state.b);
  return a * a + b * b;
}

double dissipation(const MhdState& state) {
  const ModeTable& t = mode_table(state.grid());
  return state.nu * weighted_sum(state.u, t.kappa_squared) + state.eta * weighted_sum(state.b, t.kappa_squared);
}

}  // namespace tormhd
