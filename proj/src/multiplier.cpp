#include "tormhd/multiplier.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tormhd {

namespace {

double kappa_squared(const PhysicalWavevector& kappa) {
  double s = 0.0;
  for (double v : kappa) s += v * v;
  return s;
}

}  // namespace

WaveMultiplier partial(int axis) {
  if (axis < 0 || axis >= kMaxDim) throw std::invalid_argument("axis out of range");
  return {[axis](const PhysicalWavevector& kappa, const Wavevector&) { return Complex(0.0, kappa[axis]); },
          "d" + std::to_string(axis + 1)};
}

WaveMultiplier partial_laplacian(std::vector<int> axes) {
  std::string tag = "Delta_";
  for (int a : axes) {
    if (a < 0 || a >= kMaxDim) throw std::invalid_argument("axis out of range");
    tag += std::to_string(a + 1);
  }
  return {[axes](const PhysicalWavevector& kappa, const Wavevector&) {
            double s = 0.0;
            for (int a : axes) s += kappa[a] * kappa[a];
            return Complex(-s, 0.0);
          },
          tag};
}

WaveMultiplier laplacian() {
  return {[](const PhysicalWavevector& kappa, const Wavevector&) { return Complex(-kappa_squared(kappa), 0.0); },
          "Delta"};
}

WaveMultiplier fractional_laplacian(double s) {
  std::ostringstream tag;
  tag << "Lambda^" << s;
  return {[s](const PhysicalWavevector& kappa, const Wavevector&) {
            const double k2 = kappa_squared(kappa);
            return k2 == 0.0 ? Complex{} : Complex(std::pow(k2, 0.5 * s), 0.0);
          },
          tag.str()};
}

WaveMultiplier heat(double nu, double t) {
  return {[nu, t](const PhysicalWavevector& kappa, const Wavevector&) {
            return Complex(std::exp(-nu * kappa_squared(kappa) * t), 0.0);
          },
          "heat"};
}

WaveMultiplier compose(const WaveMultiplier& a, const WaveMultiplier& b) {
  return {[sa = a.symbol, sb = b.symbol](const PhysicalWavevector& kappa, const Wavevector& k) {
            return sa(kappa, k) * sb(kappa, k);
          },
          a.description + "*" + b.description};
}

void apply_multiplier_in_place(SpectralField& f, const WaveMultiplier& m) {
  const Grid& g = f.grid();
  const std::size_t n = f.modes_per_component();
  for (std::size_t i = 0; i < n; ++i) {
    const Wavevector k = g.wavevector(i);
    const Complex s = g.in_band(k) ? m.symbol(g.kappa(k), k) : Complex{};
    for (int c = 0; c < f.components(); ++c) f.component(c)[i] *= s;
  }
}

SpectralField apply_multiplier(const SpectralField& f, const WaveMultiplier& m) {
  const Grid& g = f.grid();
  const std::size_t n = f.modes_per_component();
  for (std::size_t i = 0; i < n; ++i) {
    const Wavevector k = g.wavevector(i);
    if (!g.in_band(k)) continue;
    Wavevector mk{};
    for (int d = 0; d < g.dim; ++d) mk[d] = -k[d];
    const Complex s = m.symbol(g.kappa(k), k);
    const Complex sm = m.symbol(g.kappa(mk), mk);
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
      throw std::invalid_argument("multiplier " + m.description + " is not finite on the band");
    if (std::abs(sm - std::conj(s)) > 1e-12 * std::max(1.0, std::abs(s)))
      throw std::invalid_argument("multiplier " + m.description + " breaks Hermitian symmetry");
  }
  SpectralField out = f;
  apply_multiplier_in_place(out, m);
  return out;
}

SpectralField derivative(const SpectralField& f, int axis) {
  const Grid& g = f.grid();
  if (axis < 0 || axis >= g.dim) throw std::invalid_argument("axis out of range");
  SpectralField out = f;
  const double unit = g.kappa_unit();
  const std::size_t n = f.modes_per_component();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex s(0.0, unit * g.wavevector(i)[axis]);
    for (int c = 0; c < f.components(); ++c) out.component(c)[i] *= s;
  }
  return out;
}

SpectralField gradient(const SpectralField& f) {
  if (f.components() != 1) throw std::invalid_argument("gradient needs a scalar field");
  const Grid& g = f.grid();
  SpectralField out(g, g.dim);
  for (int d = 0; d < g.dim; ++d) {
    const SpectralField df = derivative(f, d);
    std::copy(df.component(0).begin(), df.component(0).end(), out.component(d).begin());
  }
  return out;
}

SpectralField divergence(const SpectralField& f) {
  const Grid& g = f.grid();
  if (f.components() != g.dim) throw std::invalid_argument("divergence needs a dim-component field");
  SpectralField out(g, 1);
  auto o = out.component(0);
  const double unit = g.kappa_unit();
  for (std::size_t i = 0; i < f.modes_per_component(); ++i) {
    const Wavevector k = g.wavevector(i);
    Complex s{};
    for (int d = 0; d < g.dim; ++d) s += Complex(0.0, unit * k[d]) * f.component(d)[i];
    o[i] = s;
  }
  return out;
}

double max_divergence(const SpectralField& f) {
  const SpectralField d = divergence(f);
  return d.max_abs();
}

}  // namespace tormhd
