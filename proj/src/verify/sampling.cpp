#include "sampling.hpp"

#include <utility>

#include "tormhd/multiplier.hpp"
#include "tormhd/simd/kernels.hpp"
#include "tormhd/transform.hpp"

namespace tormhd::detail {

namespace {

int packed(int a, int b) {
  if (a > b) std::swap(a, b);
  return a * 4 - a * (a - 1) / 2 + (b - a);
}

}  // namespace

Sampler::Sampler(const Grid& grid, int points)
    : grid_(grid), points_(points), n_(sample_count(grid.dim, points)), weight_(grid.volume() / static_cast<double>(n_)) {}

RealBuffer Sampler::value(const SpectralField& f, int c) const { return to_physical(f, c, points_); }

RealBuffer Sampler::d(const SpectralField& f, int c, int a) const {
  return to_physical(derivative(f.extract(c), a), 0, points_);
}

RealBuffer Sampler::dd(const SpectralField& f, int c, int a, int b) const {
  return to_physical(derivative(derivative(f.extract(c), a), b), 0, points_);
}

double Sampler::integral(const RealBuffer& a, const RealBuffer& b, const RealBuffer& c) const {
  return weight_ * simd::kernels().dot3(a.data(), b.data(), c.data(), n_);
}

double Sampler::integral(const RealBuffer& a, const RealBuffer& b) const {
  return weight_ * simd::kernels().dot(a.data(), b.data(), n_);
}

double Sampler::integral(const RealBuffer& a) const {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) s += a[i];
  return weight_ * s;
}

Derivatives::Derivatives(const Sampler& s, const SpectralField& f, bool with_second) {
  for (int i = 0; i < 4; ++i) {
    v[i] = s.value(f, i);
    const SpectralField fi = f.extract(i);
    for (int k = 0; k < 4; ++k) {
      const SpectralField dk = derivative(fi, k);
      d[i][k] = to_physical(dk, 0, s.points());
      if (!with_second) continue;
      for (int b = k; b < 4; ++b) second[i][packed(k, b)] = to_physical(derivative(dk, b), 0, s.points());
    }
  }
}

const RealBuffer& Derivatives::h(int i, int a, int b) const { return second[i][packed(a, b)]; }

}  // namespace tormhd::detail
