#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "tormhd/field_ops.hpp"
#include "tormhd/multiplier.hpp"
#include "tormhd/norms.hpp"
#include "tormhd/transform.hpp"
#include "tormhd/verify.hpp"

namespace tormhd {

bool check_elementary(double a, double b, double p) {
  if (!(a >= 0.0) || !(b >= 0.0) || !(p >= 0.0)) throw std::invalid_argument("inputs must be non-negative");
  return std::pow(a + b, p) <= std::exp2(p) * (std::pow(a, p) + std::pow(b, p));
}

VerificationReport elementary_sweep(std::uint64_t seed, int n) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ab(0.0, 1000.0), pp(0.0, 8.0);
  VerificationReport r;
  r.name = "elementary.power_sum";
  r.kind = "inequality";
  r.threshold = 1.0;
  r.values.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double a = ab(rng), b = ab(rng), p = pp(rng);
    const double rhs = std::exp2(p) * (std::pow(a, p) + std::pow(b, p));
    if (rhs == 0.0) {
      ++r.excluded;
      continue;
    }
    r.values.push_back(check_elementary(a, b, p) ? std::pow(a + b, p) / rhs : INFINITY);
  }
  return r;
}

namespace {

// 1D DFT coefficients ghat(k), |k| <= M/2, of a Gaussian of width sigma
// centred at L/2, sampled on M points.
std::vector<Complex> window_coefficients(const Grid& g, double sigma) {
  const int m = g.modes;
  std::vector<double> x(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double d = sample_coordinate(g.side_length, m, j) - 0.5 * g.side_length;
    x[static_cast<std::size_t>(j)] = std::exp(-0.5 * d * d / (sigma * sigma));
  }
  std::vector<Complex> c(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    Complex s{};
    for (int j = 0; j < m; ++j)
      s += x[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * std::numbers::pi * k * j / m);
    c[static_cast<std::size_t>(k)] = s / static_cast<double>(m);
  }
  return c;
}

// Coefficients of the separable product prod_d w_d(x_d) times a band-1
// trigonometric polynomial, sampled on the grid and truncated to its band.
SpectralField windowed(const Grid& g, const std::array<std::vector<Complex>, 4>& win,
                       const std::vector<std::pair<Wavevector, Complex>>& poly) {
  SpectralField f(g, 1);
  auto out = f.component(0);
  const int m = g.modes;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Wavevector k = g.wavevector(i);
    if (!g.in_band(k)) continue;
    Complex s{};
    for (const auto& [q, a] : poly) {
      Complex t = a;
      for (int d = 0; d < g.dim; ++d) t *= win[static_cast<std::size_t>(d)][static_cast<std::size_t>(((k[d] - q[d]) % m + m) % m)];
      s += t;
    }
    out[i] = s;
  }
  f.make_real_band_limited();
  return f;
}

std::vector<std::pair<Wavevector, Complex>> band_one_polynomial(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<std::pair<Wavevector, Complex>> poly;
  int total = 1;
  for (int d = 0; d < dim; ++d) total *= 3;
  for (int idx = 0; idx < total; ++idx) {
    Wavevector k{0, 0, 0, 0};
    int r = idx;
    for (int d = dim - 1; d >= 0; --d) {
      k[d] = r % 3 - 1;
      r /= 3;
    }
    // Draw for the lexicographically positive half; mirror the rest.
    int sign = 0;
    for (int d = 0; d < dim && sign == 0; ++d) sign = (k[d] > 0) - (k[d] < 0);
    if (sign < 0) continue;
    if (sign == 0) {
      poly.push_back({k, Complex(nd(rng), 0.0)});
      continue;
    }
    const Complex a(nd(rng) / std::sqrt(2.0), nd(rng) / std::sqrt(2.0));
    Wavevector mk{-k[0], -k[1], -k[2], -k[3]};
    poly.push_back({k, a});
    poly.push_back({mk, std::conj(a)});
  }
  return poly;
}

SpectralField gaussian_bump(const Grid& g, const std::array<double, 4>& widths) {
  std::array<std::vector<Complex>, 4> win;
  for (int d = 0; d < g.dim; ++d) win[static_cast<std::size_t>(d)] = window_coefficients(g, widths[static_cast<std::size_t>(d)]);
  return windowed(g, win, {{Wavevector{0, 0, 0, 0}, Complex(1.0, 0.0)}});
}

}  // namespace

SpectralField troisi_field(const Grid& grid, std::uint64_t seed, int index) {
  if (grid.dim != 4) throw std::invalid_argument("the windowed L^4 bound is stated in four dimensions");
  std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(ss);
  const double unit = grid.side_length / (2.0 * std::numbers::pi);
  const double sigma = unit * std::uniform_real_distribution<double>(0.75, 0.95)(rng);
  const auto poly = band_one_polynomial(grid.dim, rng);
  std::array<std::vector<Complex>, 4> win;
  for (auto& w : win) w = window_coefficients(grid, sigma);
  return windowed(grid, win, poly);
}

double troisi_ratio(const SpectralField& f) {
  if (f.grid().dim != 4 || f.components() != 1) throw std::invalid_argument("expected a 4D scalar field");
  const double l4 = lp_norm(f, 4.0);
  double prod = 1.0;
  for (int a = 0; a < 4; ++a) {
    const double d = l2_norm(derivative(f, a));
    if (!(d > 0.0)) return NAN;
    prod *= std::pow(d, 0.25);
  }
  return l4 / prod;
}

double troisi_dilation_residual(const Grid& grid, double width) {
  const double w = width * grid.side_length / (2.0 * std::numbers::pi);
  const double a = troisi_ratio(gaussian_bump(grid, {w, w, w, w}));
  const double b = troisi_ratio(gaussian_bump(grid, {2.0 * w, w, w, w}));
  return relative_residual(a, b);
}

VerificationReport check_troisi(const Grid& grid, std::uint64_t seed, int n) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  VerificationReport r;
  r.name = "troisi.ratio_M" + std::to_string(grid.modes);
  r.kind = "inequality";
  for (int i = 0; i < n; ++i) {
    const double v = troisi_ratio(troisi_field(grid, seed, i));
    if (std::isfinite(v)) r.values.push_back(v);
    else ++r.excluded;
  }
  return r;
}

namespace {

SpectralField product(const SpectralField& a, const SpectralField& b) {
  const int points = a.grid().modes;
  const RealBuffer x = to_physical(a, 0, points);
  const RealBuffer y = to_physical(b, 0, points);
  RealBuffer z(x.size());
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = x[i] * y[i];
  SpectralField out(a.grid(), 1);
  from_physical(z.data(), points, out, 0);
  return out;
}

SpectralField lambda_s(const SpectralField& f, double s) {
  SpectralField out = f;
  apply_multiplier_in_place(out, fractional_laplacian(s));
  return out;
}

// The 2M grid of the same torus holds every product of two band-K fields.
Grid product_grid(const Grid& g) { return with_modes(g, 2 * g.modes); }

}  // namespace

double commutator_ratio(const SpectralField& f, const SpectralField& g, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("commutator order s must be positive");
  if (f.components() != 1 || g.components() != 1) throw std::invalid_argument("expected scalar fields");
  const Grid fine = product_grid(f.grid());
  const SpectralField F = change_grid(f, fine);
  const SpectralField G = change_grid(g, fine);
  const SpectralField c = lambda_s(product(F, G), s) - product(F, lambda_s(G, s));
  const double lhs = l2_norm(c);
  const double rhs = lp_norm(gradient(f), kInf) * l2_norm(lambda_s(g, s - 1.0)) + l2_norm(lambda_s(f, s)) * lp_norm(g, kInf);
  if (!(rhs > 0.0)) return NAN;
  return lhs / rhs;
}

double leibniz_residual(const SpectralField& f, const SpectralField& g) {
  const Grid fine = product_grid(f.grid());
  const SpectralField F = change_grid(f, fine);
  const SpectralField G = change_grid(g, fine);
  const SpectralField lhs = lambda_s(product(F, G), 2.0) - product(F, lambda_s(G, 2.0));
  SpectralField rhs = product(apply_multiplier(F, laplacian()), G);
  rhs *= -1.0;
  for (int a = 0; a < fine.dim; ++a) rhs.add_scaled(-2.0, product(derivative(F, a), derivative(G, a)));
  const double scale = std::max(l2_norm(lhs), l2_norm(rhs));
  return scale > 0.0 ? l2_norm(lhs - rhs) / scale : 0.0;
}

VerificationReport check_commutator(const Grid& grid, std::uint64_t seed, int n, double s) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  VerificationReport r;
  char buf[64];
  std::snprintf(buf, sizeof buf, "commutator.ratio_s%g_M%d", s, grid.modes);
  r.name = buf;
  r.kind = "inequality";
  const int band = std::min(3, grid.band_limit);
  for (int i = 0; i < n; ++i) {
    const SpectralField f = synth_random_divfree(grid, 1, seed + 2 * static_cast<std::uint64_t>(i), 3.0, band);
    const SpectralField g = synth_random_divfree(grid, 1, seed + 2 * static_cast<std::uint64_t>(i) + 1, 3.0, band);
    const double v = commutator_ratio(f, g, s);
    if (std::isfinite(v)) r.values.push_back(v);
    else ++r.excluded;
  }
  return r;
}

}  // namespace tormhd
