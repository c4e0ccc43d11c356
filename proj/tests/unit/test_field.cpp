#include <cmath>
#include <numbers>

#include "../oracle.hpp"
#include "doctest.h"
#include "tormhd/field_ops.hpp"
#include "tormhd/multiplier.hpp"
#include "tormhd/norms.hpp"
#include "tormhd/transform.hpp"

using namespace tormhd;
using std::numbers::pi;

namespace {

SpectralField sine(const Grid& g, int axis, int k, int components = 1, int component = 0) {
  return sample_function(g, components, [=](const double* x, int c) {
    return c == component ? std::sin(k * x[axis] * g.kappa_unit()) : 0.0;
  });
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("make_grid picks the largest alias-free band") {
  const Grid g = make_grid(4, 16);
  CHECK(g.dim == 4);
  CHECK(g.modes == 16);
  CHECK(g.band_limit == 5);
  CHECK(g.alias_free_cubic());
  CHECK(make_grid(2, 8).band_limit == 2);
  CHECK_THROWS_AS(make_grid(4, 7), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(5, 16), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(1, 16), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(3, 6), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(3, 16, -1.0), std::invalid_argument);
  CHECK_FALSE(make_debug_grid(4, 16, 7).alias_free_cubic());
}

TEST_CASE("wavevector and flat index are inverse") {
  const Grid g = make_grid(3, 12);
  for (std::size_t i = 0; i < g.points(); i += 7) CHECK(g.flat_index(g.wavevector(i)) == i);
}

TEST_CASE("synthetic fields are real, band-limited, solenoidal and deterministic") {
  const Grid g = make_grid(4, 16);
  const SpectralField u = synth_random_divfree(g, 4, 42);
  const SpectralField v = synth_random_divfree(g, 4, 42);
  CHECK(max_relative_difference(u, v) == 0.0);
  CHECK(u.hermitian_defect() <= 1e-15 * u.max_abs());
  CHECK(u.out_of_band_max() == 0.0);
  for (int c = 0; c < 4; ++c) CHECK(u.mean_mode(c) == Complex{});
  CHECK(max_divergence(u) <= 1e-12 * std::sqrt(oracle::parseval(u)));
  // The L^2 norm against a direct-summation quadrature on a coarse grid
  // that still resolves |u|^2 exactly (2K < 11).
  const Grid small = make_grid(4, 8);
  const SpectralField w = synth_random_divfree(small, 4, 42);
  const double quad = oracle::integral(small, 5, [&](const double* x) {
    double s = 0.0;
    for (int c = 0; c < 4; ++c) s += std::pow(oracle::value_at(w, c, x), 2);
    return s;
  });
  CHECK(rel(l2_norm(w), std::sqrt(quad)) <= 1e-12);
  CHECK(rel(l2_norm(u), std::sqrt(oracle::parseval(u))) <= 1e-12);
}

TEST_CASE("spectral transforms agree with direct summation") {
  const Grid g = make_grid(3, 12);
  const SpectralField f = synth_random_divfree(g, 1, 5);
  const RealBuffer v = to_physical(f, 0, 12);
  std::size_t n = 0;
  double worst = 0.0, scale = 0.0;
  oracle::for_each_point(g, 12, [&](const double* x) {
    worst = std::max(worst, std::abs(v[n++] - oracle::value_at(f, 0, x)));
    scale = std::max(scale, std::abs(oracle::value_at(f, 0, x)));
  });
  CHECK(worst <= 1e-12 * scale);

  SUBCASE("round trip on native and padded grids") {
    for (int points : {12, 18, 24}) {
      SpectralField back(g, 1);
      from_physical(to_physical(f, 0, points).data(), points, back, 0);
      CHECK(max_relative_difference(back, f) <= 1e-12);
    }
  }
}

TEST_CASE("Parseval: quadrature of f g matches the coefficient inner product") {
  const Grid g = make_grid(4, 12);
  const SpectralField f = synth_random_divfree(g, 1, 1);
  const SpectralField h = synth_random_divfree(g, 1, 2);
  const RealBuffer a = to_physical(f, 0, 12), b = to_physical(h, 0, 12);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  s *= g.volume() / static_cast<double>(a.size());
  CHECK(rel(s, inner_product(f, h)) <= 1e-12);
}

TEST_CASE("multipliers act per mode") {
  const Grid g = make_grid(4, 16);
  CHECK(max_relative_difference(apply_multiplier(sine(g, 0, 2), fractional_laplacian(2.0)), 4.0 * sine(g, 0, 2)) <= 1e-14);
  const SpectralField cosine = sample_function(g, 1, [](const double* x, int) { return std::cos(x[0]); });
  CHECK(max_relative_difference(derivative(sine(g, 0, 1), 0), cosine) <= 1e-14);
  const SpectralField f = sine(g, 0, 1) + sine(g, 1, 2);
  const SpectralField expect = sine(g, 0, 1) + std::pow(2.0, 1.5) * sine(g, 1, 2);
  CHECK(max_relative_difference(apply_multiplier(f, fractional_laplacian(1.5)), expect) <= 1e-14);

  SUBCASE("linearity") {
    const SpectralField a = synth_random_divfree(g, 1, 3), b = synth_random_divfree(g, 1, 4);
    const WaveMultiplier m = fractional_laplacian(0.7);
    CHECK(max_relative_difference(apply_multiplier(2.0 * a + b, m), 2.0 * apply_multiplier(a, m) + apply_multiplier(b, m)) <= 1e-14);
  }
  SUBCASE("non-Hermitian symbols are rejected") {
    const WaveMultiplier bad{[](const PhysicalWavevector& k, const Wavevector&) { return Complex(0.0, k[0] * k[0]); }, "bad"};
    CHECK_THROWS_AS(apply_multiplier(sine(g, 0, 1), bad), std::invalid_argument);
  }
  SUBCASE("Lambda^0 removes only the mean") {
    SpectralField f0 = sine(g, 0, 1);
    f0.at(0, Wavevector{0, 0, 0, 0}) = 3.0;
    CHECK(max_relative_difference(apply_multiplier(f0, fractional_laplacian(0.0)), sine(g, 0, 1)) <= 1e-15);
  }
}

TEST_CASE("Leray projection") {
  const Grid g = make_grid(4, 16);
  const SpectralField phi = sample_function(g, 1, [](const double* x, int) { return std::sin(x[0]) * std::sin(x[1]); });
  CHECK(leray_project(gradient(phi)).max_abs() <= 1e-15);

  const SpectralField shear = sample_function(g, 4, [](const double* x, int c) {
    return c == 0 ? std::sin(x[1]) : c == 1 ? std::sin(x[0]) : 0.0;
  });
  CHECK(max_divergence(shear) <= 1e-14);
  CHECK(max_relative_difference(leray_project(shear), shear) <= 1e-14);

  const SpectralField u = synth_random_divfree(g, 4, 8);
  CHECK(max_relative_difference(leray_project(u), u) <= 1e-14);

  SUBCASE("idempotent, orthogonal to gradients, keeps the mean") {
    SpectralField f(g, 4);
    for (int c = 0; c < 4; ++c) f.component(c).data()[0] = Complex(c + 1.0, 0.0);
    f += synth_random_divfree(g, 4, 9) + gradient(synth_random_divfree(g, 1, 10));
    const SpectralField p = leray_project(f);
    CHECK(max_relative_difference(leray_project(p), p) <= 1e-12);
    const SpectralField grad = gradient(synth_random_divfree(g, 1, 11));
    CHECK(std::abs(inner_product(p, grad)) <= 1e-12 * l2_norm(p) * l2_norm(grad));
    for (int c = 0; c < 4; ++c) CHECK(p.mean_mode(c) == f.mean_mode(c));
  }
  SUBCASE("commutes with isotropic multipliers") {
    const SpectralField f = synth_random_divfree(g, 4, 12) + gradient(synth_random_divfree(g, 1, 13));
    const WaveMultiplier m = fractional_laplacian(1.3);
    CHECK(max_relative_difference(leray_project(apply_multiplier(f, m)), apply_multiplier(leray_project(f), m)) <= 1e-12);
  }
  CHECK_THROWS_AS(leray_project(sine(g, 0, 1)), std::invalid_argument);
}

TEST_CASE("rescaling obeys the lambda^(2-N) law") {
  for (int dim : {2, 4}) {
    const Grid g = make_grid(dim, dim == 2 ? 24 : 12);
    const SpectralField f = sine(g, 0, 1, dim, 1);
    const SpectralField f1 = rescale_field(f, 1);
    CHECK(max_relative_difference(f1, f) == 0.0);
    CHECK(f1.grid() == g);
    for (int lambda : {2, 3}) {
      const SpectralField fl = rescale_field(f, lambda);
      CHECK(fl.grid().side_length == doctest::Approx(g.side_length / lambda));
      const double ratio = std::pow(l2_norm(fl) / l2_norm(f), 2);
      CHECK(rel(ratio, std::pow(lambda, 2.0 - dim)) <= 1e-12);
      const SpectralField r = synth_random_divfree(g, dim, 20 + lambda);
      CHECK(rel(std::pow(l2_norm(rescale_field(r, lambda)) / l2_norm(r), 2), std::pow(lambda, 2.0 - dim)) <= 1e-12);
    }
  }
  const Grid g = make_grid(4, 16);
  CHECK_THROWS_AS(rescale_field(sine(g, 0, 1), 0), std::invalid_argument);
  // The nested embedding needs room for lambda K on the target grid.
  CHECK_THROWS_AS(embed_periodic(synth_random_divfree(g, 1, 1), 2, 16), std::invalid_argument);
}

TEST_CASE("rescaled field is lambda f(lambda x) pointwise") {
  const Grid g = make_grid(2, 12);
  const SpectralField f = synth_random_divfree(g, 2, 31);
  const SpectralField fl = rescale_field(f, 3);
  const double x[2] = {0.3, 1.1};
  const double y[2] = {0.9, 3.3};
  CHECK(rel(oracle::value_at(fl, 1, x), 3.0 * oracle::value_at(f, 1, y)) <= 1e-12);
  const SpectralField e = embed_periodic(f, 3, 36);
  CHECK(rel(oracle::value_at(e, 1, x), 3.0 * oracle::value_at(f, 1, y)) <= 1e-12);
}
