#include <cmath>
#include <random>

#include "doctest.h"
#include "tormhd/field_ops.hpp"
#include "tormhd/norms.hpp"
#include "tormhd/rhs.hpp"
#include "tormhd/simd/kernels.hpp"

using namespace tormhd;

namespace {

std::vector<double> random_vector(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Restores automatic selection when a test forced one table.
struct Restore {
  ~Restore() { simd::select_kernels("auto"); }
};

}  // namespace

TEST_CASE("scalar and AVX2 kernels agree") {
  const simd::KernelTable& s = simd::scalar_kernels();
  const simd::KernelTable* v = simd::avx2_kernels();
  if (!v) {
    MESSAGE("AVX2 unavailable on this machine; equivalence not exercised");
    return;
  }
  // Odd lengths exercise the scalar tails.
  for (std::size_t n : {std::size_t{1}, std::size_t{3}, std::size_t{17}, std::size_t{1000}, std::size_t{4099}}) {
    const auto a = random_vector(n, 1), b = random_vector(n, 2), c = random_vector(n, 3), d = random_vector(n, 4);
    std::vector<double> x(n), y(n);
    s.mul(a.data(), b.data(), x.data(), n);
    v->mul(a.data(), b.data(), y.data(), n);
    CHECK(x == y);
    s.mul_sub(a.data(), b.data(), c.data(), d.data(), x.data(), n);
    v->mul_sub(a.data(), b.data(), c.data(), d.data(), y.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(x[i] - y[i]) <= 1e-15 * (std::abs(a[i] * b[i]) + std::abs(c[i] * d[i])));
    x = c;
    y = c;
    s.axpy(0.3, a.data(), x.data(), n);
    v->axpy(0.3, a.data(), y.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(x[i] - y[i]) <= 1e-15 * (std::abs(x[i]) + 1.0));
    x.assign(n, 0.5);
    y.assign(n, 0.5);
    s.square_accumulate(a.data(), x.data(), n);
    v->square_accumulate(a.data(), y.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(x[i] - y[i]) <= 1e-15 * x[i]);
    if (n % 2 == 0) {
      const auto sym = random_vector(n / 2, 5);
      x = a;
      y = a;
      s.scale_complex(sym.data(), x.data(), n / 2);
      v->scale_complex(sym.data(), y.data(), n / 2);
      CHECK(x == y);
    }
    const double tol = 1e-13 * static_cast<double>(n);
    CHECK(std::abs(s.dot(a.data(), b.data(), n) - v->dot(a.data(), b.data(), n)) <= tol);
    CHECK(std::abs(s.dot3(a.data(), b.data(), c.data(), n) - v->dot3(a.data(), b.data(), c.data(), n)) <= tol);
    CHECK(s.max_abs(a.data(), n) == v->max_abs(a.data(), n));
    for (double p : {1.0, 2.0, 2.5, 3.25}) {
      const double r = s.sum_abs_pow(a.data(), n, p);
      CHECK(std::abs(r - v->sum_abs_pow(a.data(), n, p)) <= 1e-12 * r);
    }
  }
}

TEST_CASE("kernel selection and end-to-end equivalence") {
  Restore restore;
  CHECK(simd::select_kernels("scalar"));
  CHECK(simd::kernels().name == "scalar");
  CHECK_FALSE(simd::select_kernels("nonsense"));
  const Grid g = make_grid(4, 12);
  const SpectralField u = synth_random_divfree(g, 4, 5), b = synth_random_divfree(g, 4, 6);
  SpectralField du_s, db_s, du_v, db_v;
  nonlinear_rhs(u, b, du_s, db_s);
  const double l3 = lp_norm(u, 3.0);
  if (!simd::select_kernels("avx2")) return;
  CHECK(simd::kernels().name == "avx2");
  nonlinear_rhs(u, b, du_v, db_v);
  CHECK(max_relative_difference(du_s, du_v) <= 1e-13);
  CHECK(max_relative_difference(db_s, db_v) <= 1e-13);
  CHECK(std::abs(lp_norm(u, 3.0) - l3) <= 1e-13 * l3);
}
