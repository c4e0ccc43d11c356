#include <cmath>
#include <numbers>

#include "../oracle.hpp"
#include "doctest.h"
#include "tormhd/energy.hpp"
#include "tormhd/field_ops.hpp"
#include "tormhd/multiplier.hpp"
#include "tormhd/norms.hpp"
#include "tormhd/series.hpp"

using namespace tormhd;
using std::numbers::pi;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

SpectralField mode(const Grid& g, int components, int component, int axis, int k) {
  return sample_function(g, components, [=](const double* x, int c) { return c == component ? std::sin(k * x[axis]) : 0.0; });
}

}  // namespace

TEST_CASE("lp_norm on closed forms") {
  const Grid g = make_grid(4, 16);
  const SpectralField s = mode(g, 1, 0, 0, 1);
  CHECK(lp_norm(SpectralField(g, 1), 3.0) == 0.0);
  CHECK(lp_norm(SpectralField(g, 4), kInf) == 0.0);
  CHECK(std::abs(lp_norm(s, kInf) - 1.0) <= 1e-3);
  CHECK(rel(lp_norm(s, 2.0), std::sqrt(std::pow(2.0 * pi, 4) / 2.0)) <= 1e-13);
  // int sin^4 = 3/8 of the volume, exact on the even-p grid.
  CHECK(rel(std::pow(lp_norm(s, 4.0), 4), 3.0 / 8.0 * std::pow(2.0 * pi, 4)) <= 1e-12);
  CHECK_THROWS_AS(lp_norm(s, 0.5), std::invalid_argument);
}

TEST_CASE("lp_norm matches a direct quadrature oracle for non-even p") {
  const Grid g = make_grid(3, 12);
  const SpectralField f = synth_random_divfree(g, 1, 77);
  const double p = 3.3;
  const double direct = std::pow(oracle::integral(g, 24, [&](const double* x) { return std::pow(std::abs(oracle::value_at(f, 0, x)), p); }), 1.0 / p);
  CHECK(rel(lp_norm(f, p), direct) <= 1e-12);
  // Padding keeps the quadrature error of the non-smooth integrand small.
  CHECK(rel(lp_norm(f, p), lp_norm(f, p, 48)) <= 1e-3);
}

TEST_CASE("lp_norm properties on an ensemble") {
  const Grid g = make_grid(4, 12);
  for (int seed = 0; seed < 5; ++seed) {
    const SpectralField f = synth_random_divfree(g, 1, 100 + seed);
    double prev = 0.0;
    for (double p : {1.0, 1.5, 2.0, 3.0, 4.0, 6.5, 8.0, kInf}) {
      const double normalized = std::isinf(p) ? lp_norm(f, p) : lp_norm(f, p) / std::pow(g.volume(), 1.0 / p);
      CHECK(normalized >= prev * (1.0 - 1e-12));
      prev = normalized;
    }
    CHECK(lp_norm(f, 4.0) <= std::sqrt(lp_norm(f, 2.0) * lp_norm(f, kInf)) * (1.0 + 1e-12));
  }
}

TEST_CASE("anisotropic functionals") {
  const Grid g = make_grid(4, 16);
  const double half = std::pow(2.0 * pi, 4) / 2.0;
  const MhdState zero = zero_state(g);
  const Anisotropic z = wxyz(zero);
  CHECK(z.W == 0.0);
  CHECK(z.Z == 0.0);

  MhdState s = zero_state(g);
  s.u = mode(g, 4, 0, 1, 1);
  Anisotropic a = wxyz(s);
  CHECK(rel(a.W, half) <= 1e-13);
  CHECK(rel(a.X, half) <= 1e-13);
  CHECK(rel(a.Y, half) <= 1e-13);
  CHECK(rel(a.Z, half) <= 1e-13);

  s.u = mode(g, 4, 0, 2, 1);
  a = wxyz(s);
  CHECK(a.W == doctest::Approx(0.0));
  CHECK(a.Y == doctest::Approx(0.0));
  CHECK(rel(a.X, half) <= 1e-13);
  CHECK(rel(a.Z, half) <= 1e-13);

  for (int seed = 0; seed < 4; ++seed) {
    MhdState r{synth_random_divfree(g, 4, seed), synth_random_divfree(g, 4, seed + 50)};
    const Anisotropic q = wxyz(r);
    CHECK(q.W <= q.X);
    CHECK(q.Y <= q.Z);
    // Partial axes {3, 4} with the axes relabelled give the same numbers.
    const Anisotropic p = anisotropic_functionals(r.u, r.b, {2, 3});
    CHECK(p.X == doctest::Approx(q.X).epsilon(1e-14));
  }
  CHECK_THROWS_AS(wxyz(zero_state(make_grid(3, 12))), std::invalid_argument);
}

TEST_CASE("Sobolev seminorms") {
  const Grid g = make_grid(4, 16);
  const SpectralField f = synth_random_divfree(g, 1, 3);
  CHECK(rel(sobolev_seminorm(f, 0.0), lp_norm(f, 2.0)) <= 1e-14);
  const SpectralField s2 = mode(g, 1, 0, 0, 2);
  CHECK(rel(sobolev_seminorm(s2, 1.0), 2.0 * l2_norm(s2)) <= 1e-14);
  const SpectralField a = mode(g, 1, 0, 0, 1), b = mode(g, 1, 0, 1, 3);
  const double expect = std::sqrt(std::pow(l2_norm(a), 2) + std::pow(3.0, 9) * std::pow(l2_norm(b), 2));
  CHECK(rel(sobolev_seminorm(a + b, 4.5), expect) <= 1e-13);
  CHECK(rel(std::pow(sobolev_seminorm(f, 1.0), 2), gradient_energy(f)) <= 1e-12);
  CHECK(rel(gradient_energy(f), std::pow(l2_norm(gradient(f)), 2)) <= 1e-12);
  CHECK_THROWS_AS(sobolev_seminorm(f, -1.0), std::invalid_argument);
}

TEST_CASE("accumulators") {
  SUBCASE("constant integrand") {
    NormSeries s;
    double acc = 0.0;
    for (int n = 0; n <= 10; ++n) {
      s.append(0.1 * n, {{"q", 2.0}});
      acc = accumulate(s, "q", 3.0, 0.1);
    }
    CHECK(acc == doctest::Approx(8.0).epsilon(1e-14));
  }
  SUBCASE("running sup") {
    NormSeries s;
    double acc = 0.0;
    int n = 0;
    for (double v : {1.0, 3.0, 2.0}) {
      s.append(n++, {{"q", v}});
      acc = accumulate(s, "q", kInf, 1.0);
    }
    CHECK(acc == 3.0);
  }
  SUBCASE("linear integrand squared") {
    NormSeries s;
    double acc = 0.0;
    for (int n = 0; n <= 1000; ++n) {
      s.append(n / 1000.0, {{"q", n / 1000.0}});
      acc = accumulate(s, "q", 2.0, 1e-3);
    }
    CHECK(std::abs(acc - 1.0 / 3.0) <= 1e-6);
  }
  SUBCASE("errors") {
    NormSeries s;
    s.append(0.0, {{"q", 1.0}});
    CHECK_THROWS(accumulate(s, "missing", 2.0, 0.1));
    CHECK_THROWS(accumulate(s, "q", 0.5, 0.1));
    CHECK_THROWS(s.append(0.0, {{"q", 1.0}}));
    CHECK_THROWS(s.append(1.0, {{"r", 1.0}}));
  }
  SUBCASE("additivity across a split interval") {
    NormSeries whole, first;
    double a = 0.0, b = 0.0;
    for (int n = 0; n <= 20; ++n) {
      const double v = std::sin(0.3 * n) + 2.0;
      whole.append(0.05 * n, {{"q", v}});
      a = accumulate(whole, "q", 2.5, 0.05);
      if (n <= 10) {
        first.append(0.05 * n, {{"q", v}});
        b = accumulate(first, "q", 2.5, 0.05);
      }
    }
    double rest = 0.0;
    for (int n = 10; n < 20; ++n)
      rest += 0.025 * (std::pow(std::sin(0.3 * n) + 2.0, 2.5) + std::pow(std::sin(0.3 * (n + 1)) + 2.0, 2.5));
    CHECK(a == doctest::Approx(b + rest).epsilon(1e-14));
  }
}

TEST_CASE("energy ledger") {
  const Grid g = make_grid(4, 12);
  MhdState s{synth_random_divfree(g, 4, 1), synth_random_divfree(g, 4, 2), 0.0, 0.7, 0.3};
  const EnergyLedger l = energy_ledger_start(s);
  CHECK(l.defect() == 0.0);
  CHECK(rel(l.initial_energy, std::pow(l2_norm(s.u), 2) + std::pow(l2_norm(s.b), 2)) <= 1e-14);
  CHECK(rel(dissipation(s), 0.7 * gradient_energy(s.u) + 0.3 * gradient_energy(s.b)) <= 1e-14);
  CHECK(l.initial_energy >= 0.0);
}
