#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tormhd/field_ops.hpp"
#include "tormhd/multiplier.hpp"
#include "tormhd/norms.hpp"
#include "tormhd/simulate.hpp"
#include "tormhd/verify.hpp"

using namespace tormhd;
using std::numbers::pi;

namespace {

SpectralField scalar(const Grid& g, double (*fn)(const double*)) {
  return sample_function(g, 1, [fn](const double* x, int) { return fn(x); });
}

}  // namespace

TEST_CASE("report statistics") {
  VerificationReport r{"x", "identity", {3e-12, 1e-12, 2e-12}, 1, 1e-11, ""};
  CHECK(r.n() == 4);
  CHECK(r.max() == 3e-12);
  CHECK(r.median() == 2e-12);
  CHECK(r.passed());
  r.values.push_back(NAN);
  CHECK_FALSE(r.passed());
  VerificationReport c{"c", "control", {0.5}, 0, 1e-3, ""};
  CHECK(c.passed());
  c.values = {1e-5};
  CHECK_FALSE(c.passed());
  VerificationReport q{"q", "inequality", {0.3, 0.7}, 0, NAN, ""};
  CHECK(q.passed());
  q.values.push_back(-1.0);
  CHECK_FALSE(q.passed());
  const std::string text = format_reports({r, c});
  CHECK(text.find("check: x") != std::string::npos);
  CHECK(text.find("result: FAIL") != std::string::npos);
  CHECK(relative_residual(1.0, 1.0 + 1e-12) == doctest::Approx(1e-12).epsilon(1e-3));
  CHECK(relative_residual(0.0, 1e-20, 1.0) == doctest::Approx(1e-20));
}

TEST_CASE("elementary inequality") {
  CHECK(check_elementary(1, 1, 2));
  CHECK(check_elementary(5, 0, 3.5));
  CHECK(check_elementary(0, 0, 0));
  CHECK_THROWS_AS(check_elementary(-1, 1, 2), std::invalid_argument);
  const VerificationReport r = elementary_sweep(11, 100000);
  CHECK(r.passed());
  CHECK(r.max() <= 1.0);
  CHECK(r.n() == 100000);
  CHECK_THROWS_AS(elementary_sweep(1, 0), std::invalid_argument);
}

TEST_CASE("windowed L^4 ratio") {
  const Grid g = make_grid(4, 16);
  CHECK(std::isnan(troisi_ratio(SpectralField(g, 1))));
  // Constant along x4: d4 f = 0 makes the sample degenerate.
  CHECK(std::isnan(troisi_ratio(scalar(g, [](const double* x) { return std::sin(x[0]) * std::sin(x[1]) * std::sin(x[2]); }))));
  const VerificationReport r = check_troisi(g, 7, 5);
  CHECK(r.n() == 5);
  CHECK(r.passed());
  for (double v : r.values) CHECK(std::isfinite(v));
  CHECK(troisi_dilation_residual(make_grid(4, 32), 0.4) <= 1e-5);
  CHECK_THROWS_AS(check_troisi(g, 7, 0), std::invalid_argument);
  CHECK_THROWS_AS(troisi_field(make_grid(3, 16), 1, 0), std::invalid_argument);
}

TEST_CASE("commutator estimate") {
  const Grid g = make_grid(4, 12);
  const SpectralField f = synth_random_divfree(g, 1, 1, 3.0, 3), h = synth_random_divfree(g, 1, 2, 3.0, 3);
  CHECK(leibniz_residual(f, h) <= 1e-11);
  SpectralField one(g, 1);
  one.at(0, Wavevector{0, 0, 0, 0}) = 2.0;
  CHECK(std::isnan(commutator_ratio(one, h, 2.5)));
  CHECK(commutator_ratio(f, h, 2.5) > 0.0);
  CHECK_THROWS_AS(commutator_ratio(f, h, 0.0), std::invalid_argument);
  const VerificationReport r = check_commutator(g, 3, 4, 2.5);
  CHECK(r.passed());
}

TEST_CASE("decomposition identities and their hypotheses") {
  const Grid g = make_grid(4, 12);
  const SpectralField u = synth_random_divfree(g, 4, 42), b = synth_random_divfree(g, 4, 43);
  CHECK(check_decomposition(u, b, DecompositionMode::expansion).passed());
  CHECK(check_decomposition(u, b, DecompositionMode::mixed_terms).passed());
  const SpectralField dirty = u + gradient(synth_random_divfree(g, 1, 44));
  CHECK_THROWS_AS(check_decomposition(dirty, b, DecompositionMode::expansion), std::invalid_argument);

  SUBCASE("zero magnetic field") {
    const DecompositionTerms t = decomposition_terms(u, SpectralField(g, 4));
    CHECK(check_decomposition(u, SpectralField(g, 4), DecompositionMode::mixed_terms).max() <= 1e-10);
    CHECK(t.rhs_amplitude > 0.0);
  }
  SUBCASE("planar flow embedded in axes 1 and 2") {
    const SpectralField planar = sample_function(g, 4, [](const double* x, int c) {
      return c == 0 ? std::sin(x[0]) * std::cos(2 * x[1]) : c == 1 ? -0.5 * std::cos(x[0]) * std::sin(2 * x[1]) : 0.0;
    });
    const DecompositionTerms t = decomposition_terms(planar, SpectralField(g, 4));
    CHECK(t.rhs_amplitude == 0.0);
    CHECK(std::abs(t.lhs) <= 1e-11);
  }
  SUBCASE("split pieces") {
    const VerificationReport s = check_nonlinear_split(u);
    CHECK(s.values[0] <= 1e-12);
    CHECK(s.passed());
  }
}

TEST_CASE("dissipative identity") {
  const Grid g = make_grid(4, 12);
  const SpectralField f = synth_random_divfree(g, 1, 5);
  CHECK(dissipative_identity(f, 2.0).residual <= 1e-11);
  const DissipativeSides s = dissipative_identity(scalar(g, [](const double* x) { return std::sin(x[0]); }), 4.0);
  const double exact = 3.0 * std::pow(2.0 * pi, 4) / 8.0;
  CHECK(s.lhs == doctest::Approx(exact).epsilon(1e-12));
  CHECK(s.rhs == doctest::Approx(exact).epsilon(1e-12));
  CHECK_THROWS_AS(dissipative_identity(f, 1.0), std::invalid_argument);

  SUBCASE("non-even exponents converge under refinement") {
    const Grid h = make_grid(3, 12);
    const SpectralField q = synth_random_divfree(h, 1, 8);
    const double coarse = dissipative_identity(q, 3.0, 24, 8).residual;
    const double fine = dissipative_identity(q, 3.0).residual;
    CHECK(fine < coarse);
    CHECK(fine <= 1e-6);
    // A single mode has no cross dependence, so the line rule is exact.
    const SpectralField m = scalar(h, [](const double* x) { return std::sin(x[0]) + 0.3 * std::cos(2 * x[0]); });
    CHECK(dissipative_identity(m, 3.0).residual <= 1e-12);
    CHECK(dissipative_identity(m, 1.5).residual <= 1e-6);
  }
}

TEST_CASE("pressure balance preconditions and degenerate runs") {
  SimConfig c;
  c.modes = 8;
  c.dt = 1e-3;
  c.t_end = 6e-3;
  c.nu = 0.5;
  c.initial.preset = "diffusion";
  c.initial.amplitude_b = 0.0;
  std::vector<PressureFrame> frames;
  SimHooks hooks;
  hooks.want_pressure = true;
  hooks.on_output = [&](const MhdState& s, const SpectralField* p) { frames.push_back({s, *p}); };
  simulate(c, {}, hooks);
  REQUIRE(frames.size() == 7);
  const PressureBalance b = lp_pressure_balance(frames, 1, 4.0, 2.0);
  for (std::size_t n = 0; n < b.times.size(); ++n) {
    CHECK(b.pressure[n] == 0.0);
    CHECK(b.residual[n] <= 1e-9);
  }
  CHECK_THROWS_AS(lp_pressure_balance(frames, 1, 4.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(lp_pressure_balance(frames, 1, 4.0, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(lp_pressure_balance(frames, 1, 2.0, 1.9), std::invalid_argument);
  CHECK_THROWS_AS(lp_pressure_balance({frames.begin(), frames.begin() + 4}, 1, 4.0, 2.0), std::invalid_argument);

  std::vector<PressureFrame> zero;
  for (int n = 0; n < 5; ++n) zero.push_back({MhdState{SpectralField(frames[0].state.grid(), 4), SpectralField(frames[0].state.grid(), 4), 0.1 * n}, SpectralField(frames[0].state.grid(), 1)});
  const PressureBalance z = lp_pressure_balance(zero, 0, 3.0, 2.0);
  CHECK(z.rate[0] == 0.0);
  CHECK(z.residual[0] == 0.0);
}

TEST_CASE("scaling checks") {
  const Grid g = make_grid(2, 16);
  MhdState s{synth_random_divfree(g, 2, 1), synth_random_divfree(g, 2, 2), 0.0, 0.1, 0.2};
  CHECK(check_scaling(s, 1).max() == 0.0);
  CHECK(check_scaling(s, 2).passed());
  CHECK_THROWS_AS(check_scaling(s, 0), std::invalid_argument);
}

TEST_CASE("suites") {
  CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
  SuiteOptions o;
  o.n = 1;
  CHECK(suite_passed(run_suite("scaling", o)));
  o.aliased_grid = true;
  CHECK_FALSE(suite_passed(run_suite("identities", o)));
}
