#include <cmath>
#include <numbers>

#include "doctest.h"
#include "tormhd/criteria.hpp"
#include "tormhd/error.hpp"
#include "tormhd/field_ops.hpp"
#include "tormhd/monitor.hpp"
#include "tormhd/norms.hpp"
#include "tormhd/presets.hpp"
#include "tormhd/simulate.hpp"

using namespace tormhd;
using std::numbers::pi;

constexpr double inf = kInf;

TEST_CASE("admissibility boundaries") {
  CHECK(admissible(Theorem::T1_1, 8, 16));
  CHECK_FALSE(admissible(Theorem::T1_1, 8, 15));
  CHECK(admissible(Theorem::T1_3, 8, 16));
  CHECK_FALSE(admissible(Theorem::T1_3, 8, 15));
  CHECK_FALSE(admissible(Theorem::T1_1, 6, 1000));
  CHECK_FALSE(admissible(Theorem::T1_1, 6, inf));
  CHECK(admissible(Theorem::T1_1, 6, inf, true));
  CHECK_FALSE(admissible(Theorem::T1_1, 8, 16, true));
  CHECK(admissible(Theorem::T1_1, inf, 4));
  CHECK_FALSE(admissible(Theorem::T1_1, inf, 3.9));

  CHECK(admissible(Theorem::T1_2, 4, 4));
  CHECK(admissible(Theorem::T1_4, 4, 4));
  CHECK_FALSE(admissible(Theorem::T1_2, 4, 3.99));
  CHECK_FALSE(admissible(Theorem::T1_2, 12.0 / 5.0, 1000));
  CHECK(admissible(Theorem::T1_2, 12.0 / 5.0, inf, true));
  CHECK(admissible(Theorem::T1_2, inf, 2));
  CHECK_FALSE(admissible(Theorem::T1_2, inf, 1.9));

  CHECK(admissible(Theorem::T1_5, 2, 4));
  CHECK_FALSE(admissible(Theorem::T1_5, 2, 3));
  CHECK_FALSE(admissible(Theorem::T1_5, 6, inf));
  CHECK_FALSE(admissible(Theorem::T1_5, 12.0 / 7.0, inf));

  CHECK(admissible(Theorem::CLASSICAL_U, 4, inf, false, 2));
  CHECK_FALSE(admissible(Theorem::CLASSICAL_U, 4, inf, false, 4));
  CHECK(admissible(Theorem::CLASSICAL_U, inf, 2, false, 4));
  CHECK(admissible(Theorem::CLASSICAL_GRADU, 4, 2, false, 4));
  CHECK_FALSE(admissible(Theorem::CLASSICAL_GRADU, 8, 4.0 / 3.0 + 0.1, false, 4));
  CHECK(admissible(Theorem::CLASSICAL_GRADPI, 4.0 / 3.0, inf, false, 4));
  CHECK_FALSE(admissible(Theorem::CLASSICAL_GRADPI, 1.3, inf, false, 4));

  CHECK_THROWS_AS(admissible(Theorem::T1_1, 0.5, 2), std::invalid_argument);
  CHECK_THROWS_AS(admissible(Theorem::T1_1, 8, 0.5), std::invalid_argument);
}

TEST_CASE("T1_2 branches meet at p = 4") {
  // Both formulas give 3/2 there.
  CHECK(4.0 / 4.0 + 2.0 / 4.0 == doctest::Approx(5.0 / 4.0 + 1.0 / 4.0));
  CHECK(4.0 / 4.0 + 2.0 / 4.0 == doctest::Approx(1.0 + 2.0 / 4.0));
  for (double eps : {1e-9, 1e-6}) {
    const double p = 4.0 + eps;
    const double r_low = 2.0 / (5.0 / 4.0 + 1.0 / (4.0 - eps) - 4.0 / (4.0 - eps));
    const double r_high = 2.0 / (1.0 + 2.0 / p - 4.0 / p);
    CHECK(r_low == doctest::Approx(r_high).epsilon(1e-5));
  }
}

TEST_CASE("admissible regions grow with r") {
  for (Theorem t : {Theorem::T1_1, Theorem::T1_2, Theorem::T1_3, Theorem::T1_4, Theorem::T1_5, Theorem::CLASSICAL_U,
                    Theorem::CLASSICAL_GRADPI}) {
    for (double p = 1.0; p <= 20.0; p += 0.37)
      for (double r = 1.0; r <= 40.0; r += 0.9)
        if (admissible(t, p, r)) {
          CHECK(admissible(t, p, r + 0.5));
          CHECK(admissible(t, p, inf));
        }
  }
}

TEST_CASE("spec validation and names") {
  CHECK(parse_theorem("T1_3") == Theorem::T1_3);
  CHECK(to_string(Theorem::CLASSICAL_GRADPI) == "CLASSICAL_GRADPI");
  CHECK_THROWS_AS(parse_theorem("T9"), std::invalid_argument);
  CHECK(norm_tag("u3", 8) == "L8_u3");
  CHECK(norm_tag("b", inf) == "Linf_b");
  CHECK(norm_tag("grad_u3", 2.4) == "L2.4_grad_u3");
  CriterionSpec s{Theorem::T1_1, {{8, 15}}, false};
  CHECK_THROWS_AS(validate_spec(s, 4), std::invalid_argument);
  s.pairs = {{8, 16}};
  CHECK_NOTHROW(validate_spec(s, 4));
  CHECK_THROWS_AS(validate_spec(s, 3), std::invalid_argument);
  CHECK(accumulator_columns(s) == std::vector<std::string>{"acc_T1_1_u3", "acc_T1_1_u4"});
}

TEST_CASE("monitor accumulators") {
  SUBCASE("constant norms integrate exactly") {
    const CriterionSpec spec{Theorem::T1_1, {{8, 16}}, false};
    NormSeries s;
    MonitorStatus st;
    const double c = 1.3, dt = 0.05;
    for (int n = 0; n <= 20; ++n) {
      s.append(n * dt, {{"L8_u3", c}, {"L8_u4", c}});
      st = monitor_update(st, s, spec, dt);
    }
    REQUIRE(st.accumulators.size() == 2);
    for (double a : st.accumulators) CHECK(a == doctest::Approx(std::pow(c, 16) * 1.0).epsilon(1e-13));
    CHECK(st.verdict == Verdict::accumulator_finite);
  }
  SUBCASE("missing tag is a config error") {
    const CriterionSpec spec{Theorem::T1_1, {{8, 16}}, false};
    NormSeries s;
    s.append(0.0, {{"L8_u3", 1.0}});
    CHECK_THROWS_AS(monitor_update(MonitorStatus{}, s, spec, 0.1), ConfigError);
  }
  SUBCASE("zero solution") {
    SimConfig c;
    c.modes = 8;
    c.dt = 0.01;
    c.t_end = 0.05;
    c.criteria = {{Theorem::T1_1, {{8, 16}}, false}, {Theorem::T1_4, {{3, 8}}, false}};
    const SimResult r = simulate(c);
    for (const auto& st : r.statuses) {
      for (double a : st.accumulators) CHECK(a == 0.0);
      CHECK(st.verdict == Verdict::accumulator_finite);
    }
  }
  SUBCASE("pressure monitor on the embedded Taylor-Green flow") {
    SimConfig c;
    c.modes = 12;
    c.dt = 1e-3;
    c.t_end = 0.01;
    c.initial.preset = "taylor_green";
    c.criteria = {{Theorem::T1_5, {{2, 4}}, false}, {Theorem::CLASSICAL_GRADPI, {{2, 4}}, false}};
    const SimResult r = simulate(c);
    REQUIRE(r.statuses.size() == 2);
    for (double a : r.statuses[0].accumulators) CHECK(std::abs(a) <= 1e-20);
    CHECK(r.statuses[1].accumulators[0] > 0.0);
  }
}

TEST_CASE("bootstrap trigger on the diffusion preset") {
  SimConfig c;
  c.modes = 8;
  c.nu = 0.5;
  c.eta = 0.5;
  c.dt = 1e-3;
  c.t_end = 0.2;
  c.initial.preset = "diffusion";
  const SimResult r = simulate(c);
  const auto col = std::find(r.columns.begin(), r.columns.end(), "bootstrap") - r.columns.begin();
  // ||d1 u2||_{L^4}^2 = ||cos||_{L^4}^2 e^{-2 nu t}, and the same for b.
  const double cos4 = std::sqrt(3.0 / 8.0 * std::pow(2.0 * pi, 4));
  const double expect = 2.0 * cos4 * (1.0 - std::exp(-2.0 * 0.5 * 0.2)) / (2.0 * 0.5);
  CHECK(std::abs(r.rows.back()[static_cast<std::size_t>(col)] - expect) <= 1e-6 * expect);

  NormSeries empty;
  CHECK_THROWS_AS(bootstrap_trigger(empty, 4), std::invalid_argument);
}

TEST_CASE("Gronwall functionals") {
  const Grid g = make_grid(4, 12);
  const CriterionSpec t11{Theorem::T1_1, {{8, 16}}, false};
  const auto zero = gronwall_rhs(zero_state(g), t11);
  for (const auto& [k, v] : zero) CHECK(v == 0.0);

  MhdState s = zero_state(g);
  s.u = sample_function(g, 4, [](const double* x, int c) { return c == 0 ? std::sin(x[1]) : 0.0; });
  const auto r = gronwall_rhs(s, t11);
  CHECK(r.at("wy_rhs") == 0.0);
  CHECK(r.at("xz_rhs_u3") == 0.0);
  CHECK(r.at("X") > 0.0);
  CHECK(r.at("Z") > 0.0);

  MhdState q{synth_random_divfree(g, 4, 3), SpectralField(g, 4)};
  const CriterionSpec sup{Theorem::T1_1, {{inf, 4}}, false};
  const auto e = gronwall_rhs(q, sup);
  const double n3 = lp_norm(q.u.extract(2), inf);
  CHECK(e.at("wy_rhs_u3") == doctest::Approx(n3 * n3 * e.at("X")).epsilon(1e-14));
  CHECK_THROWS_AS(gronwall_rhs(q, CriterionSpec{Theorem::T1_5, {{2, 4}}, false}), std::invalid_argument);
}
