#include <cmath>
#include <stdexcept>

#include "sampling.hpp"
#include "tormhd/field_ops.hpp"
#include "tormhd/multiplier.hpp"
#include "tormhd/transform.hpp"
#include "tormhd/verify.hpp"

namespace tormhd {

using detail::Derivatives;
using detail::Sampler;

namespace {

// Residual floor relative to the cubic scale int (|grad u|^2 + |grad b|^2)^(3/2):
// sides that vanish identically (e.g. for 2D-embedded flows) then give
// rounding-level residuals instead of 0/0.
constexpr double kFloor = 1e-6;

RealBuffer sum(const RealBuffer& a, const RealBuffer& b) {
  RealBuffer r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Pointwise magnitudes on the refined grid for the bound right-hand sides.
struct Magnitudes {
  RealBuffer f2, g2, g12, h12;
  std::array<RealBuffer, 4> abs_v;   // |f_i|
  std::array<RealBuffer, 4> grad_i;  // |grad f_i|^2
};

Magnitudes magnitudes(const Sampler& s, const SpectralField& f) {
  const std::size_t n = s.size();
  Magnitudes m{RealBuffer(n, 0.0), RealBuffer(n, 0.0), RealBuffer(n, 0.0), RealBuffer(n, 0.0), {}, {}};
  for (int i = 0; i < 4; ++i) {
    m.abs_v[i] = s.value(f, i);
    m.grad_i[i] = RealBuffer(n, 0.0);
    for (std::size_t p = 0; p < n; ++p) {
      m.f2[p] += m.abs_v[i][p] * m.abs_v[i][p];
      m.abs_v[i][p] = std::fabs(m.abs_v[i][p]);
    }
    const SpectralField fi = f.extract(i);
    for (int k = 0; k < 4; ++k) {
      const SpectralField dk = derivative(fi, k);
      const RealBuffer d = to_physical(dk, 0, s.points());
      for (std::size_t p = 0; p < n; ++p) {
        const double q = d[p] * d[p];
        m.g2[p] += q;
        m.grad_i[i][p] += q;
        if (k < 2) m.g12[p] += q;
      }
      if (k >= 2) continue;
      for (int a = 0; a < 4; ++a) {
        const RealBuffer h = to_physical(derivative(dk, a), 0, s.points());
        for (std::size_t p = 0; p < n; ++p) m.h12[p] += h[p] * h[p];
      }
    }
  }
  return m;
}

void bounds(const SpectralField& u, const SpectralField& b, DecompositionTerms& out) {
  const Sampler s(u.grid(), 2 * u.grid().modes);
  const Magnitudes mu = magnitudes(s, u);
  const Magnitudes mb = magnitudes(s, b);
  double r_amp = 0.0;
  double r_grad = 0.0;
  for (std::size_t p = 0; p < s.size(); ++p) {
    const double gu = std::sqrt(mu.g2[p]);
    const double gb = std::sqrt(mb.g2[p]);
    const double hu = std::sqrt(mu.h12[p]);
    const double hb = std::sqrt(mb.h12[p]);
    r_amp += (mu.abs_v[2][p] + mu.abs_v[3][p]) * gu * hu + std::sqrt(mb.f2[p]) * (gu + gb) * (hu + hb);
    r_grad += (std::sqrt(mu.grad_i[2][p]) + std::sqrt(mu.grad_i[3][p])) * std::sqrt(mu.g12[p]) * gu +
           gb * std::sqrt(mb.g12[p]) * gu;
  }
  out.rhs_amplitude = s.weight() * r_amp;
  out.rhs_gradient = s.weight() * r_grad;
}

}  // namespace

DecompositionTerms decomposition_terms(const SpectralField& u, const SpectralField& b, bool require_divfree, bool with_bounds) {
  const Grid& g = u.grid();
  if (g.dim != 4) throw std::invalid_argument("the decomposition is stated on the 4-torus");
  if (u.components() != 4 || b.components() != 4 || !(b.grid() == g))
    throw std::invalid_argument("u and b must be 4-component fields on one grid");
  if (require_divfree) {
    const MhdState st{u, b};
    if (relative_divergence(st) > 1e-10) throw std::invalid_argument("u and b must be divergence-free");
  }

  const Sampler s(g, g.modes);
  const Derivatives U(s, u);
  const Derivatives B(s, b);
  const auto I = [&s](const RealBuffer& a, const RealBuffer& c, const RealBuffer& d) { return s.integral(a, c, d); };

  double scale = 0.0;
  {
    RealBuffer g2(s.size(), 0.0);
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k)
        for (std::size_t p = 0; p < s.size(); ++p) g2[p] += U.d[i][k][p] * U.d[i][k][p] + B.d[i][k][p] * B.d[i][k][p];
    for (std::size_t p = 0; p < s.size(); ++p) scale += g2[p] * std::sqrt(g2[p]);
    scale *= s.weight();
  }
  const double floor = kFloor * scale;
  DecompositionTerms out;
  const auto res = [&](const char* name, double l, double r) { out.residuals[name] = relative_residual(l, r, floor); };

  std::array<RealBuffer, 4> lap12u, lap34u, lap12b;
  for (int j = 0; j < 4; ++j) {
    lap12u[j] = sum(U.h(j, 0, 0), U.h(j, 1, 1));
    lap34u[j] = sum(U.h(j, 2, 2), U.h(j, 3, 3));
    lap12b[j] = sum(B.h(j, 0, 0), B.h(j, 1, 1));
  }

  // T[i][j][k] = int d_k u_i d_i u_j d_k u_j
  double T[4][4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) T[i][j][k] = I(U.d[i][k], U.d[j][i], U.d[j][k]);

  // Delta_{1,2} pairing.
  double lhs_lap12 = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) lhs_lap12 += I(U.v[i], U.d[j][i], lap12u[j]);
  double full = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 2; ++k) full -= T[i][j][k];
  double a_12 = 0.0, a1 = 0.0, a2 = 0.0, b34 = 0.0;
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) {
        a_12 -= T[i][j][k];
        (j < 2 ? a1 : a2) -= T[i][j][k];
      }
  for (int i = 2; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 2; ++k) b34 -= T[i][j][k];
  res("expansion", lhs_lap12, full);
  res("expansion_split", full, a_12 + b34);
  res("expansion_regroup", a_12 + b34, a1 + a2 + b34);

  double parts_u34 = 0.0;
  for (int j = 2; j < 4; ++j)
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        parts_u34 += I(U.v[j], U.h(i, i, k), U.d[j][k]) + I(U.v[j], U.d[i][k], U.h(j, i, k));
  for (int i = 2; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 2; ++k)
        parts_u34 += I(U.v[i], U.h(j, i, k), U.d[j][k]) + I(U.v[i], U.d[j][i], U.h(j, k, k));
  res("u34_by_parts", a2 + b34, parts_u34);

  const RealBuffer& d11 = U.d[0][0];  // d_1 u_1
  const RealBuffer& d21 = U.d[0][1];  // d_2 u_1
  const RealBuffer& d12 = U.d[1][0];  // d_1 u_2
  const RealBuffer& d22 = U.d[1][1];  // d_2 u_2
  const RealBuffer s34 = sum(U.d[2][2], U.d[3][3]);
  const double i1 = -I(d11, d11, d11);
  const double i2 = -I(d21, d11, d21);
  const double i3 = -I(d11, d12, d12);
  const double i4 = -I(d21, d12, d22);
  const double i5 = -I(d12, d21, d11);
  const double i6 = -I(d22, d21, d21);
  const double i7 = -I(d12, d22, d12);
  const double i8 = -I(d22, d22, d22);
  res("eight_terms", a1, i1 + i2 + i3 + i4 + i5 + i6 + i7 + i8);

  const double sq1_22 = I(d11, d11, d22);
  const double sq2_11 = I(d22, d22, d11);
  const double sq1_34 = I(d11, d11, s34);
  const double sq2_34 = I(d22, d22, s34);
  const double mix_34 = I(d11, d22, s34);
  res("diagonal_substitution", i1 + i8, sq1_22 + sq1_34 + sq2_11 + sq2_34);
  res("diagonal_combine", sq1_22 + sq2_11, -mix_34);
  res("diagonal_reduced", i1 + i8, -mix_34 + sq1_34 + sq2_34);
  double parts_diag = 0.0;
  for (int m = 2; m < 4; ++m) {
    parts_diag += I(U.v[m], U.h(0, 0, m), d22) + I(U.v[m], d11, U.h(1, 1, m));
    parts_diag -= 2.0 * I(U.v[m], d11, U.h(0, 0, m)) + 2.0 * I(U.v[m], d22, U.h(1, 1, m));
  }
  res("diagonal_by_parts", i1 + i8, parts_diag);
  res("pair_d2u1", i2 + i6, I(d21, d21, s34));
  res("pair_d1u2", i3 + i7, I(d12, d12, s34));
  res("pair_cross", i4 + i5, I(d21, d12, s34));

  // Mixed u, b terms.
  double lhs_mixed = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      lhs_mixed += I(U.v[i], B.d[j][i], lap12b[j]) - I(B.v[i], B.d[j][i], lap12u[j]) - I(B.v[i], U.d[j][i], lap12b[j]);
  double line1 = 0.0, line2 = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 2; ++k) {
        line1 += -I(U.d[i][k], B.d[j][i], B.d[j][k]) + I(B.d[i][k], B.d[j][i], U.d[j][k]) +
                 I(B.d[i][k], U.d[j][i], B.d[j][k]);
        line2 += I(U.d[i][k], B.v[j], B.h(j, i, k)) - I(B.d[i][k], B.v[j], U.h(j, i, k)) -
                 I(B.v[i], U.h(j, i, k), B.d[j][k]) - I(B.v[i], U.d[j][i], B.h(j, k, k));
      }
  res("mixed_expansion", lhs_mixed, line1);
  res("mixed_by_parts", line1, line2);

  // Delta_{3,4} pairing.
  double lhs_lap34 = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) lhs_lap34 += I(U.v[i], U.d[j][i], lap34u[j]);
  double full34 = 0.0, low = 0.0, high = 0.0, high_parts = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 2; k < 4; ++k) {
        full34 -= T[i][j][k];
        if (i < 2) {
          low -= T[i][j][k];
        } else {
          high -= T[i][j][k];
          high_parts += I(U.v[i], U.h(j, i, k), U.d[j][k]) + I(U.v[i], U.d[j][i], U.h(j, k, k));
        }
      }
  res("lap34_expansion", lhs_lap34, full34);
  res("lap34_split", full34, low + high);
  res("lap34_by_parts", low + high, low + high_parts);

  out.lhs = lhs_lap12 + lhs_mixed;
  if (with_bounds) bounds(u, b, out);
  return out;
}

VerificationReport check_decomposition(const SpectralField& u, const SpectralField& b, DecompositionMode mode) {
  VerificationReport r;
  const DecompositionTerms t = decomposition_terms(u, b, true, mode == DecompositionMode::amplitude_bound || mode == DecompositionMode::gradient_bound);
  const auto worst = [&](std::initializer_list<const char*> names) {
    double m = 0.0;
    for (const char* n : names) m = std::max(m, t.residuals.at(n));
    return m;
  };
  switch (mode) {
    case DecompositionMode::expansion:
      r.name = "decomposition.expansion";
      r.threshold = 1e-10;
      r.values = {worst({"expansion", "expansion_split", "expansion_regroup", "u34_by_parts", "eight_terms", "diagonal_substitution", "diagonal_combine", "diagonal_reduced", "diagonal_by_parts", "pair_d2u1",
                         "pair_d1u2", "pair_cross"})};
      break;
    case DecompositionMode::mixed_terms:
      r.name = "decomposition.mixed_terms";
      r.threshold = 1e-10;
      r.values = {t.residuals.at("mixed_expansion")};
      break;
    case DecompositionMode::amplitude_bound:
    case DecompositionMode::gradient_bound: {
      const bool amp = mode == DecompositionMode::amplitude_bound;
      r.name = amp ? "decomposition.amplitude_bound" : "decomposition.gradient_bound";
      r.kind = "inequality";
      const double rhs = amp ? t.rhs_amplitude : t.rhs_gradient;
      if (rhs > 0.0) r.values = {std::fabs(t.lhs) / rhs};
      else r.excluded = 1;
      break;
    }
  }
  return r;
}

VerificationReport check_nonlinear_split(const SpectralField& u) {
  const Grid& g = u.grid();
  if (g.dim != 4 || u.components() != 4) throw std::invalid_argument("the split is stated for 4D vector fields");
  const int points = g.modes;
  const std::size_t n = sample_count(4, points);
  std::array<RealBuffer, 4> uv;
  for (int i = 0; i < 4; ++i) uv[i] = to_physical(u, i, points);
  double worst = 0.0;
  for (int c = 0; c < 4; ++c) {
    const SpectralField f = u.extract(c);
    RealBuffer full(n, 0.0), low(n, 0.0), high(n, 0.0);
    for (int i = 0; i < 4; ++i) {
      const RealBuffer d = to_physical(derivative(f, i), 0, points);
      RealBuffer& part = i < 2 ? low : high;
      for (std::size_t p = 0; p < n; ++p) {
        full[p] += uv[i][p] * d[p];
        part[p] += uv[i][p] * d[p];
      }
    }
    SpectralField a(g, 1), lo(g, 1), hi(g, 1);
    from_physical(full.data(), points, a, 0);
    from_physical(low.data(), points, lo, 0);
    from_physical(high.data(), points, hi, 0);
    worst = std::max(worst, max_relative_difference(a, lo + hi));
  }
  const DecompositionTerms t = decomposition_terms(u, SpectralField(g, 4), true, false);
  VerificationReport r;
  r.name = "split.nonlinear";
  r.threshold = 1e-10;
  r.values = {worst, std::max({t.residuals.at("lap34_expansion"), t.residuals.at("lap34_split"), t.residuals.at("lap34_by_parts")})};
  return r;
}

}  // namespace tormhd
