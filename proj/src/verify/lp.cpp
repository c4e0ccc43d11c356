#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sampling.hpp"
#include "tormhd/field_ops.hpp"
#include "tormhd/grid.hpp"
#include "tormhd/multiplier.hpp"
#include "tormhd/norms.hpp"
#include "tormhd/transform.hpp"
#include "tormhd/verify.hpp"

namespace tormhd {

namespace {

double wpow(double x, double e) { return x == 0.0 ? 0.0 : std::pow(std::abs(x), e); }

double sides_residual(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0.0 ? std::abs(a - b) / s : 0.0;
}

bool even_integer(double p) { return std::isfinite(p) && p == std::round(p) && static_cast<long>(p) % 2 == 0; }

DissipativeSides exact_sides(const SpectralField& f, double p) {
  const Grid& g = f.grid();
  const int points = lp_quadrature_points(g, p);
  const detail::Sampler s(g, points);
  const RealBuffer v = s.value(f, 0);
  const RealBuffer lap = s.value(apply_multiplier(f, laplacian()), 0);
  RealBuffer w(v.size()), grad2(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = std::pow(v[i], p - 2.0);
  for (int a = 0; a < g.dim; ++a) {
    const RealBuffer da = s.d(f, 0, a);
    for (std::size_t i = 0; i < v.size(); ++i) grad2[i] += da[i] * da[i];
  }
  DissipativeSides out;
  out.lhs = -s.integral(lap, w, v);
  out.rhs = (p - 1.0) * s.integral(w, grad2);
  out.residual = sides_residual(out.lhs, out.rhs);
  return out;
}

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> x, w;
  explicit GaussLegendre(int n) : x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) {
      double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = z;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0);
        const double dz = p1 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[static_cast<std::size_t>(i)] = z;
      w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

// Evaluates the band-K coefficient tensor of a (d)-variate trigonometric
// polynomial on a uniform grid of `points` per axis by contracting one axis
// at a time. coeffs has shape (2K+1)^d with wavenumber k stored at k + K.
std::vector<Complex> evaluate_tensor(std::vector<Complex> coeffs, int d, int band, int points, double kappa,
                                     double side_length) {
  const int width = 2 * band + 1;
  std::vector<Complex> basis(static_cast<std::size_t>(points) * width);
  for (int j = 0; j < points; ++j) {
    const double y = sample_coordinate(side_length, points, j);
    for (int k = -band; k <= band; ++k)
      basis[static_cast<std::size_t>(j) * width + (k + band)] = std::polar(1.0, kappa * k * y);
  }
  // Axis 0 is contracted each round and the new sample axis appended last.
  std::vector<int> shape(static_cast<std::size_t>(d), width);
  for (int round = 0; round < d; ++round) {
    std::size_t rest = 1;
    for (int a = 1; a < d; ++a) rest *= static_cast<std::size_t>(shape[static_cast<std::size_t>(a)]);
    const std::size_t n0 = static_cast<std::size_t>(shape[0]);
    std::vector<Complex> next(rest * static_cast<std::size_t>(points));
    for (std::size_t r = 0; r < rest; ++r)
      for (int j = 0; j < points; ++j) {
        Complex s{};
        const Complex* b = &basis[static_cast<std::size_t>(j) * width];
        for (std::size_t k = 0; k < n0; ++k) s += b[k] * coeffs[k * rest + r];
        next[r * static_cast<std::size_t>(points) + static_cast<std::size_t>(j)] = s;
      }
    coeffs = std::move(next);
    std::rotate(shape.begin(), shape.begin() + 1, shape.end());
    shape.back() = points;
  }
  return coeffs;
}

// Line coefficients c_k(y), k = 0..K, of scalar field `f` along `axis` at
// every sample y of the remaining axes. Layout: [k][y].
std::vector<std::vector<Complex>> line_coefficients(const SpectralField& f, int axis, int points) {
  const Grid& g = f.grid();
  const int band = g.band_limit;
  const int width = 2 * band + 1;
  const int d = g.dim - 1;
  std::size_t cells = 1;
  for (int a = 0; a < d; ++a) cells *= static_cast<std::size_t>(width);
  std::vector<std::vector<Complex>> out(static_cast<std::size_t>(band + 1));
  const auto data = f.component(0);
  for (int k1 = 0; k1 <= band; ++k1) {
    std::vector<Complex> c(cells);
    for (std::size_t cell = 0; cell < cells; ++cell) {
      Wavevector k{0, 0, 0, 0};
      k[axis] = k1;
      std::size_t r = cell;
      for (int a = d; a >= 1; --a) {
        k[a <= axis ? a - 1 : a] = static_cast<int>(r % static_cast<std::size_t>(width)) - band;
        r /= static_cast<std::size_t>(width);
      }
      c[cell] = g.in_band(k) ? data[g.flat_index(k)] : Complex{};
    }
    out[static_cast<std::size_t>(k1)] = evaluate_tensor(std::move(c), d, band, points, g.kappa_unit(), g.side_length);
  }
  return out;
}

// Real trigonometric polynomial sum_{|k| <= K} c_k e^{i kappa k x} with
// c_{-k} = conj(c_k), held by its non-negative half.
struct LinePoly {
  std::vector<Complex> c;
  double kappa = 1.0;

  double value(double x) const {
    double s = c[0].real();
    const Complex e = std::polar(1.0, kappa * x);
    Complex z = e;
    for (std::size_t k = 1; k < c.size(); ++k, z *= e) s += 2.0 * (c[k] * z).real();
    return s;
  }
  double slope(double x) const {
    double s = 0.0;
    const Complex e = std::polar(1.0, kappa * x);
    Complex z = e;
    for (std::size_t k = 1; k < c.size(); ++k, z *= e) s += 2.0 * kappa * static_cast<double>(k) * (c[k] * z * Complex(0.0, 1.0)).real();
    return s;
  }
};

double refine_root(const LinePoly& f, double a, double b, double fa) {
  double lo = a, hi = b, flo = fa;
  double x = 0.5 * (a + b);
  for (int it = 0; it < 100; ++it) {
    const double fx = f.value(x);
    if (fx == 0.0) return x;
    if ((fx < 0.0) == (flo < 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
    }
    const double d = f.slope(x);
    double nx = d != 0.0 ? x - fx / d : 0.5 * (lo + hi);
    if (!(nx > lo && nx < hi)) nx = 0.5 * (lo + hi);
    if (std::abs(nx - x) <= 1e-15 * (1.0 + std::abs(x)) || hi - lo <= 1e-15 * (1.0 + std::abs(x))) return nx;
    x = nx;
  }
  return x;
}

// Sums the axis-a terms -int d_a^2 f |f|^(p-2) f and int |f|^(p-2) (d_a f)^2
// line by line along axis a, so each pair is related by a 1D integration by
// parts that the line rule resolves.
DissipativeSides line_sides(const SpectralField& f, double p, int cross_points, int line_points) {
  const Grid& g = f.grid();
  const double kappa = g.kappa_unit();
  const double L = g.side_length;
  const int band = g.band_limit;
  const GaussLegendre gl(line_points);
  const int scan = std::max(64, 16 * band);
  const double max_piece = L / 8.0;
  // Near a simple zero the integrands behave like |x - x0|^(p-2); grading the
  // nodes by t^grade makes them smooth enough for Gauss-Legendre.
  const int grade = std::clamp(static_cast<int>(std::ceil(4.0 / (p - 1.0))), 1, 16);

  double lhs = 0.0, rhs = 0.0;
  LinePoly fl, curv;
  fl.c.resize(static_cast<std::size_t>(band + 1));
  curv.c.resize(static_cast<std::size_t>(band + 1));
  fl.kappa = curv.kappa = kappa;
  std::vector<double> roots;
  for (int axis = 0; axis < g.dim; ++axis) {
    const auto lf = line_coefficients(f, axis, cross_points);
    const auto lc = line_coefficients(apply_multiplier(f, partial_laplacian({axis})), axis, cross_points);
    const std::size_t cells = lf[0].size();
    for (std::size_t y = 0; y < cells; ++y) {
      for (int k = 0; k <= band; ++k) {
        fl.c[static_cast<std::size_t>(k)] = lf[static_cast<std::size_t>(k)][y];
        curv.c[static_cast<std::size_t>(k)] = lc[static_cast<std::size_t>(k)][y];
      }
      roots.clear();
      double x0 = 0.0, f0 = fl.value(0.0);
      for (int j = 1; j <= scan; ++j) {
        const double x1 = L * j / scan;
        const double f1 = fl.value(x1);
        if (f0 == 0.0) roots.push_back(x0);
        else if ((f0 < 0.0) != (f1 < 0.0) && f1 != 0.0) roots.push_back(refine_root(fl, x0, x1, f0));
        x0 = x1;
        f0 = f1;
      }
      std::vector<std::pair<double, double>> pieces;
      if (roots.empty()) {
        pieces.push_back({0.0, L});
      } else {
        for (std::size_t r = 0; r + 1 < roots.size(); ++r) pieces.push_back({roots[r], roots[r + 1]});
        pieces.push_back({roots.back(), roots.front() + L});
      }
      // Integrates over [lo, lo + h], graded towards lo (toward > 0) or
      // towards lo + h (toward < 0) by x = end + h t^grade.
      const auto integrate = [&](double lo, double h, int toward) {
        for (std::size_t q = 0; q < gl.x.size(); ++q) {
          const double t = 0.5 * (gl.x[q] + 1.0);
          double x = lo + h * t, wq = 0.5 * h * gl.w[q];
          if (toward != 0) {
            const double tm = std::pow(t, grade);
            x = toward > 0 ? lo + h * tm : lo + h - h * tm;
            wq *= grade * tm / t;
          }
          const double v = fl.value(x);
          const double w = wpow(v, p - 2.0);
          const double s = fl.slope(x);
          lhs -= wq * curv.value(x) * w * v;
          rhs += wq * w * s * s;
        }
      };
      const bool rooted = !roots.empty();
      for (const auto& [a, b] : pieces) {
        const int parts = std::max(1, static_cast<int>(std::ceil((b - a) / max_piece)));
        const double h = (b - a) / parts;
        for (int s = 0; s < parts; ++s) {
          const double lo = a + s * h;
          const bool at_lo = rooted && s == 0, at_hi = rooted && s == parts - 1;
          if (at_lo && at_hi) {
            integrate(lo, 0.5 * h, 1);
            integrate(lo + 0.5 * h, 0.5 * h, -1);
          } else {
            integrate(lo, h, at_lo ? 1 : at_hi ? -1 : 0);
          }
        }
      }
    }
  }
  double cell = 1.0;
  for (int a = 1; a < g.dim; ++a) cell *= L / cross_points;
  DissipativeSides out;
  out.lhs = lhs * cell;
  out.rhs = (p - 1.0) * rhs * cell;
  out.residual = sides_residual(out.lhs, out.rhs);
  return out;
}

}  // namespace

DissipativeSides dissipative_identity(const SpectralField& f, double p, int cross_points, int line_points) {
  if (f.components() != 1) throw std::invalid_argument("expected a scalar field");
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("exponent must be finite and > 1");
  if (even_integer(p)) return exact_sides(f, p);
  if (cross_points <= 0) cross_points = 3 * f.grid().modes;
  if (line_points < 2) throw std::invalid_argument("line rule needs at least 2 points");
  return line_sides(f, p, cross_points, line_points);
}

VerificationReport check_dissipative_identity(const Grid& grid, std::uint64_t seed, int n, double p,
                                              std::vector<double>* coarse) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  VerificationReport r;
  char buf[64];
  std::snprintf(buf, sizeof buf, "dissipative.p%g_M%d", p, grid.modes);
  r.name = buf;
  r.kind = "identity";
  r.threshold = 1e-6;
  if (coarse) coarse->clear();
  for (int i = 0; i < n; ++i) {
    const SpectralField f = synth_random_divfree(grid, 1, seed + static_cast<std::uint64_t>(i));
    r.values.push_back(dissipative_identity(f, p).residual);
    if (coarse && !even_integer(p)) coarse->push_back(dissipative_identity(f, p, 2 * grid.modes, 8).residual);
  }
  return r;
}

PressureBalance lp_pressure_balance(const std::vector<PressureFrame>& frames, int axis, double p, double q) {
  if (frames.size() < 5) throw std::invalid_argument("need at least five frames");
  if (!(p > 2.0) || !std::isfinite(p)) throw std::invalid_argument("exponent p must exceed 2");
  if (!(q > 2.0 * p / (p + 1.0) && q < p)) throw std::invalid_argument("exponent q outside (2p/(p+1), p)");
  const Grid& g = frames.front().state.grid();
  if (axis < 0 || axis >= g.dim) throw std::invalid_argument("axis out of range");
  const double h = frames[1].state.t - frames[0].state.t;
  if (!(h > 0.0)) throw std::invalid_argument("frames must advance in time");
  for (std::size_t n = 1; n < frames.size(); ++n) {
    const double dt = frames[n].state.t - frames[n - 1].state.t;
    if (std::abs(dt - h) > 1e-9 * h) throw std::invalid_argument("frames are not uniformly spaced");
    if (frames[n].state.magnetic()) throw std::invalid_argument("pressure balance needs b = 0");
  }
  if (frames.front().state.magnetic()) throw std::invalid_argument("pressure balance needs b = 0");

  const detail::Sampler s(g, 2 * g.modes);
  const double holder_exp = (p - 1.0) * q / (q - 1.0);
  std::vector<double> lp(frames.size());
  PressureBalance out;
  for (std::size_t n = 0; n < frames.size(); ++n) {
    const RealBuffer v = s.value(frames[n].state.u, axis);
    double acc = 0.0;
    for (double x : v) acc += wpow(x, p);
    lp[n] = acc * s.weight();
  }
  for (std::size_t n = 2; n + 2 < frames.size(); ++n) {
    const MhdState& st = frames[n].state;
    const RealBuffer v = s.value(st.u, axis);
    RealBuffer w(v.size()), grad2(v.size(), 0.0), conv(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = wpow(v[i], p - 2.0) * v[i];
    for (int a = 0; a < g.dim; ++a) {
      const RealBuffer da = s.d(st.u, axis, a);
      const RealBuffer ua = s.value(st.u, a);
      for (std::size_t i = 0; i < v.size(); ++i) {
        grad2[i] += da[i] * da[i];
        conv[i] += ua[i] * da[i];
      }
    }
    RealBuffer wd(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) wd[i] = wpow(v[i], p - 2.0) * grad2[i];
    const RealBuffer dpi = s.d(frames[n].pressure, 0, axis);

    const double rate = (lp[n - 2] - 8.0 * lp[n - 1] + 8.0 * lp[n + 1] - lp[n + 2]) / (12.0 * h) / p;
    const double diss = st.nu * (p - 1.0) * s.integral(wd);
    const double pres = s.integral(dpi, w);
    const double cv = s.integral(conv, w);
    const double scale = std::max({std::abs(rate), std::abs(diss), std::abs(pres), std::abs(cv)});
    out.times.push_back(st.t);
    out.rate.push_back(rate);
    out.dissipation.push_back(diss);
    out.pressure.push_back(pres);
    out.convection.push_back(cv);
    out.residual.push_back(scale > 0.0 ? std::abs(rate + diss + pres + cv) / scale : 0.0);
    const SpectralField ui = st.u.extract(axis);
    out.holder.push_back(lp_norm(derivative(frames[n].pressure, axis), q, 2 * g.modes) *
                         std::pow(lp_norm(ui, holder_exp, 2 * g.modes), p - 1.0));
  }
  return out;
}

VerificationReport check_lp_pressure_balance(const std::vector<PressureFrame>& frames, int axis, double p, double q,
                                             double threshold) {
  const PressureBalance b = lp_pressure_balance(frames, axis, p, q);
  VerificationReport r;
  char buf[64];
  std::snprintf(buf, sizeof buf, "pressure_balance.p%g_q%g_axis%d", p, q, axis + 1);
  r.name = buf;
  r.kind = "identity";
  r.threshold = threshold;
  r.values = b.residual;
  std::size_t violations = 0;
  for (std::size_t n = 0; n < b.holder.size(); ++n)
    if (std::abs(b.pressure[n]) > b.holder[n] * (1.0 + 1e-12)) ++violations;
  r.note = violations == 0 ? "hoelder majorant dominates at every frame"
                           : std::to_string(violations) + " frames where the hoelder majorant is exceeded";
  if (violations > 0) r.values.push_back(INFINITY);
  return r;
}

}  // namespace tormhd
