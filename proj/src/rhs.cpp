#include "tormhd/rhs.hpp"

#include <stdexcept>
#include <vector>

#include "tormhd/field_ops.hpp"
#include "tormhd/grid.hpp"
#include "tormhd/mode_table.hpp"
#include "tormhd/simd/kernels.hpp"
#include "tormhd/transform.hpp"

namespace tormhd {

Dealias parse_dealias(const std::string& name) {
  if (name == "native") return Dealias::native;
  if (name == "three_halves") return Dealias::three_halves;
  throw std::invalid_argument("unknown dealias mode " + name);
}

std::string to_string(Dealias d) { return d == Dealias::native ? "native" : "three_halves"; }

int dealias_points(const Grid& grid, Dealias mode) {
  if (mode == Dealias::native) return grid.modes;
  const int p = (3 * grid.modes + 1) / 2;
  return p % 2 == 0 ? p : p + 1;
}

namespace {

struct Samples {
  std::vector<RealBuffer> u;
  std::vector<RealBuffer> b;
};

Samples sample_fields(const SpectralField& u, const SpectralField* b, int points) {
  Samples s;
  const int dim = u.grid().dim;
  s.u.resize(dim);
  for (int i = 0; i < dim; ++i) to_physical(u, i, points, s.u[i]);
  if (b) {
    s.b.resize(dim);
    for (int i = 0; i < dim; ++i) to_physical(*b, i, points, s.b[i]);
  }
  return s;
}

int sym_index(int i, int j, int dim) {
  if (i > j) std::swap(i, j);
  return i * dim - i * (i - 1) / 2 + (j - i);
}

// That_ij for i <= j, packed by sym_index.
SpectralField stress(const Grid& grid, const Samples& s, int points) {
  const int dim = grid.dim;
  const auto& k = simd::kernels();
  const std::size_t n = s.u[0].size();
  SpectralField t(grid, dim * (dim + 1) / 2);
  RealBuffer prod(n);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      if (s.b.empty()) k.mul(s.u[i].data(), s.u[j].data(), prod.data(), n);
      else k.mul_sub(s.u[i].data(), s.u[j].data(), s.b[i].data(), s.b[j].data(), prod.data(), n);
      from_physical(prod.data(), points, t, sym_index(i, j, dim));
    }
  return t;
}

// Ahat_ij of A_ij = u_j b_i - u_i b_j for i < j, packed row by row.
SpectralField induction(const Grid& grid, const Samples& s, int points) {
  const int dim = grid.dim;
  const auto& k = simd::kernels();
  const std::size_t n = s.u[0].size();
  SpectralField a(grid, dim * (dim - 1) / 2);
  RealBuffer prod(n);
  int c = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j, ++c) {
      k.mul_sub(s.u[j].data(), s.b[i].data(), s.u[i].data(), s.b[j].data(), prod.data(), n);
      from_physical(prod.data(), points, a, c);
    }
  return a;
}

}  // namespace

void nonlinear_rhs(const SpectralField& u, const SpectralField& b, SpectralField& du, SpectralField& db,
                   Dealias mode) {
  const Grid& grid = u.grid();
  const int dim = grid.dim;
  const int points = dealias_points(grid, mode);
  const bool magnetic = b.max_abs() > 0.0;
  const Samples s = sample_fields(u, magnetic ? &b : nullptr, points);
  const SpectralField t = stress(grid, s, points);
  const ModeTable& table = mode_table(grid);

  du = SpectralField(grid, dim);
  db = SpectralField(grid, dim);
  for (std::size_t i : table.band_indices) {
    for (int a = 0; a < dim; ++a) {
      Complex acc{};
      for (int j = 0; j < dim; ++j) acc += table.kappa[j][i] * t.component(sym_index(a, j, dim))[i];
      du.component(a)[i] = Complex(acc.imag(), -acc.real());  // -i * acc
    }
  }
  leray_project_in_place(du);
  if (!magnetic) return;

  const SpectralField am = induction(grid, s, points);
  std::vector<std::vector<int>> slot(dim, std::vector<int>(dim, -1));
  int c = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) slot[i][j] = c++;
  for (std::size_t i : table.band_indices) {
    for (int a = 0; a < dim; ++a) {
      Complex acc{};
      for (int j = 0; j < dim; ++j) {
        if (j == a) continue;
        const Complex v = a < j ? am.component(slot[a][j])[i] : -am.component(slot[j][a])[i];
        acc += table.kappa[j][i] * v;
      }
      db.component(a)[i] = Complex(acc.imag(), -acc.real());
    }
  }
  leray_project_in_place(db);
}

std::pair<SpectralField, SpectralField> mhd_rhs(const MhdState& state, Dealias mode) {
  validate_state(state);
  SpectralField du, db;
  nonlinear_rhs(state.u, state.b, du, db, mode);
  const ModeTable& t = mode_table(state.grid());
  for (int c = 0; c < state.grid().dim; ++c) {
    auto a = du.component(c);
    auto p = db.component(c);
    const auto u = state.u.component(c);
    const auto b = state.b.component(c);
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] -= state.nu * t.kappa_squared[i] * u[i];
      p[i] -= state.eta * t.kappa_squared[i] * b[i];
    }
  }
  return {std::move(du), std::move(db)};
}

SpectralField pressure_solve(const SpectralField& u, const SpectralField& b, Dealias mode) {
  const Grid& grid = u.grid();
  const int dim = grid.dim;
  const int points = dealias_points(grid, mode);
  const Samples s = sample_fields(u, b.max_abs() > 0.0 ? &b : nullptr, points);
  const SpectralField t = stress(grid, s, points);
  const ModeTable& table = mode_table(grid);
  SpectralField pi(grid, 1);
  auto out = pi.component(0);
  for (std::size_t i : table.band_indices) {
    const double k2 = table.kappa_squared[i];
    if (k2 == 0.0) continue;
    Complex acc{};
    for (int a = 0; a < dim; ++a)
      for (int j = 0; j < dim; ++j) acc += table.kappa[a][i] * table.kappa[j][i] * t.component(sym_index(a, j, dim))[i];
    out[i] = -acc / k2;
  }
  return pi;
}

}  // namespace tormhd
