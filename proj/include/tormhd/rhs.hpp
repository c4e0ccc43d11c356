#pragma once

#include <string>
#include <utility>

#include "tormhd/state.hpp"

namespace tormhd {

/// Sample grid for the quadratic products of the right-hand side.
///  - native: the M-point grid, alias-free for products truncated to K
///    because 3K < M;
///  - three_halves: zero padding to the next even size >= 3M/2.
enum class Dealias { native, three_halves };

Dealias parse_dealias(const std::string& name);
std::string to_string(Dealias d);
int dealias_points(const Grid& grid, Dealias mode);

/// Nonlinear parts only:
///   du = -P[(u.grad)u - (b.grad)b],  db = -(u.grad)b + (b.grad)u,
/// evaluated in divergence form from the products u_i u_j - b_i b_j and
/// u_j b_i - u_i b_j. db is projected as well. When b is identically zero the
/// magnetic products are skipped and db is exactly zero.
void nonlinear_rhs(const SpectralField& u, const SpectralField& b, SpectralField& du, SpectralField& db,
                   Dealias mode = Dealias::native);

/// Full right-hand side of the MHD system, including nu Delta u and eta Delta b.
std::pair<SpectralField, SpectralField> mhd_rhs(const MhdState& state, Dealias mode = Dealias::native);

/// Pressure with pihat(k) = -kappa_i kappa_j That_ij(k) / |kappa|^2 for
/// T = u u^T - b b^T, and pihat(0) = 0.
SpectralField pressure_solve(const SpectralField& u, const SpectralField& b, Dealias mode = Dealias::native);

}  // namespace tormhd
