#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "tormhd/state.hpp"

namespace tormhd {

/// Outcome of one identity or inequality check over an ensemble.
///
/// kind "identity": values are relative residuals and the check passes when
/// max <= threshold. kind "control": a negative control that passes when
/// max > threshold, i.e. the underlying identity visibly breaks. kind
/// "inequality": values are LHS/RHS ratios; the check passes when every ratio
/// is finite and non-negative (and, with a threshold, when max <= threshold).
struct VerificationReport {
  std::string name;
  std::string kind = "identity";
  std::vector<double> values;
  int excluded = 0;  ///< degenerate samples left out of `values`
  double threshold = std::numeric_limits<double>::quiet_NaN();
  std::string note;

  std::size_t n() const { return values.size() + static_cast<std::size_t>(excluded); }
  double max() const;
  double median() const;
  bool passed() const;
};

/// Structured text block per report: check, kind, n, excluded, max, median,
/// threshold, result (and note when present).
std::string format_reports(const std::vector<VerificationReport>& reports);

/// |lhs - rhs| / max(|lhs|, |rhs|, floor).
double relative_residual(double lhs, double rhs, double floor = 0.0);

// ---------------------------------------------------------------------------
// Elementary inequality (a + b)^p <= 2^p (a^p + b^p).

/// Throws std::invalid_argument for negative inputs.
bool check_elementary(double a, double b, double p);
/// Random sweep a, b in [0, 1000], p in [0, 8]; the value per sample is the
/// ratio of the two sides.
VerificationReport elementary_sweep(std::uint64_t seed, int n);

// ---------------------------------------------------------------------------
// Decomposition of the convective pairings against partial Laplacians.

/// Integration-by-parts decomposition of the trilinear pairings
///   int (u.grad)u . Delta_{1,2} u,   int (u.grad)u . Delta_{3,4} u
/// and of the three mixed u, b terms against Delta_{1,2}. Every exact step
/// is reported as a residual:
///   expansion            pairing = -sum_{i,j; k=1,2} int d_k u_i d_i u_j d_k u_j
///   expansion_split, expansion_regroup   the same sum split by index ranges
///   u34_by_parts         the u3, u4 parts moved onto u_j d_i(.) and u_i d_k(.)
///   eight_terms          the i,j,k in {1,2} block written as I1..I8
///   diagonal_substitution, diagonal_combine, diagonal_reduced,
///   diagonal_by_parts    I1 + I8 rewritten with div u = 0, then by parts
///   pair_d2u1, pair_d1u2, pair_cross     I2 + I6, I3 + I7, I4 + I5
///   mixed_expansion, mixed_by_parts      the u, b terms
///   lap34_expansion, lap34_split, lap34_by_parts   the Delta_{3,4} pairing
/// `lhs` is the sum of the four Delta_{1,2} pairings of the MHD energy
/// estimate. `rhs_amplitude` is
///   int (|u3| + |u4|) |grad u| |grad grad_{1,2} u|
///     + |b| (|grad u| + |grad b|) (|grad grad_{1,2} u| + |grad grad_{1,2} b|)
/// and `rhs_gradient` is
///   int (|grad u3| + |grad u4|) |grad_{1,2} u| |grad u| + |grad b| |grad_{1,2} b| |grad u|.
/// Cubic integrals use the collocation grid, exact when 3K < M; the two
/// right-hand sides use the 2M grid.
struct DecompositionTerms {
  std::map<std::string, double> residuals;
  double lhs = 0.0;
  double rhs_amplitude = 0.0;
  double rhs_gradient = 0.0;
};

/// Requires dim 4. With `require_divfree`, throws std::invalid_argument
/// when u or b has relative divergence above 1e-10.
DecompositionTerms decomposition_terms(const SpectralField& u, const SpectralField& b, bool require_divfree = true,
                                       bool bounds = true);

enum class DecompositionMode { expansion, mixed_terms, amplitude_bound, gradient_bound };

/// expansion: worst residual of the Delta_{1,2} chain up to the pair
/// combinations; mixed_terms: first equality of the u, b terms; the bound
/// modes report |lhs| / rhs.
VerificationReport check_decomposition(const SpectralField& u, const SpectralField& b, DecompositionMode mode);

/// Pointwise split (u.grad)f = (u1 d1 + u2 d2) f + (u3 d3 + u4 d4) f for
/// every component f of u, and the integral split of the Delta_{3,4}
/// pairing. Values: {pointwise residual, integral residual}.
VerificationReport check_nonlinear_split(const SpectralField& u);

// ---------------------------------------------------------------------------
// Functional inequalities with empirical constants.

/// Smooth windowed test field: a Gaussian window centred in the torus times
/// a random band-1 trigonometric polynomial, sampled and truncated to the
/// grid band. Deterministic in (seed, index); width in [0.75, 0.95].
SpectralField troisi_field(const Grid& grid, std::uint64_t seed, int index);

/// ||f||_{L^4} / prod_i ||d_i f||_{L^2}^{1/4} on a 4D field; NaN when some
/// d_i f vanishes.
double troisi_ratio(const SpectralField& f);

/// Relative difference of the ratio between an isotropic Gaussian bump of
/// the given width (in units of L / 2 pi) and its dilate f(x1 / 2, x2, x3, x4).
double troisi_dilation_residual(const Grid& grid, double width);

/// n windowed samples on `grid`; degenerate samples are excluded.
VerificationReport check_troisi(const Grid& grid, std::uint64_t seed, int n);

/// ||Lambda^s(fg) - f Lambda^s g||_{L^2} over
/// ||grad f||_inf ||Lambda^(s-1) g||_2 + ||Lambda^s f||_2 ||g||_inf.
/// The products are formed exactly on the 2M grid. Throws for s <= 0.
double commutator_ratio(const SpectralField& f, const SpectralField& g, double s);

/// Relative L^2 residual of Lambda^2(fg) - f Lambda^2 g = -(Delta f) g - 2 grad f . grad g.
double leibniz_residual(const SpectralField& f, const SpectralField& g);

/// n random scalar pairs (band 3) on `grid`.
VerificationReport check_commutator(const Grid& grid, std::uint64_t seed, int n, double s);

// ---------------------------------------------------------------------------
// L^p estimates of a single velocity component.

/// Both sides of -int Delta f |f|^(p-2) f = (p-1) int |f|^(p-2) |grad f|^2
/// for a scalar f. Even integer p uses an exact grid. Other p use a
/// line-adapted rule: the axis-a terms are integrated along axis-a lines,
/// split at the zeros of f and graded towards them, with `line_points`
/// Gauss-Legendre nodes per piece; the remaining axes use the trapezoid
/// rule with `cross_points` samples (0: 3M). Throws for p <= 1.
struct DissipativeSides {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};
DissipativeSides dissipative_identity(const SpectralField& f, double p, int cross_points = 0, int line_points = 24);

/// Random smooth scalars; the value per sample is the residual at the
/// default resolution. `coarse` receives the residuals of a coarser rule
/// (2M cross samples, 8 line nodes) when non-null.
VerificationReport check_dissipative_identity(const Grid& grid, std::uint64_t seed, int n, double p,
                                              std::vector<double>* coarse = nullptr);

/// One stored frame of a Navier-Stokes run.
struct PressureFrame {
  MhdState state;
  SpectralField pressure;
};

/// Terms of the L^p balance of component `axis` (0-based) at interior frames
///   (1/p) d/dt ||u_i||_p^p + nu (4(p-1)/p^2) ||grad |u_i|^(p/2)||^2 + int d_i pi |u_i|^(p-2) u_i = 0,
/// with a fourth-order centred difference over uniformly spaced frames.
struct PressureBalance {
  std::vector<double> times;
  std::vector<double> rate;         ///< (1/p) d/dt ||u_i||^p
  std::vector<double> dissipation;  ///< nu (p-1) int |u_i|^(p-2) |grad u_i|^2
  std::vector<double> pressure;     ///< int d_i pi |u_i|^(p-2) u_i
  std::vector<double> convection;   ///< int (u.grad u_i) |u_i|^(p-2) u_i, zero in the continuum
  std::vector<double> residual;     ///< |sum| / max |term|
  std::vector<double> holder;       ///< ||d_i pi||_q ||u_i||^(p-1)_{(p-1)q/(q-1)}
};

/// Throws std::invalid_argument unless p > 2, q in (2p/(p+1), p), the
/// frames are uniformly spaced and at least five, and b = 0.
PressureBalance lp_pressure_balance(const std::vector<PressureFrame>& frames, int axis, double p, double q);

/// Report of the balance residuals; note records whether the Hoelder
/// majorant dominated on every sample. Fails if it did not.
VerificationReport check_lp_pressure_balance(const std::vector<PressureFrame>& frames, int axis, double p, double q,
                                             double threshold = 1e-4);

// ---------------------------------------------------------------------------
// Scaling symmetry u -> lambda u(lambda x).

/// Residuals of the L^2 law ||u_l||^2 + ||b_l||^2 = lambda^(2-N) (...) and of
/// the right-hand side equivariance rhs(u_l, b_l) = lambda^3 rhs(u, b)(lambda x),
/// checked on the shrunken torus and on the nested grid of the original
/// torus. Values: {norm law, rhs on shrunken torus, rhs on nested grid}.
VerificationReport check_scaling(const MhdState& state, int lambda);

// ---------------------------------------------------------------------------
// Suites as run by the command-line front end.

struct SuiteOptions {
  std::uint64_t seed = 42;
  int n = 20;
  bool aliased_grid = false;  ///< run the identities on a grid that violates 3K < M
};

std::vector<VerificationReport> run_suite(const std::string& suite, const SuiteOptions& options);
bool suite_passed(const std::vector<VerificationReport>& reports);

}  // namespace tormhd
