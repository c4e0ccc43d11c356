#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tormhd/series.hpp"
#include "tormhd/state.hpp"

namespace tormhd {

enum class Theorem { T1_1, T1_2, T1_3, T1_4, T1_5, CLASSICAL_U, CLASSICAL_GRADU, CLASSICAL_GRADPI };

std::string to_string(Theorem t);
/// Throws std::invalid_argument for unknown names.
Theorem parse_theorem(const std::string& name);

struct ExponentPair {
  double p = 2.0;
  double r = 2.0;
};

/// One theorem's hypothesis: exponent pairs for its monitored quantities.
/// A single pair applies to every quantity.
struct CriterionSpec {
  Theorem theorem = Theorem::T1_1;
  std::vector<ExponentPair> pairs;
  bool smallness = false;

  ExponentPair pair_for(std::size_t quantity) const;
};

/// Monitored quantities, named with 1-based logical axis indices:
/// T1_1 {u3, u4}, T1_2 {grad_u3, grad_u4}, T1_3 {u3, u4, b},
/// T1_4 {grad_u3, grad_u4, grad_b}, T1_5 {d3pi, d4pi}, CLASSICAL_U {u},
/// CLASSICAL_GRADU {grad_u}, CLASSICAL_GRADPI {grad_pi}.
std::vector<std::string> monitored_quantities(Theorem t);

/// Whether (p, r) lies in the theorem's admissibility region. inf is
/// represented by infinity and 1/inf = 0. With `smallness`, only the endpoint
/// sup-norm clause is admitted (p = 6 for T1_1/T1_3, p = 12/5 for
/// T1_2/T1_4, r = inf). Classical regions use N = dim. Throws for p or r
/// below 1.
bool admissible(Theorem t, double p, double r, bool smallness = false, int dim = 4);

/// Checks every pair of the spec; throws std::invalid_argument naming the
/// offending pair.
void validate_spec(const CriterionSpec& spec, int dim);

/// Series tag of ||q||_{L^p}, e.g. "L8_u3", "Linf_b", "L2.4_grad_u3".
std::string norm_tag(const std::string& quantity, double p);
/// Number formatting used in tags: integers plainly, inf as "inf".
std::string format_exponent(double v);

/// ||q||_{L^p} of a monitored quantity. Logical axis i maps to
/// permutation[i-1]; `pressure` is required for d3pi, d4pi and grad_pi.
double quantity_norm(const MhdState& state, const std::string& quantity, double p,
                     const std::array<int, 4>& permutation, const SpectralField* pressure = nullptr);

enum class Verdict { tracking, accumulator_finite, diverged };
std::string to_string(Verdict v);

struct MonitorStatus {
  std::vector<double> accumulators;  ///< per quantity: int ||q||^r or sup ||q||
  bool finite = true;
  double smallness_value = 0.0;      ///< running sum of sup_t ||q||^e at the endpoint
  Verdict verdict = Verdict::tracking;
  std::vector<double> smallness_sups;
};

/// Accumulator column names, "acc_T1_1_u3" (finite r) or "sup_T1_1_u3".
std::vector<std::string> accumulator_columns(const CriterionSpec& spec);

/// Advances the spec's accumulators with the latest record of `series`.
/// Throws ConfigError naming a missing tag.
MonitorStatus monitor_update(const MonitorStatus& status, NormSeries& series, const CriterionSpec& spec,
                             double dt);

/// int_0^t ||grad u||^2_{L^N} + ||grad b||^2_{L^N} by the trapezoid rule over
/// the records. Throws when the "L{N}_grad_u" / "L{N}_grad_b" tags are missing.
double bootstrap_trigger(const NormSeries& series, int dim);

/// Both sides of the Gronwall inequalities behind a theorem, evaluated at
/// one state. Keys:
///  W, Y, X, Z           the left-hand quantities
///  wy_rhs               integrand on the right of the sup W + int Y bound
///  xz_rhs               integrand on the right of the sup X + int Z bound
///  wy_rhs_<q>, xz_rhs_<q>   per-quantity contributions
/// Only T1_1..T1_4 have such functionals; the others throw.
std::map<std::string, double> gronwall_rhs(const MhdState& state, const CriterionSpec& spec,
                                           const std::array<int, 4>& permutation = {0, 1, 2, 3});

bool has_gronwall(Theorem t);

}  // namespace tormhd
