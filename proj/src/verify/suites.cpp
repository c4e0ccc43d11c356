#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "tormhd/field_ops.hpp"
#include "tormhd/grid.hpp"
#include "tormhd/multiplier.hpp"
#include "tormhd/verify.hpp"

namespace tormhd {

namespace {

// Appends the values of `part` to `into`, keeping the name and threshold of
// the first report.
void merge(VerificationReport& into, const VerificationReport& part) {
  if (into.name.empty()) {
    into.name = part.name;
    into.kind = part.kind;
    into.threshold = part.threshold;
  }
  into.values.insert(into.values.end(), part.values.begin(), part.values.end());
  into.excluded += part.excluded;
}

std::uint64_t sample_seed(std::uint64_t seed, int i, int slot) {
  return seed * 7919u + static_cast<std::uint64_t>(i) * 4u + static_cast<std::uint64_t>(slot);
}

SpectralField gradient_of_random_scalar(const Grid& g, std::uint64_t seed) {
  return gradient(synth_random_divfree(g, 1, seed));
}

void identities(const SuiteOptions& o, std::vector<VerificationReport>& out) {
  const Grid g = o.aliased_grid ? make_debug_grid(4, 16, 7) : make_grid(4, 16);
  VerificationReport expansion, mixed, split, leibniz, p2;
  for (int i = 0; i < o.n; ++i) {
    const SpectralField u = synth_random_divfree(g, 4, sample_seed(o.seed, i, 0));
    const SpectralField b = synth_random_divfree(g, 4, sample_seed(o.seed, i, 1));
    merge(expansion, check_decomposition(u, b, DecompositionMode::expansion));
    merge(mixed, check_decomposition(u, b, DecompositionMode::mixed_terms));
    merge(split, check_nonlinear_split(u));
    merge(leibniz, VerificationReport{"leibniz.s2", "identity",
                                      {leibniz_residual(u.extract(0), b.extract(1))}, 0, 1e-11, ""});
    merge(p2, VerificationReport{"dissipative.p2", "identity",
                                 {dissipative_identity(u.extract(2), 2.0).residual}, 0, 1e-11, ""});
  }
  out.push_back(expansion);
  out.push_back(mixed);
  out.push_back(split);
  out.push_back(leibniz);
  out.push_back(p2);

  const SpectralField sine = sample_function(g, 1, [](const double* x, int) { return std::sin(x[0]); });
  // -int Delta f f^3 = 3 int f^2 |grad f|^2 = 3 (2 pi)^4 / 8 for f = sin x1.
  const DissipativeSides sides = dissipative_identity(sine, 4.0);
  const double exact = 3.0 * std::pow(2.0 * std::numbers::pi, 4) / 8.0;
  out.push_back(VerificationReport{"dissipative.sin_p4", "identity",
                                   {relative_residual(sides.lhs, exact), relative_residual(sides.rhs, exact)}, 0, 1e-6,
                                   "both sides against the closed form"});
  if (o.aliased_grid) return;

  // Negative controls: each identity must visibly break when its hypothesis does.
  VerificationReport gradient_control{"control.gradient_contaminated", "control", {}, 0, 1e-3,
                                      "u + grad phi is not divergence-free"};
  const Grid aliased = make_debug_grid(4, 16, 7);
  VerificationReport alias_control{"control.aliased_grid", "control", {}, 0, 1e-10, "3K >= M on a 16^4 grid with K = 7"};
  for (int i = 0; i < std::min(o.n, 3); ++i) {
    const SpectralField u = synth_random_divfree(g, 4, sample_seed(o.seed, i, 2));
    const SpectralField b = synth_random_divfree(g, 4, sample_seed(o.seed, i, 3));
    const SpectralField dirty = u + gradient_of_random_scalar(g, sample_seed(o.seed, i, 2) + 1);
    const DecompositionTerms t = decomposition_terms(dirty, b, false, false);
    gradient_control.values.push_back(std::max(t.residuals.at("diagonal_substitution"), t.residuals.at("pair_cross")));
    const SpectralField ua = synth_random_divfree(aliased, 4, sample_seed(o.seed, i, 2));
    const SpectralField ba = synth_random_divfree(aliased, 4, sample_seed(o.seed, i, 3));
    alias_control.values.push_back(check_decomposition(ua, ba, DecompositionMode::expansion).max());
  }
  out.push_back(gradient_control);
  out.push_back(alias_control);
}

void inequalities(const SuiteOptions& o, std::vector<VerificationReport>& out) {
  out.push_back(elementary_sweep(o.seed, std::max(1000, 50 * o.n)));

  const Grid g16 = make_grid(4, 16);
  VerificationReport troisi = check_troisi(g16, o.seed, o.n);
  troisi.note = "empirical constant: max ratio over the ensemble";
  out.push_back(troisi);
  out.push_back(VerificationReport{"troisi.dilation", "identity",
                                   {troisi_dilation_residual(make_grid(4, 32), 0.4)}, 0, 1e-5,
                                   "ratio invariant under x1 -> x1 / 2"});

  out.push_back(check_commutator(g16, o.seed, o.n, 2.5));

  std::vector<double> coarse;
  VerificationReport p3 = check_dissipative_identity(g16, o.seed, std::max(1, o.n / 4), 3.0, &coarse);
  const double coarse_max = coarse.empty() ? 0.0 : *std::max_element(coarse.begin(), coarse.end());
  char note[96];
  std::snprintf(note, sizeof note, "max residual of the coarse rule %.3g", coarse_max);
  p3.note = note;
  out.push_back(p3);

  VerificationReport amp, grad;
  for (int i = 0; i < o.n; ++i) {
    const SpectralField u = synth_random_divfree(g16, 4, sample_seed(o.seed, i, 0));
    const SpectralField b = synth_random_divfree(g16, 4, sample_seed(o.seed, i, 1));
    const DecompositionTerms t = decomposition_terms(u, b, true, true);
    VerificationReport a{"decomposition.amplitude_bound", "inequality", {}, 0, NAN, ""};
    VerificationReport c{"decomposition.gradient_bound", "inequality", {}, 0, NAN, ""};
    if (t.rhs_amplitude > 0.0) a.values.push_back(std::abs(t.lhs) / t.rhs_amplitude);
    else a.excluded = 1;
    if (t.rhs_gradient > 0.0) c.values.push_back(std::abs(t.lhs) / t.rhs_gradient);
    else c.excluded = 1;
    merge(amp, a);
    merge(grad, c);
  }
  out.push_back(amp);
  out.push_back(grad);
}

void scaling(const SuiteOptions& o, std::vector<VerificationReport>& out) {
  const struct {
    int dim, modes, lambda;
  } cases[] = {{2, 16, 2}, {2, 16, 3}, {4, 8, 2}, {4, 8, 3}};
  for (const auto& c : cases) {
    const Grid g = make_grid(c.dim, c.modes);
    VerificationReport r;
    for (int i = 0; i < std::max(1, std::min(o.n, 4)); ++i) {
      MhdState s{synth_random_divfree(g, c.dim, sample_seed(o.seed, i, 0)),
                 synth_random_divfree(g, c.dim, sample_seed(o.seed, i, 1)), 0.0, 0.05, 0.02};
      merge(r, check_scaling(s, c.lambda));
    }
    out.push_back(r);
  }
}

}  // namespace

std::vector<VerificationReport> run_suite(const std::string& suite, const SuiteOptions& options) {
  if (options.n < 1) throw std::invalid_argument("sample count must be >= 1");
  std::vector<VerificationReport> out;
  const bool all = suite == "all";
  if (!all && suite != "identities" && suite != "inequalities" && suite != "scaling")
    throw std::invalid_argument("unknown suite " + suite);
  if (all || suite == "identities") identities(options, out);
  if (options.aliased_grid) return out;
  if (all || suite == "inequalities") inequalities(options, out);
  if (all || suite == "scaling") scaling(options, out);
  return out;
}

bool suite_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed(); });
}

}  // namespace tormhd
