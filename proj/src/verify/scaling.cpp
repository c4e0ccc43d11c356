#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "tormhd/field_ops.hpp"
#include "tormhd/grid.hpp"
#include "tormhd/norms.hpp"
#include "tormhd/rhs.hpp"
#include "tormhd/verify.hpp"

namespace tormhd {

namespace {

double field_residual(const SpectralField& a, const SpectralField& b) {
  const double s = std::max(l2_norm(a), l2_norm(b));
  return s > 0.0 ? l2_norm(a - b) / s : 0.0;
}

double rhs_residual(const MhdState& scaled, const MhdState& base, double lambda,
                    const std::function<SpectralField(const SpectralField&)>& map) {
  const auto [du, db] = mhd_rhs(scaled);
  const auto [bu, bb] = mhd_rhs(base);
  // map gives lambda f(lambda x); the rhs picks up lambda^3 overall.
  SpectralField eu = map(bu), eb = map(bb);
  eu *= lambda * lambda;
  eb *= lambda * lambda;
  return std::max(field_residual(du, eu), field_residual(db, eb));
}

}  // namespace

VerificationReport check_scaling(const MhdState& state, int lambda) {
  if (lambda < 1) throw std::invalid_argument("scaling factor must be a positive integer");
  validate_state(state);
  const Grid& g = state.grid();
  const double l = lambda;
  VerificationReport r;
  r.name = "scaling.lambda" + std::to_string(lambda) + "_dim" + std::to_string(g.dim);
  r.threshold = 1e-11;

  MhdState shrunk = state;
  shrunk.u = rescale_field(state.u, lambda);
  shrunk.b = rescale_field(state.b, lambda);
  const double e0 = std::pow(l2_norm(state.u), 2) + std::pow(l2_norm(state.b), 2);
  const double e1 = std::pow(l2_norm(shrunk.u), 2) + std::pow(l2_norm(shrunk.b), 2);
  r.values.push_back(relative_residual(e1, std::pow(l, 2.0 - g.dim) * e0));
  r.values.push_back(rhs_residual(shrunk, state, l, [lambda](const SpectralField& f) { return rescale_field(f, lambda); }));

  const int modes = lambda * g.modes;
  MhdState nested = state;
  nested.u = embed_periodic(state.u, lambda, modes);
  nested.b = embed_periodic(state.b, lambda, modes);
  r.values.push_back(rhs_residual(nested, state, l, [lambda, modes](const SpectralField& f) { return embed_periodic(f, lambda, modes); }));
  return r;
}

}  // namespace tormhd
