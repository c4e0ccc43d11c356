#include "tormhd/presets.hpp"

#include <cmath>
#include <stdexcept>

#include "tormhd/field_ops.hpp"
#include "tormhd/norms.hpp"

namespace tormhd {

namespace {

const char* const kNames[] = {"zero", "diffusion", "taylor_green", "random_divfree", nullptr};

SpectralField rms_normalized(SpectralField f, double amplitude) {
  const double rms = l2_norm(f) / std::sqrt(f.grid().volume());
  if (rms > 0.0) f *= amplitude / rms;
  return f;
}

}  // namespace

const char* const* preset_names() { return kNames; }

MhdState make_initial_state(const Grid& grid, const InitialCondition& ic, double nu, double eta) {
  MhdState s = zero_state(grid, nu, eta);
  const double w = grid.kappa_unit();
  const int dim = grid.dim;
  if (ic.preset == "zero") return s;
  if (ic.preset == "diffusion") {
    const int bc = dim >= 3 ? 2 : 1;
    s.u = sample_function(grid, dim, [&](const double* x, int c) {
      return c == 1 ? ic.amplitude_u * std::sin(w * x[0]) : 0.0;
    });
    s.b = sample_function(grid, dim, [&](const double* x, int c) {
      return c == bc ? ic.amplitude_b * std::sin(w * x[0]) : 0.0;
    });
    return s;
  }
  if (ic.preset == "taylor_green") {
    s.u = sample_function(grid, dim, [&](const double* x, int c) {
      if (c == 0) return ic.amplitude_u * std::sin(w * x[0]) * std::cos(w * x[1]);
      if (c == 1) return -ic.amplitude_u * std::cos(w * x[0]) * std::sin(w * x[1]);
      return 0.0;
    });
    return s;
  }
  if (ic.preset == "random_divfree") {
    s.u = rms_normalized(synth_random_divfree(grid, dim, ic.seed, ic.decay, ic.band), ic.amplitude_u);
    if (ic.amplitude_b != 0.0)
      s.b = rms_normalized(synth_random_divfree(grid, dim, ic.seed + 1, ic.decay, ic.band), ic.amplitude_b);
    return s;
  }
  throw std::invalid_argument("unknown preset " + ic.preset);
}

}  // namespace tormhd
