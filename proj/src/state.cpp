#include "tormhd/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tormhd/mode_table.hpp"
#include "tormhd/multiplier.hpp"

namespace tormhd {

MhdState zero_state(const Grid& grid, double nu, double eta) {
  return MhdState{SpectralField(grid, grid.dim), SpectralField(grid, grid.dim), 0.0, nu, eta};
}

void validate_state(const MhdState& s) {
  const Grid& g = s.u.grid();
  if (s.u.components() != g.dim || s.b.components() != g.dim)
    throw std::invalid_argument("u and b need dim components");
  if (!(s.b.grid() == g)) throw std::invalid_argument("u and b must share one grid");
  if (!(s.nu >= 0.0) || !(s.eta >= 0.0)) throw std::invalid_argument("nu and eta must be non-negative");
}

double relative_divergence(const MhdState& s) {
  const ModeTable& t = mode_table(s.grid());
  double scale = 0.0;
  for (const SpectralField* f : {&s.u, &s.b})
    for (int c = 0; c < f->components(); ++c) {
      const auto v = f->component(c);
      for (std::size_t i = 0; i < v.size(); ++i)
        scale = std::max(scale, std::sqrt(t.kappa_squared[i]) * std::abs(v[i]));
    }
  if (scale == 0.0) return 0.0;
  return std::max(max_divergence(s.u), max_divergence(s.b)) / scale;
}

}  // namespace tormhd
