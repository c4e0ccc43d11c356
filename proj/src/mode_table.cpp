#include "tormhd/mode_table.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace tormhd {

const ModeTable& mode_table(const Grid& grid) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, double>, std::unique_ptr<ModeTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_tuple(grid.dim, grid.modes, grid.band_limit, grid.side_length);
  if (auto it = cache.find(key); it != cache.end()) return *it->second;

  auto table = std::make_unique<ModeTable>();
  const std::size_t n = grid.points();
  for (int d = 0; d < kMaxDim; ++d) table->kappa[d].assign(n, 0.0);
  table->kappa_squared.assign(n, 0.0);
  table->in_band.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Wavevector k = grid.wavevector(i);
    const PhysicalWavevector kap = grid.kappa(k);
    double k2 = 0.0;
    for (int d = 0; d < grid.dim; ++d) {
      table->kappa[d][i] = kap[d];
      k2 += kap[d] * kap[d];
    }
    table->kappa_squared[i] = k2;
    if (grid.in_band(k)) {
      table->in_band[i] = 1;
      table->band_indices.push_back(i);
    }
  }
  return *cache.emplace(key, std::move(table)).first->second;
}

}  // namespace tormhd
