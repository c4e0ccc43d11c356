#include "tormhd/transform.hpp"

#include <fftw3.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "tormhd/parallel.hpp"

namespace tormhd {

namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  std::size_t real_size = 0;
  std::size_t half_size = 0;
  ~PlanPair() {
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

// One in-band mode: its flat index in the coefficient cube and its position
// in the r2c half spectrum of the sample grid (of -k when conj is set).
struct BandEntry {
  std::size_t flat;
  std::size_t half;
  bool conj;
};

using PlanKey = std::tuple<int, int, int>;
using BandKey = std::tuple<int, int, int, int>;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<PlanKey, std::unique_ptr<PlanPair>>& plan_cache() {
  static std::map<PlanKey, std::unique_ptr<PlanPair>> cache;
  return cache;
}

std::map<BandKey, std::shared_ptr<const std::vector<BandEntry>>>& band_cache() {
  static std::map<BandKey, std::shared_ptr<const std::vector<BandEntry>>> cache;
  return cache;
}

void init_fftw_threads() {
  static const bool ok = fftw_init_threads() != 0;
  (void)ok;
}

const PlanPair& plans(int dim, int points) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  const int nthreads = thread_count();
  auto& cache = plan_cache();
  const PlanKey key{dim, points, nthreads};
  if (auto it = cache.find(key); it != cache.end()) return *it->second;

  init_fftw_threads();
  fftw_plan_with_nthreads(nthreads);
  auto pair = std::make_unique<PlanPair>();
  int n[4];
  for (int d = 0; d < dim; ++d) n[d] = points;
  pair->real_size = sample_count(dim, points);
  pair->half_size = pair->real_size / static_cast<std::size_t>(points) * static_cast<std::size_t>(points / 2 + 1);
  double* in = fftw_alloc_real(pair->real_size);
  fftw_complex* out = fftw_alloc_complex(pair->half_size);
  pair->forward = fftw_plan_dft_r2c(dim, n, in, out, FFTW_ESTIMATE);
  pair->backward = fftw_plan_dft_c2r(dim, n, out, in, FFTW_ESTIMATE);
  fftw_free(in);
  fftw_free(out);
  if (!pair->forward || !pair->backward) throw std::runtime_error("FFTW plan creation failed");
  return *cache.emplace(key, std::move(pair)).first->second;
}

std::shared_ptr<const std::vector<BandEntry>> band_map(const Grid& grid, int points) {
  std::lock_guard<std::mutex> lock(cache_mutex());
  const BandKey key{grid.dim, grid.modes, grid.band_limit, points};
  auto& cache = band_cache();
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  auto entries = std::make_shared<std::vector<BandEntry>>();
  const int half_last = points / 2 + 1;
  Wavevector k{};
  const std::size_t total = grid.points();
  for (std::size_t flat = 0; flat < total; ++flat) {
    k = grid.wavevector(flat);
    if (!grid.in_band(k)) continue;
    const bool conj = k[grid.dim - 1] < 0;
    std::size_t h = 0;
    for (int d = 0; d < grid.dim; ++d) {
      const int kd = conj ? -k[d] : k[d];
      const int idx = kd >= 0 ? kd : kd + points;
      h = (d == grid.dim - 1) ? h * static_cast<std::size_t>(half_last) + static_cast<std::size_t>(idx)
                              : h * static_cast<std::size_t>(points) + static_cast<std::size_t>(idx);
    }
    entries->push_back({flat, h, conj});
  }
  cache.emplace(key, entries);
  return entries;
}

void check_points(const Grid& grid, int points) {
  if (points <= 2 * grid.band_limit || points % 2 != 0)
    throw std::invalid_argument("sample grid must be even and exceed twice the band limit");
}

thread_local ComplexBuffer tl_half;

}  // namespace

std::size_t sample_count(int dim, int points) {
  std::size_t n = 1;
  for (int d = 0; d < dim; ++d) n *= static_cast<std::size_t>(points);
  return n;
}

void to_physical(const SpectralField& f, int c, int points, RealBuffer& out) {
  const Grid& grid = f.grid();
  check_points(grid, points);
  const PlanPair& p = plans(grid.dim, points);
  const auto map = band_map(grid, points);
  tl_half.assign(p.half_size, Complex{});
  const auto coeffs = f.component(c);
  for (const BandEntry& e : *map)
    if (!e.conj) tl_half[e.half] = coeffs[e.flat];
  out.resize(p.real_size);
  fftw_execute_dft_c2r(p.backward, reinterpret_cast<fftw_complex*>(tl_half.data()), out.data());
}

RealBuffer to_physical(const SpectralField& f, int c, int points) {
  RealBuffer out;
  to_physical(f, c, points, out);
  return out;
}

void from_physical(const double* values, int points, SpectralField& f, int c) {
  const Grid& grid = f.grid();
  check_points(grid, points);
  const PlanPair& p = plans(grid.dim, points);
  const auto map = band_map(grid, points);
  tl_half.resize(p.half_size);
  // Out-of-place r2c leaves its input intact, so aligned inputs are used directly.
  if (reinterpret_cast<std::uintptr_t>(values) % AlignedAllocator<double>::kAlignment == 0) {
    fftw_execute_dft_r2c(p.forward, const_cast<double*>(values),
                         reinterpret_cast<fftw_complex*>(tl_half.data()));
  } else {
    RealBuffer in(values, values + p.real_size);
    fftw_execute_dft_r2c(p.forward, in.data(), reinterpret_cast<fftw_complex*>(tl_half.data()));
  }
  const double scale = 1.0 / static_cast<double>(p.real_size);
  auto coeffs = f.component(c);
  std::fill(coeffs.begin(), coeffs.end(), Complex{});
  for (const BandEntry& e : *map) {
    const Complex z = tl_half[e.half] * scale;
    coeffs[e.flat] = e.conj ? std::conj(z) : z;
  }
}

void clear_transform_cache() {
  std::lock_guard<std::mutex> lock(cache_mutex());
  plan_cache().clear();
  band_cache().clear();
}

}  // namespace tormhd
