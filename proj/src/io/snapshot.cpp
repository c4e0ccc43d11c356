#include "tormhd/io/snapshot.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <vector>

#include "tormhd/error.hpp"
#include "tormhd/field_ops.hpp"

namespace tormhd::io {

static_assert(std::endian::native == std::endian::little, "snapshot I/O assumes a little-endian host");

namespace {

constexpr char kMagic[4] = {'S', 'P', 'C', '4'};

template <class T>
void put(std::vector<char>& buf, T v) {
  const char* p = reinterpret_cast<const char*>(&v);
  buf.insert(buf.end(), p, p + sizeof(T));
}

template <class T>
T get(const char*& p) {
  T v;
  std::memcpy(&v, p, sizeof(T));
  p += sizeof(T);
  return v;
}

}  // namespace

void write_field_snapshot(const std::string& path, const SpectralField& field, double time, double nu, double eta) {
  const Grid& g = field.grid();
  std::vector<char> head;
  head.insert(head.end(), kMagic, kMagic + 4);
  put<std::uint32_t>(head, kSnapshotVersion);
  put<std::uint32_t>(head, static_cast<std::uint32_t>(g.dim));
  put<std::uint32_t>(head, static_cast<std::uint32_t>(g.modes));
  put<std::uint32_t>(head, static_cast<std::uint32_t>(field.components()));
  put<double>(head, g.side_length);
  put<double>(head, time);
  put<double>(head, nu);
  put<double>(head, eta);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out.write(head.data(), static_cast<std::streamsize>(head.size()));
  const auto all = field.all();
  out.write(reinterpret_cast<const char*>(field.raw()), static_cast<std::streamsize>(all.size() * sizeof(Complex)));
  out.close();
  if (!out) throw IoError(path, "write failed");
}

void write_snapshot(const std::string& path, const MhdState& state) {
  write_field_snapshot(path, stack({&state.u, &state.b}), state.t, state.nu, state.eta);
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) throw IoError(path, "cannot open for reading");
  const auto size = static_cast<std::size_t>(in.tellg());
  in.seekg(0);
  std::vector<char> buf(size);
  if (!in.read(buf.data(), static_cast<std::streamsize>(size))) throw IoError(path, "read failed");
  if (size < kSnapshotHeaderBytes) throw CorruptSnapshotError(path, "file shorter than the snapshot header");
  if (std::memcmp(buf.data(), kMagic, 4) != 0) throw CorruptSnapshotError(path, "bad magic bytes");
  const char* p = buf.data() + 4;
  const auto version = get<std::uint32_t>(p);
  if (version != kSnapshotVersion) throw CorruptSnapshotError(path, "unsupported version " + std::to_string(version));
  const auto dim = get<std::uint32_t>(p);
  const auto modes = get<std::uint32_t>(p);
  const auto count = get<std::uint32_t>(p);
  const double side = get<double>(p);
  Snapshot s;
  s.time = get<double>(p);
  s.nu = get<double>(p);
  s.eta = get<double>(p);
  Grid grid;
  try {
    grid = make_grid(static_cast<int>(dim), static_cast<int>(modes), side);
  } catch (const std::invalid_argument& e) {
    throw CorruptSnapshotError(path, std::string("invalid grid: ") + e.what());
  }
  if (count < 1 || count > 2 * kMaxDim) throw CorruptSnapshotError(path, "invalid component count");
  if (!std::isfinite(s.time) || !std::isfinite(s.nu) || !std::isfinite(s.eta))
    throw CorruptSnapshotError(path, "non-finite header values");
  const std::size_t payload = static_cast<std::size_t>(count) * grid.points() * sizeof(Complex);
  if (size != kSnapshotHeaderBytes + payload)
    throw CorruptSnapshotError(path, "payload size " + std::to_string(size - kSnapshotHeaderBytes) + " does not match " +
                                         std::to_string(payload));
  s.field = SpectralField(grid, static_cast<int>(count));
  std::memcpy(s.field.raw(), p, payload);
  for (const auto& z : s.field.all())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw CorruptSnapshotError(path, "non-finite coefficient");
  const double scale = std::max(1.0, s.field.max_abs());
  if (s.field.hermitian_defect() > 1e-12 * scale) throw CorruptSnapshotError(path, "coefficients are not Hermitian");
  if (s.field.out_of_band_max() > 0.0) throw CorruptSnapshotError(path, "coefficients outside the band limit");
  return s;
}

MhdState state_from_snapshot(const Snapshot& s, const std::string& path) {
  const int dim = s.field.grid().dim;
  if (s.field.components() != 2 * dim)
    throw CorruptSnapshotError(path, "expected " + std::to_string(2 * dim) + " components, found " +
                                         std::to_string(s.field.components()));
  MhdState st;
  st.u = s.field.extract(0, dim);
  st.b = s.field.extract(dim, dim);
  st.t = s.time;
  st.nu = s.nu;
  st.eta = s.eta;
  return st;
}

}  // namespace tormhd::io
