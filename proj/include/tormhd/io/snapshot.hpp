#pragma once

#include <cstdint>
#include <string>

#include "tormhd/state.hpp"

namespace tormhd::io {

/// Binary snapshot layout (little endian):
///   "SPC4", u32 version, u32 dim, u32 M, u32 component count,
///   f64 side_length, f64 time, f64 nu, f64 eta,
///   then (re, im) f64 pairs over the full M^dim cube in flat FFT order,
///   one block per component.
/// State snapshots hold the u components followed by the b components;
/// pressure snapshots hold one component.
inline constexpr std::uint32_t kSnapshotVersion = 1;
inline constexpr std::size_t kSnapshotHeaderBytes = 4 + 4 * 4 + 4 * 8;

struct Snapshot {
  SpectralField field;
  double time = 0.0;
  double nu = 0.0;
  double eta = 0.0;
};

/// Throws IoError with the path on failure.
void write_snapshot(const std::string& path, const MhdState& state);
void write_field_snapshot(const std::string& path, const SpectralField& field, double time, double nu, double eta);

/// Throws CorruptSnapshotError for bad magic, version, size, grid or
/// non-finite or non-real payloads, and IoError when the file cannot be read.
Snapshot read_snapshot(const std::string& path);

/// Splits a 2*dim-component snapshot into a state.
MhdState state_from_snapshot(const Snapshot& s, const std::string& path);

}  // namespace tormhd::io
