#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace tormhd::simd {

/// Data-parallel inner loops used by the transforms, the right-hand side and
/// the quadrature code. Every table entry has a scalar reference version; the
/// AVX2 table is chosen at runtime when the CPU supports AVX2 and FMA.
///
/// Element-wise kernels agree with the scalar reference to within one
/// rounding per fused operation; reductions reorder sums across four lanes.
struct KernelTable {
  std::string_view name;

  /// out[i] = a[i] * b[i]
  void (*mul)(const double* a, const double* b, double* out, std::size_t n);
  /// out[i] = a[i] * b[i] - c[i] * d[i]
  void (*mul_sub)(const double* a, const double* b, const double* c, const double* d,
                  double* out, std::size_t n);
  /// y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  /// acc[i] += a[i] * a[i]
  void (*square_accumulate)(const double* a, double* acc, std::size_t n);
  /// z[i] *= symbol[i] for interleaved complex z of length n.
  void (*scale_complex)(const double* symbol, double* z, std::size_t n);
  /// sum a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);
  /// sum a[i] * b[i] * c[i]
  double (*dot3)(const double* a, const double* b, const double* c, std::size_t n);
  /// max |a[i]|
  double (*max_abs)(const double* a, std::size_t n);
  /// sum |a[i]|^p, p > 0
  double (*sum_abs_pow)(const double* a, std::size_t n, double p);
};

const KernelTable& scalar_kernels();

/// Null when the build or the CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels();

/// Active table. Selection honours TORMHD_SIMD=scalar|avx2 when set.
const KernelTable& kernels();

/// Force a table by name ("scalar", "avx2", "auto"); false if unavailable.
bool select_kernels(std::string_view name);

/// Names of the tables usable on this machine.
std::vector<std::string_view> available_kernels();

}  // namespace tormhd::simd
