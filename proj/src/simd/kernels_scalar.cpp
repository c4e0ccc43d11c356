#include "kernels_detail.hpp"

#include <cmath>

namespace tormhd::simd::detail {

void mul_scalar(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void mul_sub_scalar(const double* a, const double* b, const double* c, const double* d,
                    double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i] - c[i] * d[i];
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void square_accumulate_scalar(const double* a, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += a[i] * a[i];
}

void scale_complex_scalar(const double* symbol, double* z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    z[2 * i] *= symbol[i];
    z[2 * i + 1] *= symbol[i];
  }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double dot3_scalar(const double* a, const double* b, const double* c, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i] * c[i];
  return s;
}

double max_abs_scalar(const double* a, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::fmax(m, std::fabs(a[i]));
  return m;
}

double sum_abs_pow_scalar(const double* a, std::size_t n, double p) {
  const int ip = integer_exponent(p);
  double s = 0.0;
  if (ip > 0) {
    for (std::size_t i = 0; i < n; ++i) s += ipow(std::fabs(a[i]), ip);
  } else {
    for (std::size_t i = 0; i < n; ++i) s += std::pow(std::fabs(a[i]), p);
  }
  return s;
}

}  // namespace tormhd::simd::detail
