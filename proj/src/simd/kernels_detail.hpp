#pragma once

#include <cmath>
#include <cstddef>

namespace tormhd::simd::detail {

/// p as a small positive integer, or 0 when p needs std::pow.
inline int integer_exponent(double p) {
  if (p >= 1.0 && p <= 16.0 && std::floor(p) == p) return static_cast<int>(p);
  return 0;
}

/// x^e by binary exponentiation for 1 <= e <= 16.
inline double ipow(double x, int e) {
  double r = 1.0;
  double b = x;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

void mul_scalar(const double* a, const double* b, double* out, std::size_t n);
void mul_sub_scalar(const double* a, const double* b, const double* c, const double* d,
                    double* out, std::size_t n);
void axpy_scalar(double alpha, const double* x, double* y, std::size_t n);
void square_accumulate_scalar(const double* a, double* acc, std::size_t n);
void scale_complex_scalar(const double* symbol, double* z, std::size_t n);
double dot_scalar(const double* a, const double* b, std::size_t n);
double dot3_scalar(const double* a, const double* b, const double* c, std::size_t n);
double max_abs_scalar(const double* a, std::size_t n);
double sum_abs_pow_scalar(const double* a, std::size_t n, double p);

#if defined(TORMHD_HAVE_AVX2)
void mul_avx2(const double* a, const double* b, double* out, std::size_t n);
void mul_sub_avx2(const double* a, const double* b, const double* c, const double* d,
                  double* out, std::size_t n);
void axpy_avx2(double alpha, const double* x, double* y, std::size_t n);
void square_accumulate_avx2(const double* a, double* acc, std::size_t n);
void scale_complex_avx2(const double* symbol, double* z, std::size_t n);
double dot_avx2(const double* a, const double* b, std::size_t n);
double dot3_avx2(const double* a, const double* b, const double* c, std::size_t n);
double max_abs_avx2(const double* a, std::size_t n);
double sum_abs_pow_avx2(const double* a, std::size_t n, double p);
#endif

}  // namespace tormhd::simd::detail
