// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include "kernels_detail.hpp"

#include <immintrin.h>

#include <cmath>

namespace tormhd::simd::detail {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(m, _mm_unpackhi_pd(m, m)));
}

inline __m256d vabs(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

inline __m256d vipow(__m256d x, int e) {
  __m256d r = _mm256_set1_pd(1.0);
  __m256d b = x;
  while (e > 0) {
    if (e & 1) r = _mm256_mul_pd(r, b);
    b = _mm256_mul_pd(b, b);
    e >>= 1;
  }
  return r;
}

}  // namespace

void mul_avx2(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

void mul_sub_avx2(const double* a, const double* b, const double* c, const double* d,
                  double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d cd = _mm256_mul_pd(_mm256_loadu_pd(c + i), _mm256_loadu_pd(d + i));
    _mm256_storeu_pd(out + i, _mm256_fmsub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), cd));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i] - c[i] * d[i];
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void square_accumulate_avx2(const double* a, double* acc, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a + i);
    _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(va, va, _mm256_loadu_pd(acc + i)));
  }
  for (; i < n; ++i) acc[i] += a[i] * a[i];
}

void scale_complex_avx2(const double* symbol, double* z, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    // (s0, s0, s1, s1) against (re0, im0, re1, im1).
    const __m128d s = _mm_loadu_pd(symbol + i);
    const __m256d ss = _mm256_permute4x64_pd(_mm256_castpd128_pd256(s), 0x50);
    _mm256_storeu_pd(z + 2 * i, _mm256_mul_pd(ss, _mm256_loadu_pd(z + 2 * i)));
  }
  for (; i < n; ++i) {
    z[2 * i] *= symbol[i];
    z[2 * i + 1] *= symbol[i];
  }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double dot3_avx2(const double* a, const double* b, const double* c, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d ab = _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
    acc = _mm256_fmadd_pd(ab, _mm256_loadu_pd(c + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i] * c[i];
  return s;
}

double max_abs_avx2(const double* a, std::size_t n) {
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) m = _mm256_max_pd(m, vabs(_mm256_loadu_pd(a + i)));
  double r = hmax(m);
  for (; i < n; ++i) r = std::fmax(r, std::fabs(a[i]));
  return r;
}

double sum_abs_pow_avx2(const double* a, std::size_t n, double p) {
  const int ip = integer_exponent(p);
  if (ip == 0) return sum_abs_pow_scalar(a, n, p);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, vipow(vabs(_mm256_loadu_pd(a + i)), ip));
  double s = hsum(acc);
  for (; i < n; ++i) s += ipow(std::fabs(a[i]), ip);
  return s;
}

}  // namespace tormhd::simd::detail
