#include "locomani/kernels.hpp"

#include <immintrin.h>

namespace locomani::kern {

namespace {

inline double hsum_pd(__m256d v) {
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d lo = _mm256_castpd256_pd128(v);
  __m128d sum = _mm_add_pd(hi, lo);
  sum = _mm_add_sd(sum, _mm_unpackhi_pd(sum, sum));
  return _mm_cvtsd_f64(sum);
}

inline double dot_row(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double acc = hsum_pd(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

double dot_avx2(const double* a, const double* b, std::size_t n) {
  return dot_row(a, b, n);
}

void matvec_bias_avx2(const double* w, const double* x, const double* b,
                      double* y, std::size_t rows, std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    y[r] = b[r] + dot_row(w + r * cols, x, cols);
  }
}

}  // namespace locomani::kern
