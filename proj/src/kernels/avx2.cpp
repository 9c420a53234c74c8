#include <immintrin.h>

#include <algorithm>

#include "alphadg/kernels.hpp"

namespace alphadg::kernels::avx2 {

namespace {

double hmin(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_min_pd(lo, hi);
  return std::min(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_max_pd(lo, hi);
  return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(s) + _mm_cvtsd_f64(_mm_unpackhi_pd(s, s));
}

}  // namespace

StepStats power_step(const PackedMatrix& m, double shift, const double* x, double* y) {
  const int n = m.n;
  const int stride = m.stride;
  const __m256d vshift = _mm256_set1_pd(shift);
  for (int i = 0; i < stride; i += 4)
    _mm256_storeu_pd(y + i, _mm256_mul_pd(vshift, _mm256_loadu_pd(x + i)));

  for (int j = 0; j < n; ++j) {
    const double* col = m.cols.data() + static_cast<std::size_t>(j) * stride;
    const __m256d xj = _mm256_set1_pd(x[j]);
    for (int i = 0; i < stride; i += 4) {
      __m256d acc = _mm256_loadu_pd(y + i);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(col + i), xj));
      _mm256_storeu_pd(y + i, acc);
    }
  }

  const int full = n & ~3;
  StepStats s{y[0] / x[0], y[0] / x[0], 0.0};
  if (full > 0) {
    __m256d vlo = _mm256_set1_pd(s.lo);
    __m256d vhi = vlo;
    __m256d vsum = _mm256_setzero_pd();
    for (int i = 0; i < full; i += 4) {
      const __m256d yi = _mm256_loadu_pd(y + i);
      const __m256d r = _mm256_div_pd(yi, _mm256_loadu_pd(x + i));
      vlo = _mm256_min_pd(vlo, r);
      vhi = _mm256_max_pd(vhi, r);
      vsum = _mm256_add_pd(vsum, yi);
    }
    s.lo = hmin(vlo);
    s.hi = hmax(vhi);
    s.sum = hsum(vsum);
  }
  for (int i = full; i < n; ++i) {
    const double r = y[i] / x[i];
    s.lo = std::min(s.lo, r);
    s.hi = std::max(s.hi, r);
    s.sum += y[i];
  }
  return s;
}

void scale(double* x, int stride, double factor) {
  const __m256d f = _mm256_set1_pd(factor);
  for (int i = 0; i < stride; i += 4) _mm256_storeu_pd(x + i, _mm256_mul_pd(_mm256_loadu_pd(x + i), f));
}

}  // namespace alphadg::kernels::avx2
