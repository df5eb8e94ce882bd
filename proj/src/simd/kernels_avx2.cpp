#include "starlike/simd/kernels.hpp"

#if defined(STARLIKE_BUILD_AVX2)
#include <immintrin.h>
#endif

namespace starlike::simd::avx2 {

#if defined(STARLIKE_BUILD_AVX2)

namespace {
double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}
}  // namespace

bool available() { return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"); }

cplx sum_inverse_shift(std::span<const double> poles, cplx w) {
  const double y = w.imag();
  const __m256d vx = _mm256_set1_pd(w.real());
  const __m256d vy = _mm256_set1_pd(y);
  const __m256d vy2 = _mm256_set1_pd(y * y);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  const std::size_t n = poles.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dr = _mm256_sub_pd(_mm256_loadu_pd(poles.data() + i), vx);
    const __m256d d = _mm256_fmadd_pd(dr, dr, vy2);
    acc_re = _mm256_add_pd(acc_re, _mm256_div_pd(dr, d));
    acc_im = _mm256_add_pd(acc_im, _mm256_div_pd(vy, d));
  }
  double re = hsum(acc_re);
  double im = hsum(acc_im);
  for (; i < n; ++i) {
    const double dr = poles[i] - w.real();
    const double d = dr * dr + y * y;
    re += dr / d;
    im += y / d;
  }
  return {re, im};
}

void halfplane_slacks(double alpha, std::span<const double> re, std::span<const double> im,
                      std::span<double> upper, std::span<double> lower) {
  const __m256d va = _mm256_set1_pd(alpha);
  const std::size_t n = re.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(re.data() + i);
    const __m256d y = _mm256_loadu_pd(im.data() + i);
    const __m256d y2 = _mm256_mul_pd(y, y);
    const __m256d m = _mm256_sqrt_pd(_mm256_fmadd_pd(x, x, y2));
    const __m256d dr = _mm256_sub_pd(va, x);
    const __m256d d = _mm256_fmadd_pd(dr, dr, y2);
    const __m256d ratio = _mm256_div_pd(_mm256_fmsub_pd(x, dr, y2), d);
    const __m256d up = _mm256_sub_pd(_mm256_div_pd(m, _mm256_sub_pd(va, m)), ratio);
    const __m256d lo = _mm256_add_pd(ratio, _mm256_div_pd(m, _mm256_add_pd(va, m)));
    _mm256_storeu_pd(upper.data() + i, up);
    _mm256_storeu_pd(lower.data() + i, lo);
  }
  if (i < n) {
    scalar::halfplane_slacks(alpha, re.subspan(i), im.subspan(i), upper.subspan(i), lower.subspan(i));
  }
}

#else

bool available() { return false; }
cplx sum_inverse_shift(std::span<const double> poles, cplx w) {
  return scalar::sum_inverse_shift(poles, w);
}
void halfplane_slacks(double alpha, std::span<const double> re, std::span<const double> im,
                      std::span<double> upper, std::span<double> lower) {
  scalar::halfplane_slacks(alpha, re, im, upper, lower);
}

#endif

}  // namespace starlike::simd::avx2
