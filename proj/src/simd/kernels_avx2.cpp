// Built with -mavx2 -mfma on x86-64; only reached after a runtime CPU check.

#include <cassert>

#include "zolo/simd.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#define ZOLO_HAVE_AVX2 1
#else
#define ZOLO_HAVE_AVX2 0
#endif

namespace zolo::simd::avx2 {

#if ZOLO_HAVE_AVX2

bool compiled() { return true; }

void complex_axpy_neg(std::span<cdouble> y, cdouble f, std::span<const cdouble> x) {
  assert(y.size() == x.size());
  auto* yp = reinterpret_cast<double*>(y.data());
  const auto* xp = reinterpret_cast<const double*>(x.data());
  const std::size_t doubles = 2 * y.size();
  const __m256d fr = _mm256_set1_pd(f.real());
  const __m256d fi = _mm256_set1_pd(f.imag());

  std::size_t i = 0;
  for (; i + 4 <= doubles; i += 4) {
    // lanes hold [re0, im0, re1, im1]
    const __m256d xv = _mm256_loadu_pd(xp + i);
    const __m256d swapped = _mm256_permute_pd(xv, 0b0101);
    const __m256d cross = _mm256_mul_pd(fi, swapped);
    const __m256d prod = _mm256_fmaddsub_pd(fr, xv, cross);
    _mm256_storeu_pd(yp + i, _mm256_sub_pd(_mm256_loadu_pd(yp + i), prod));
  }
  if (i < doubles) {
    scalar::complex_axpy_neg(y.subspan(i / 2), f, x.subspan(i / 2));
  }
}

double squared_norm(std::span<const cdouble> x) {
  const auto* xp = reinterpret_cast<const double*>(x.data());
  const std::size_t doubles = 2 * x.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= doubles; i += 8) {
    const __m256d a = _mm256_loadu_pd(xp + i);
    const __m256d b = _mm256_loadu_pd(xp + i + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  for (; i + 4 <= doubles; i += 4) {
    const __m256d a = _mm256_loadu_pd(xp + i);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  const __m128d half = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
  double s = _mm_cvtsd_f64(_mm_add_sd(half, _mm_unpackhi_pd(half, half)));
  for (; i < doubles; ++i) s += xp[i] * xp[i];
  return s;
}

#else

bool compiled() { return false; }

void complex_axpy_neg(std::span<cdouble> y, cdouble f, std::span<const cdouble> x) {
  scalar::complex_axpy_neg(y, f, x);
}

double squared_norm(std::span<const cdouble> x) { return scalar::squared_norm(x); }

#endif

}  // namespace zolo::simd::avx2
