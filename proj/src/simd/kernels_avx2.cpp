// AVX2 + FMA variants. This translation unit is compiled with -mavx2 -mfma
// and must only be entered after a runtime CPU check.

#include <immintrin.h>

#include "gbz/simd/kernels.hpp"

namespace gbz::simd {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);  // (l0+l2, l1+l3)
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

Accum2 pair_row_avx2(double gi, double ci, double si, const double* g,
                     const double* c, const double* s, std::size_t n) {
  const __m256d vg = _mm256_set1_pd(gi);
  const __m256d vc = _mm256_set1_pd(ci);
  const __m256d vs = _mm256_set1_pd(si);
  const __m256d four = _mm256_set1_pd(4.0);
  __m256d re = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d u = _mm256_sub_pd(vg, _mm256_loadu_pd(g + j));
    const __m256d w = _mm256_div_pd(four, _mm256_fmadd_pd(u, u, four));
    const __m256d cj = _mm256_loadu_pd(c + j);
    const __m256d sj = _mm256_loadu_pd(s + j);
    const __m256d dot = _mm256_fmadd_pd(vc, cj, _mm256_mul_pd(vs, sj));
    const __m256d crs = _mm256_fmsub_pd(vs, cj, _mm256_mul_pd(vc, sj));
    re = _mm256_fmadd_pd(dot, w, re);
    im = _mm256_fmadd_pd(crs, w, im);
  }
  Accum2 acc{hsum(re), hsum(im)};
  for (; j < n; ++j) {
    const double u = gi - g[j];
    const double w = 4.0 / (4.0 + u * u);
    acc.re += (ci * c[j] + si * s[j]) * w;
    acc.im += (si * c[j] - ci * s[j]) * w;
  }
  return acc;
}

Accum2 lorentz_sum_avx2(double t, const double* g, const double* c,
                        const double* s, std::size_t n) {
  const __m256d vt = _mm256_set1_pd(t);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d re = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d u = _mm256_sub_pd(vt, _mm256_loadu_pd(g + j));
    const __m256d w = _mm256_div_pd(one, _mm256_fmadd_pd(u, u, one));
    re = _mm256_fmadd_pd(_mm256_loadu_pd(c + j), w, re);
    im = _mm256_fmadd_pd(_mm256_loadu_pd(s + j), w, im);
  }
  Accum2 acc{hsum(re), hsum(im)};
  for (; j < n; ++j) {
    const double u = t - g[j];
    const double w = 1.0 / (1.0 + u * u);
    acc.re += c[j] * w;
    acc.im += s[j] * w;
  }
  return acc;
}

double weighted_energy_avx2(const std::complex<double>* z, const double* w,
                            std::size_t n) {
  // std::complex<double> is layout-compatible with double[2].
  const auto* d = reinterpret_cast<const double*>(z);
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d v = _mm256_loadu_pd(d + 2 * j);  // re0 im0 re1 im1
    const __m128d w2 = _mm_loadu_pd(w + j);
    const __m256d ww = _mm256_permute4x64_pd(_mm256_castpd128_pd256(w2),
                                             _MM_SHUFFLE(1, 1, 0, 0));
    acc = _mm256_fmadd_pd(_mm256_mul_pd(v, v), ww, acc);
  }
  double total = hsum(acc);
  for (; j < n; ++j) total += std::norm(z[j]) * w[j];
  return total;
}

}  // namespace

namespace detail {
const KernelTable kAvx2Kernels{Isa::kAvx2, &pair_row_avx2, &lorentz_sum_avx2,
                               &weighted_energy_avx2};
}  // namespace detail

}  // namespace gbz::simd
