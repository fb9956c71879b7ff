// NEON (AArch64 Advanced SIMD) variants, two doubles per lane group.

#if defined(__aarch64__)

#include <arm_neon.h>

#include "gbz/simd/kernels.hpp"

namespace gbz::simd {

namespace {

Accum2 pair_row_neon(double gi, double ci, double si, const double* g,
                     const double* c, const double* s, std::size_t n) {
  const float64x2_t vg = vdupq_n_f64(gi);
  const float64x2_t vc = vdupq_n_f64(ci);
  const float64x2_t vs = vdupq_n_f64(si);
  const float64x2_t four = vdupq_n_f64(4.0);
  float64x2_t re = vdupq_n_f64(0.0);
  float64x2_t im = vdupq_n_f64(0.0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t u = vsubq_f64(vg, vld1q_f64(g + j));
    const float64x2_t w = vdivq_f64(four, vfmaq_f64(four, u, u));
    const float64x2_t cj = vld1q_f64(c + j);
    const float64x2_t sj = vld1q_f64(s + j);
    const float64x2_t dot = vfmaq_f64(vmulq_f64(vs, sj), vc, cj);
    const float64x2_t crs = vfmsq_f64(vmulq_f64(vs, cj), vc, sj);
    re = vfmaq_f64(re, dot, w);
    im = vfmaq_f64(im, crs, w);
  }
  Accum2 acc{vaddvq_f64(re), vaddvq_f64(im)};
  for (; j < n; ++j) {
    const double u = gi - g[j];
    const double w = 4.0 / (4.0 + u * u);
    acc.re += (ci * c[j] + si * s[j]) * w;
    acc.im += (si * c[j] - ci * s[j]) * w;
  }
  return acc;
}

Accum2 lorentz_sum_neon(double t, const double* g, const double* c,
                        const double* s, std::size_t n) {
  const float64x2_t vt = vdupq_n_f64(t);
  const float64x2_t one = vdupq_n_f64(1.0);
  float64x2_t re = vdupq_n_f64(0.0);
  float64x2_t im = vdupq_n_f64(0.0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t u = vsubq_f64(vt, vld1q_f64(g + j));
    const float64x2_t w = vdivq_f64(one, vfmaq_f64(one, u, u));
    re = vfmaq_f64(re, vld1q_f64(c + j), w);
    im = vfmaq_f64(im, vld1q_f64(s + j), w);
  }
  Accum2 acc{vaddvq_f64(re), vaddvq_f64(im)};
  for (; j < n; ++j) {
    const double u = t - g[j];
    const double w = 1.0 / (1.0 + u * u);
    acc.re += c[j] * w;
    acc.im += s[j] * w;
  }
  return acc;
}

double weighted_energy_neon(const std::complex<double>* z, const double* w,
                            std::size_t n) {
  const auto* d = reinterpret_cast<const double*>(z);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const float64x2_t v = vld1q_f64(d + 2 * j);
    acc = vfmaq_f64(acc, vmulq_f64(v, v), vdupq_n_f64(w[j]));
  }
  return vaddvq_f64(acc);
}

}  // namespace

namespace detail {
const KernelTable kNeonKernels{Isa::kNeon, &pair_row_neon, &lorentz_sum_neon,
                               &weighted_energy_neon};
}  // namespace detail

}  // namespace gbz::simd

#endif  // __aarch64__
