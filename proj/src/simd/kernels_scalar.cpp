#include "gbz/simd/kernels.hpp"

namespace gbz::simd {

namespace {

Accum2 pair_row_scalar(double gi, double ci, double si, const double* g,
                       const double* c, const double* s, std::size_t n) {
  Accum2 acc;
  for (std::size_t j = 0; j < n; ++j) {
    const double u = gi - g[j];
    const double w = 4.0 / (4.0 + u * u);
    acc.re += (ci * c[j] + si * s[j]) * w;
    acc.im += (si * c[j] - ci * s[j]) * w;
  }
  return acc;
}

Accum2 lorentz_sum_scalar(double t, const double* g, const double* c,
                          const double* s, std::size_t n) {
  Accum2 acc;
  for (std::size_t j = 0; j < n; ++j) {
    const double u = t - g[j];
    const double w = 1.0 / (1.0 + u * u);
    acc.re += c[j] * w;
    acc.im += s[j] * w;
  }
  return acc;
}

double weighted_energy_scalar(const std::complex<double>* z, const double* w,
                              std::size_t n) {
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) acc += std::norm(z[j]) * w[j];
  return acc;
}

}  // namespace

namespace detail {
const KernelTable kScalarKernels{Isa::kScalar, &pair_row_scalar,
                                 &lorentz_sum_scalar, &weighted_energy_scalar};
}  // namespace detail

}  // namespace gbz::simd
