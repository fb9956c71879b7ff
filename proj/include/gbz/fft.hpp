// fft.hpp
//
// Thin RAII layer over FFTW3 for the two transforms the project needs.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gbz {

// Smallest power of two >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

// Linear self-convolution c[n] = Σ_{m} a[m] a[n-m], returned for
// 0 <= n < out_len. Zero-pads to a power of two >= 2·a.size().
std::vector<double> self_convolve(std::span<const double> a,
                                  std::size_t out_len);

// In-place unnormalized transform with positive exponent:
// X[j] = Σ_n x[n] e^{+2πi jn/M}.
void dft_positive(std::vector<std::complex<double>>& data);

}  // namespace gbz
