// kernels.hpp
//
// Data-parallel inner loops with a scalar reference and vector variants.
// The variant is picked once at first use from the running CPU; setting
// GBZ_SIMD=scalar in the environment pins the scalar path. Every variant sums
// its lanes in a fixed order, so a given ISA is deterministic across runs.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace gbz::simd {

enum class Isa { kScalar, kAvx2, kNeon };

struct Accum2 {
  double re = 0.0;
  double im = 0.0;
};

// Row of the pair-correlation double sum. With z_j = c_j + i s_j = x^{iγ_j}
// and w(u) = 4/(4+u²), returns Σ_j z_i conj(z_j) w(γ_i - γ_j).
using PairRowFn = Accum2 (*)(double gi, double ci, double si,
                             const double* g, const double* c, const double* s,
                             std::size_t n);

// Σ_j (c_j + i s_j) / (1 + (t - γ_j)²).
using LorentzSumFn = Accum2 (*)(double t, const double* g, const double* c,
                                const double* s, std::size_t n);

// Σ_j |z_j|² w_j.
using WeightedEnergyFn = double (*)(const std::complex<double>* z,
                                    const double* w, std::size_t n);

struct KernelTable {
  Isa isa;
  PairRowFn pair_row;
  LorentzSumFn lorentz_sum;
  WeightedEnergyFn weighted_energy;
};

bool isa_available(Isa isa) noexcept;

// Throws std::invalid_argument when `isa` is not available on this CPU.
const KernelTable& kernels_for(Isa isa);

// The dispatched table.
const KernelTable& kernels();

std::string_view isa_name(Isa isa) noexcept;

namespace detail {
extern const KernelTable kScalarKernels;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable kAvx2Kernels;
#endif
#if defined(__aarch64__)
extern const KernelTable kNeonKernels;
#endif
}  // namespace detail

}  // namespace gbz::simd
