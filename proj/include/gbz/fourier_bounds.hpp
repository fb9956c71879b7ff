// fourier_bounds.hpp
//
// Exponential sums on the circle with r = e^{-1/N}:
//
//   S(α)     = Σ_n Λ₀(n) rⁿ e(nα),   Λ₀(n) = Λ(n) - 1
//   I_N(α)   = Σ_{n<=N} r^{-n} e(-nα)
//   ℰ(N)     = ∫_0^1 |S(α)|² |I_N(α)| dα
//   𝒲(N,h)   = ∫_0^{1/2h} |S(α)|² dα
//
// S is sampled at α_j = j/M by one DFT of the truncated coefficients. With
// M >= 2·n_trunc the grid integrates products of S, S and I_N without
// aliasing, so the identities E(N) = ∫ S² I_N and ψ(N) - N = ∫ S I_N hold on
// the grid to rounding.

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gbz/lambda_sieve.hpp"

namespace gbz {

struct ExpSumGrid {
  std::int64_t N = 0;
  double r = 0.0;
  std::int64_t n_trunc = 0;
  std::size_t M = 0;
  std::vector<double> coeffs;                 // coeffs[n] = Λ₀(n) e^{-n/N}
  std::vector<std::complex<double>> values;   // values[j] = S(j/M)
};

// ⌈N ln(4·10¹⁰ N)⌉: the dropped tail Σ_{n>n_trunc} (Λ(n)+1) rⁿ stays below
// 1e-10.
std::int64_t default_n_trunc(std::int64_t N);

// 2^⌈log₂(2·n_trunc)⌉.
std::size_t default_grid_size(std::int64_t n_trunc);

// M = 0 picks the default. Throws RangeError when n_trunc > n_max and
// SizeError when M < 2·n_trunc.
ExpSumGrid build_grid(const LambdaTable& table, std::int64_t N,
                      std::size_t M = 0);

// Same, from explicit coefficients (index 0 ignored).
ExpSumGrid grid_from_coefficients(std::int64_t N, std::vector<double> coeffs,
                                  std::size_t M = 0);

// Σ_{n<=N} qⁿ with q = e^{1/N} e(-α), in closed form; N at q = 1.
std::complex<double> I_N_closed(std::int64_t N, double alpha);

struct QuadValue {
  double value = 0.0;
  double uncertainty = 0.0;  // |ℰ_M - ℰ_{2M}|
};

QuadValue curlyE(const ExpSumGrid& grid);

// ∫_0^a |S(α)|² dα for 0 <= a <= 2, trapezoid with a partial end cell; the
// integrand has period 1.
double window_integral(const ExpSumGrid& grid, double a);

// 𝒲(N,h); DomainError unless 1 <= h <= N.
double curlyW(const ExpSumGrid& grid, double h);

// Σ_{0<=k<log₂N} (N/2^k) ∫_0^{2^{k+1}/N} |S|².
double dyadic_breakup(const ExpSumGrid& grid);

// (1/M) Σ_j S_j² I_N(α_j): equals E(N).
double E_from_grid(const ExpSumGrid& grid);

// (1/M) Σ_j S_j I_N(α_j): equals ψ(N) - N.
double psi_error_from_grid(const ExpSumGrid& grid);

struct PntCheck {
  double lhs = 0.0;  // |ψ(N) - N|
  double rhs = 0.0;  // √(ℰ(N) log N)
  bool holds = false;  // lhs <= 3·rhs
};

PntCheck pnt_error_check(const LambdaTable& table, const ExpSumGrid& grid,
                         std::int64_t N);

// Right side of the 𝒲 bound with implied constant 1:
//   H(h)/h² + Σ_j 2^{-j} H(jN)/N² + Σ_j 2^{-j} J(jN,h)/h² + N/h²,
// j running from 1 while 2^{-j} >= 1e-6. Needs the table past 19N + h.
double wbound_rhs(const LambdaTable& table, std::int64_t N, double h);

struct BoundsRow {
  std::int64_t N = 0;
  std::size_t M = 0;
  std::int64_t n_trunc = 0;
  double curlyE = 0.0;
  double quad_uncertainty = 0.0;
  double E_exact = 0.0;
  double ratio_E_over_NlogcubeN = 0.0;
};

inline constexpr const char* kBoundsCsvHeader =
    "N,M,n_trunc,curlyE,quad_uncertainty,E_exact,ratio_E_over_NlogcubeN";

}  // namespace gbz
