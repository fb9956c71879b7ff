// goldbach_sums.hpp
//
// ψ₂(n) = Σ_{m+m'=n} Λ(m)Λ(m'), its cumulative sums, the odd/even split, and
// the exact error term of the average Goldbach formula
//
//   Σ_{n<=N} ψ₂(n) = 2ψ₁(N) - ½N(N-1) + E(N).
//
// E(N) is evaluated from this closed identity, never from its oscillatory
// integral representation.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gbz/lambda_sieve.hpp"
#include "gbz/zeta_zeros.hpp"

namespace gbz {

enum class ConvolutionMethod { kDirect, kFft };

class Psi2Series {
 public:
  std::int64_t n_max() const noexcept { return n_max_; }
  ConvolutionMethod method() const noexcept { return method_; }
  // psi2()[n] = ψ₂(n), index 0 unused.
  std::span<const double> psi2() const noexcept { return psi2_; }
  // cumulative()[n] = Σ_{m<=n} ψ₂(m).
  std::span<const double> cumulative() const noexcept { return cumulative_; }

 private:
  friend Psi2Series psi2_all(const LambdaTable&, std::int64_t,
                             ConvolutionMethod);
  std::int64_t n_max_ = 0;
  ConvolutionMethod method_ = ConvolutionMethod::kDirect;
  std::vector<double> psi2_;
  std::vector<double> cumulative_;
};

// Direct: unordered pairs of support points, off-diagonal weight 2, cost
// O(P²). FFT: zero-padded real self-convolution, cost O(n log n). Entries
// below 4 are exactly zero; FFT round-off below zero is clamped.
Psi2Series psi2_all(const LambdaTable& table, std::int64_t n_max,
                    ConvolutionMethod method);

double cumulative_psi2(const Psi2Series& series, std::int64_t N);

// Σ_{m<=N-1} Λ(m) ψ(N-m): the same cumulative sum by a second route.
double cumulative_psi2_by_psi(const LambdaTable& table, std::int64_t N);

struct OddEvenSplit {
  double odd_sum;
  double even_sum;
};
OddEvenSplit odd_even_split(const Psi2Series& series, std::int64_t N);

// Σ_{n<=N} ψ₂(n) - 2ψ₁(N) + ½N(N-1).
double fujii_error_E(const Psi2Series& series, const LambdaTable& table,
                     std::int64_t N);

// Σ_{n<=N} (ψ₂(n) - 2ψ(n-1) + (n-1)), accumulated term by term.
double fujii_error_E_accumulated(const Psi2Series& series,
                                 const LambdaTable& table, std::int64_t N);

struct FujiiBreakdown {
  std::int64_t N = 0;
  double T = 0.0;
  double prime_side = 0.0;        // Σ_{n<=N} ψ₂(n)
  double main_quadratic = 0.0;    // N²/2
  double zero_sum = 0.0;          // 2Σ_ρ N^{ρ+1}/(ρ(ρ+1)), |γ| <= T
  double linear_term = 0.0;       // -(2 log 2π - ½) N
  double constant_term = 0.0;     // 2 ζ′/ζ(-1)
  double trivial_zero_sum = 0.0;  // -Σ_k N^{1-2k}/(k(2k-1))
  double error_E = 0.0;
  double tail_bound = 0.0;        // truncation bound on zero_sum; ∞ if T < 20
  double residual = 0.0;          // prime_side minus every right-side term
};

// Assembles every term of the average Goldbach identity with the zero sum
// cut at height T. Throws CoverageError when T > zeros.max_height.
FujiiBreakdown fujii_breakdown(const Psi2Series& series,
                               const LambdaTable& table, const ZeroTable& zeros,
                               std::int64_t N, double T);

inline constexpr const char* kFujiiCsvHeader =
    "N,prime_side,main_quadratic,zero_sum,linear_term,constant_term,"
    "trivial_zero_sum,error_E,tail_bound,residual";

std::vector<std::pair<std::string, double>> fujii_columns(
    const FujiiBreakdown& b);

}  // namespace gbz
