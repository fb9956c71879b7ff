// pair_correlation.hpp
//
// Montgomery's form factor over zero ordinates 0 < γ, γ′ <= T:
//
//   F(x,T) = Σ x^{i(γ-γ′)} w(γ-γ′),   w(u) = 4/(4+u²)
//
// and the sin-kernel functional
//
//   G(x,δ) = ∫_0^∞ (sin κt / t)² |Σ_γ x^{iγ}/(1+(t-γ)²)|² dt,  e^{2κ} = 1+δ,
//
// where the inner sum runs over all zeros, γ of both signs.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gbz/lambda_sieve.hpp"
#include "gbz/zeta_zeros.hpp"

namespace gbz {

inline constexpr std::size_t kExactPairCap = 5000;
inline constexpr double kDefaultPairWindow = 200.0;

enum class PairMode { kExact, kWindowed };

struct CorrelationResult {
  double x = 0.0;
  double T = 0.0;
  double F_value = 0.0;
  double main_term = 0.0;  // (T/2π)(x^{-2} log²T + log x)
  double ratio = 0.0;      // F_value / main_term; NaN outside 1 <= x <= T
  double truncation_bound = 0.0;
  PairMode mode = PairMode::kExact;
  double window = 0.0;
  std::size_t zeros = 0;
  // Some γ·log x exceeded kLargePhase; phases went through the compensated
  // reduction, good to ~1e-15 rad after reduction rather than to 1 ulp of γ·log x.
  bool large_phase = false;
};

struct PairOptions {
  std::size_t exact_cap = kExactPairCap;
  unsigned threads = 1;
};

double weight_w(double u) noexcept;

double montgomery_main_term(double x, double T);

// Direct O(M²) double sum. Throws DomainError for x <= 0, CoverageError past
// the table, SizeError when the zero count exceeds options.exact_cap.
CorrelationResult F_exact(const ZeroTable& table, double x, double T,
                          const PairOptions& options = {});

// Pairs with |γ-γ′| <= window only. truncation_bound bounds the dropped part
// using w(u) <= 4/u² and at most 2 log T ordinates per unit interval.
CorrelationResult F_windowed(const ZeroTable& table, double x, double T,
                             double window, const PairOptions& options = {});

// F_value / main_term; DomainError unless 1 <= x <= T.
double montgomery_ratio(const CorrelationResult& result);

struct GResult {
  double value = 0.0;
  double quadrature_error = 0.0;  // |T_step - T_2step|
  double window_error = 0.0;      // zeros beyond the window
  double tail_error = 0.0;        // log²U/U for the cut at U
  double U = 0.0;
  double error() const noexcept {
    return quadrature_error + window_error + tail_error;
  }
};

// 2 log²(2/δ)/δ.
double default_G_height(double delta);

// Trapezoid rule on [0, U] with step close to `step` (the interval count is
// rounded up to an even number). Throws DomainError unless 0 < δ <= 1 and
// CoverageError when U > max_height - window. An empty table gives 0.
GResult G_numeric(const ZeroTable& table, double x, double delta, double U,
                  double window = 50.0, double step = 0.05);

struct Lemma2Result {
  double lhs = 0.0;       // 𝒥(x,δ)
  double x2G = 0.0;       // x²G(x,δ)
  double delta_x2 = 0.0;  // δx²
  GResult G;
  bool holds = false;     // lhs <= 100 (x²G + δx²)
};

// Requires 1/x <= δ <= 1. U is the default height capped at
// max_height - window; the cap shows up in G.tail_error.
Lemma2Result lemma2_check(const LambdaTable& table, const ZeroTable& zeros,
                          double x, double delta, double window = 50.0,
                          double step = 0.05);

inline constexpr const char* kPairCsvHeader =
    "x,T,F,main_term,ratio,mode,window,truncation_bound";

const char* pair_mode_name(PairMode mode) noexcept;

}  // namespace gbz
