// zeta_zeros.hpp
//
// Ingests ordinates γ of nontrivial zeta zeros (all assumed to lie on the
// critical line, ρ = ½ + iγ) and evaluates the zero sums that appear in the
// explicit formulas.
//
// Conjugate pairing: sums written over all complex zeros ρ are evaluated as
// 2·Re of the sum over 0 < γ <= T. Every function below documents which form
// it returns. Sums run in ascending γ with compensated accumulation.

#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <vector>

namespace gbz {

struct ZeroTable {
  std::vector<double> gammas;  // strictly increasing, > 14
  double max_height = 0.0;     // largest γ, 0 for an empty table
  std::string source;
  int precision_digits = 0;

  std::size_t size() const noexcept { return gammas.size(); }
  bool empty() const noexcept { return gammas.empty(); }

  // Ordinates γ <= T. Throws CoverageError when T > max_height.
  std::span<const double> upto(double T) const;
};

// Validates order and positivity; an empty vector yields an empty table.
ZeroTable make_zero_table(std::vector<double> gammas, std::string source = {},
                          int precision_digits = 0);

// ASCII text, one ordinate per line, '#' comments, LF or CRLF.
// Throws ParseError, OrderError, EmptyFileError, IoError.
ZeroTable load_zeros(const std::filesystem::path& path);
ZeroTable parse_zeros(std::istream& in, const std::string& source);

// N(T) by binary search; coverage error past max_height.
std::size_t count_zeros(const ZeroTable& table, double T);

// (T/2π) log(T/2π) - T/2π.
double rvm_main_term(double T);

// N(T) - rvm_main_term(T) - 7/8; the zero-count law bounds this by 2 log T.
double count_law_deviation(const ZeroTable& table, double T);

struct ExplicitConstants {
  double log_2pi;
  double zeta_prime_over_zeta_at_minus1;
  double two_log2pi_minus_half;

  // ζ′/ζ(-1) = 12 log A - 1 with A the Glaisher–Kinkelin constant.
  static ExplicitConstants standard() noexcept;
};

// Σ_ρ N^{ρ+1}/(ρ(ρ+1)) truncated at |γ| <= T, evaluated as
// 2·Re Σ_{0<γ<=T} N^{3/2+iγ} / ((½+iγ)(3/2+iγ)). Accepts real N >= 1.
double fujii_zero_sum(const ZeroTable& table, double N, double T);

// Bound on the absolute truncation error of fujii_zero_sum:
// N^{3/2} log T / (π T), from terms of size N^{3/2}/γ² at density log γ.
// Requires T >= 20.
double tail_estimate(double N, double T);

// Σ_{k>=1} x^{1-2k} / (2k(2k-1)), the trivial-zero part of ψ₁. Equals log 2
// at x = 1.
double trivial_zero_series(double x);

// Explicit formula for ψ₁(x) truncated at height T:
// x²/2 - Σ_ρ x^{ρ+1}/(ρ(ρ+1)) - x log 2π + ζ′/ζ(-1) - trivial_zero_series(x).
double psi1_explicit(const ExplicitConstants& constants, const ZeroTable& table,
                     double x, double T);

// Paired Landau sum 2·Re Σ_{0<γ<=T} x^{1/2+iγ}.
double landau_sum(const ZeroTable& table, double x, double T);

// Prediction for the paired Landau sum: -T Λ(x)/π, with Λ(x) = 0 for
// non-integer x.
double landau_prediction(double x, double T);

// Λ(n) by trial division, for small standalone arguments.
double von_mangoldt(long long n);

// a(s) = ((1+δ)^s - 1)/s, with a(0) = log(1+δ).
std::complex<double> a_of_s(double delta, std::complex<double> s);

// -2·Re Σ_{0<γ<=Z} a(½+iγ) t^{½+iγ}: the zero-side prediction for
// ψ((1+δ)t) - ψ(t) - δt.
double short_interval_zero_sum(const ZeroTable& table, double t, double delta,
                               double Z);

// Error term of the truncated short-interval explicit formula with implied
// constant 1:
//   t log²(tZ)/Z + log t·min(1, t/(Z‖t‖)) + log t·min(1, t/(Z‖(1+δ)t‖)).
double explicit_error_bound(double t, double delta, double Z);

}  // namespace gbz
