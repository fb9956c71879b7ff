// variance_lab.hpp
//
// Exact integrated squared errors of ψ:
//
//   H(x)    = ∫_0^x (ψ(t) - t)² dt
//   J(x,h)  = ∫_0^x (ψ(t+h) - ψ(t) - h)² dt
//   𝒥(x,δ)  = ∫_0^x (ψ((1+δ)t) - ψ(t) - δt)² dt
//
// ψ is a step function, so each integral is a finite sum of closed-form
// segment integrals between merged breakpoints. Segment integrals use the
// factored form (b-a)(p² + pq + q²)/3 of (p³ - q³)/3 to avoid cancellation.

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gbz/lambda_sieve.hpp"

namespace gbz {

double H_exact(const LambdaTable& table, double x);

// Requires h > 0 and x + h <= n_max.
double J_exact(const LambdaTable& table, double x, double h);

// ∫_a^b (ψ(t+h) - ψ(t) - h)² dt for 0 <= a <= b.
double J_range(const LambdaTable& table, double a, double b, double h);

// Requires 0 < δ <= 1 and (1+δ)x <= n_max.
double calJ_exact(const LambdaTable& table, double x, double delta);

// Same integral without the δ <= 1 restriction (δ > 0).
double multiplicative_variance(const LambdaTable& table, double x,
                               double delta);

struct SaffariVaughanResult {
  double lhs;
  double rhs;
  bool holds;
};

// For f(t) = ψ(t) - t and 1 <= h <= x/4:
//   lhs = ∫_{x/2}^x (f(t+h) - f(t))² dt
//   rhs = (2x/h) ∫_0^{8h/x} ∫_0^x (f(y+δy) - f(y))² dy dδ
// The outer integral is adaptive Simpson at relative tolerance 1e-6.
SaffariVaughanResult saffari_vaughan_check(const LambdaTable& table, double x,
                                           double h);

// Generic form for any f, given its two variance functionals:
//   additive(a, b, h)   = ∫_a^b (f(t+h) - f(t))² dt
//   multiplicative(x,δ) = ∫_0^x (f(y+δy) - f(y))² dy
SaffariVaughanResult saffari_vaughan_check(
    const std::function<double(double, double, double)>& additive,
    const std::function<double(double, double)>& multiplicative, double x,
    double h);

// Adaptive Simpson on [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol, int max_depth = 40);

enum class VarianceKind { kH, kJ, kCalJ };

const char* variance_kind_name(VarianceKind kind);
VarianceKind parse_variance_kind(const std::string& name);

struct VarianceRow {
  double x;
  double param;  // h or δ; 0 for H
  double value;
  double normalizer;
  double ratio;
};

struct VarianceCurve {
  VarianceKind kind;
  std::vector<VarianceRow> rows;
  double max_ratio = 0.0;
};

// Normalizers: x² for H, h·x·log²(2x/h) for J, δ·x²·log²(2/δ) for 𝒥.
double variance_normalizer(VarianceKind kind, double x, double param);

// Every (x, param) pair of the grid; params ignored for H.
VarianceCurve bound_ratio_curve(const LambdaTable& table, VarianceKind kind,
                                const std::vector<double>& xs,
                                const std::vector<double>& params);

inline constexpr const char* kVarianceCsvHeader =
    "kind,x,param,value,normalizer,ratio";

}  // namespace gbz
