#include "gbz/goldbach_sums.hpp"

#include <cmath>
#include <limits>

#include "gbz/error.hpp"
#include "gbz/fft.hpp"
#include "gbz/summation.hpp"

namespace gbz {

namespace {

void check_range(const Psi2Series& series, std::int64_t N) {
  if (N < 0 || N > series.n_max()) {
    throw RangeError("N = " + std::to_string(N) + " beyond ψ₂ series of size " +
                     std::to_string(series.n_max()));
  }
}

}  // namespace

Psi2Series psi2_all(const LambdaTable& table, std::int64_t n_max,
                    ConvolutionMethod method) {
  if (n_max < 1) throw DomainError("n_max must be positive");
  if (n_max > table.n_max()) {
    throw RangeError("ψ₂ up to " + std::to_string(n_max) +
                     " needs a Λ table at least that large");
  }
  Psi2Series s;
  s.n_max_ = n_max;
  s.method_ = method;
  const auto vals = table.values();
  const auto n = static_cast<std::size_t>(n_max);

  if (method == ConvolutionMethod::kDirect) {
    s.psi2_.assign(n + 1, 0.0);
    const auto sup = table.support().first(table.support_count_upto(static_cast<double>(n_max)));
    for (std::size_t i = 0; i < sup.size(); ++i) {
      const std::size_t a = sup[i];
      if (2 * a <= n) s.psi2_[2 * a] += vals[a] * vals[a];
      for (std::size_t j = i + 1; j < sup.size(); ++j) {
        const std::size_t b = sup[j];
        if (a + b > n) break;
        s.psi2_[a + b] += 2.0 * vals[a] * vals[b];
      }
    }
  } else {
    s.psi2_ = self_convolve(vals.first(n + 1), n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k < 4 || s.psi2_[k] < 0.0) s.psi2_[k] = 0.0;
    }
  }

  s.cumulative_.assign(n + 1, 0.0);
  KahanSum acc;
  for (std::size_t k = 1; k <= n; ++k) {
    acc.add(s.psi2_[k]);
    s.cumulative_[k] = acc.value();
  }
  return s;
}

double cumulative_psi2(const Psi2Series& series, std::int64_t N) {
  check_range(series, N);
  return series.cumulative()[static_cast<std::size_t>(N)];
}

double cumulative_psi2_by_psi(const LambdaTable& table, std::int64_t N) {
  if (N > table.n_max()) throw RangeError("N beyond Λ table");
  const auto vals = table.values();
  const auto sup = table.support();
  const std::size_t count = table.support_count_upto(static_cast<double>(N - 1));
  KahanSum acc;
  for (std::size_t i = 0; i < count; ++i) {
    acc.add(vals[sup[i]] * table.psi_prefix()[N - sup[i]]);
  }
  return acc.value();
}

OddEvenSplit odd_even_split(const Psi2Series& series, std::int64_t N) {
  check_range(series, N);
  const auto p = series.psi2();
  KahanSum odd;
  for (std::int64_t n = 1; n <= N; n += 2) odd.add(p[n]);
  const double total = cumulative_psi2(series, N);
  // even_sum is defined as the complement so the two parts add up exactly
  // to the cumulative sum.
  return {odd.value(), total - odd.value()};
}

double fujii_error_E(const Psi2Series& series, const LambdaTable& table,
                     std::int64_t N) {
  if (N < 1) throw DomainError("E(N) needs N >= 1");
  check_range(series, N);
  const auto n = static_cast<double>(N);
  return cumulative_psi2(series, N) - 2.0 * psi1(table, n) + 0.5 * n * (n - 1.0);
}

double fujii_error_E_accumulated(const Psi2Series& series,
                                 const LambdaTable& table, std::int64_t N) {
  if (N < 1) throw DomainError("E(N) needs N >= 1");
  check_range(series, N);
  const auto p = series.psi2();
  const auto prefix = table.psi_prefix();
  KahanSum acc;
  for (std::int64_t n = 1; n <= N; ++n) {
    acc.add(p[n]);
    acc.add(-2.0 * prefix[n - 1]);
    acc.add(static_cast<double>(n - 1));
  }
  return acc.value();
}

FujiiBreakdown fujii_breakdown(const Psi2Series& series,
                               const LambdaTable& table, const ZeroTable& zeros,
                               std::int64_t N, double T) {
  if (N < 2) throw DomainError("the breakdown needs N >= 2");
  const auto consts = ExplicitConstants::standard();
  const auto n = static_cast<double>(N);
  FujiiBreakdown b;
  b.N = N;
  b.T = T;
  b.prime_side = cumulative_psi2(series, N);
  b.main_quadratic = 0.5 * n * n;
  b.zero_sum = 2.0 * fujii_zero_sum(zeros, n, T);
  b.linear_term = -consts.two_log2pi_minus_half * n;
  b.constant_term = 2.0 * consts.zeta_prime_over_zeta_at_minus1;
  b.trivial_zero_sum = -2.0 * trivial_zero_series(n);
  b.error_E = fujii_error_E(series, table, N);
  b.tail_bound = T >= 20.0 ? 2.0 * tail_estimate(n, T)
                           : std::numeric_limits<double>::infinity();
  b.residual = b.prime_side - (b.main_quadratic - b.zero_sum + b.linear_term +
                               b.constant_term + b.trivial_zero_sum + b.error_E);
  return b;
}

std::vector<std::pair<std::string, double>> fujii_columns(
    const FujiiBreakdown& b) {
  return {{"N", static_cast<double>(b.N)},
          {"prime_side", b.prime_side},
          {"main_quadratic", b.main_quadratic},
          {"zero_sum", b.zero_sum},
          {"linear_term", b.linear_term},
          {"constant_term", b.constant_term},
          {"trivial_zero_sum", b.trivial_zero_sum},
          {"error_E", b.error_E},
          {"tail_bound", b.tail_bound},
          {"residual", b.residual}};
}

}  // namespace gbz
