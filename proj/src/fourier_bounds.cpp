#include "gbz/fourier_bounds.hpp"

#include <cmath>
#include <numbers>

#include "gbz/error.hpp"
#include "gbz/fft.hpp"
#include "gbz/simd/kernels.hpp"
#include "gbz/summation.hpp"
#include "gbz/variance_lab.hpp"

namespace gbz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e(-t) = e^{-2πit} after reducing t mod 1.
std::complex<double> e_neg(double t) {
  const double f = t - std::floor(t);
  const double th = -kTwoPi * f;
  return {std::cos(th), std::sin(th)};
}

std::vector<std::complex<double>> transform(const std::vector<double>& coeffs,
                                            std::size_t M) {
  std::vector<std::complex<double>> data(M);
  for (std::size_t n = 1; n < coeffs.size(); ++n) data[n] = coeffs[n];
  dft_positive(data);
  return data;
}

std::vector<double> abs_I_N(std::int64_t N, std::size_t M) {
  std::vector<double> w(M);
  for (std::size_t j = 0; j < M; ++j) {
    w[j] = std::abs(I_N_closed(N, static_cast<double>(j) / static_cast<double>(M)));
  }
  return w;
}

double energy(const std::vector<std::complex<double>>& s,
              const std::vector<double>& w) {
  return simd::kernels().weighted_energy(s.data(), w.data(), s.size()) /
         static_cast<double>(s.size());
}

}  // namespace

std::int64_t default_n_trunc(std::int64_t N) {
  if (N < 1) throw DomainError("N must be positive");
  const auto n = static_cast<double>(N);
  return static_cast<std::int64_t>(std::ceil(n * std::log(4e10 * n)));
}

std::size_t default_grid_size(std::int64_t n_trunc) {
  return next_pow2(static_cast<std::size_t>(2 * n_trunc));
}

ExpSumGrid grid_from_coefficients(std::int64_t N, std::vector<double> coeffs,
                                  std::size_t M) {
  if (N < 1) throw DomainError("N must be positive");
  if (coeffs.size() < 2) throw SizeError("need at least one coefficient");
  const auto n_trunc = static_cast<std::int64_t>(coeffs.size() - 1);
  if (M == 0) M = default_grid_size(n_trunc);
  if (M < static_cast<std::size_t>(2 * n_trunc)) {
    throw SizeError("grid size " + std::to_string(M) + " below 2·n_trunc = " +
                    std::to_string(2 * n_trunc));
  }
  ExpSumGrid g;
  g.N = N;
  g.r = std::exp(-1.0 / static_cast<double>(N));
  g.n_trunc = n_trunc;
  g.M = M;
  coeffs[0] = 0.0;
  g.values = transform(coeffs, M);
  g.coeffs = std::move(coeffs);
  return g;
}

ExpSumGrid build_grid(const LambdaTable& table, std::int64_t N, std::size_t M) {
  const std::int64_t n_trunc = default_n_trunc(N);
  if (n_trunc > table.n_max()) {
    throw RangeError("the grid for N = " + std::to_string(N) +
                     " needs Λ up to " + std::to_string(n_trunc));
  }
  const auto vals = table.values();
  const double inv_n = 1.0 / static_cast<double>(N);
  std::vector<double> coeffs(static_cast<std::size_t>(n_trunc) + 1, 0.0);
  for (std::int64_t n = 1; n <= n_trunc; ++n) {
    coeffs[n] = (vals[n] - 1.0) * std::exp(-static_cast<double>(n) * inv_n);
  }
  return grid_from_coefficients(N, std::move(coeffs), M);
}

std::complex<double> I_N_closed(std::int64_t N, double alpha) {
  const double inv_n = 1.0 / static_cast<double>(N);
  const auto rot = e_neg(alpha);
  // q - 1 without cancellation near α = 0.
  const double half = std::sin(0.5 * kTwoPi * (alpha - std::floor(alpha)));
  const std::complex<double> q_minus_1(
      std::expm1(inv_n) * rot.real() - 2.0 * half * half,
      std::exp(inv_n) * rot.imag());
  const std::complex<double> q = std::exp(inv_n) * rot;
  if (std::abs(q_minus_1) == 0.0) return static_cast<double>(N);
  const std::complex<double> qN =
      std::numbers::e * e_neg(std::fmod(alpha, 1.0) * static_cast<double>(N));
  return q * (qN - 1.0) / q_minus_1;
}

QuadValue curlyE(const ExpSumGrid& grid) {
  const double fine_M = energy(grid.values, abs_I_N(grid.N, grid.M));
  const auto doubled = transform(grid.coeffs, 2 * grid.M);
  const double fine_2M = energy(doubled, abs_I_N(grid.N, 2 * grid.M));
  return {fine_M, std::abs(fine_M - fine_2M)};
}

double window_integral(const ExpSumGrid& grid, double a) {
  if (!(a >= 0.0 && a <= 2.0)) throw DomainError("window must lie in [0, 2]");
  const std::size_t M = grid.M;
  auto p = [&](std::size_t j) { return std::norm(grid.values[j % M]); };
  const double A = a * static_cast<double>(M);
  const auto k = static_cast<std::size_t>(std::floor(A));
  KahanSum acc;
  for (std::size_t i = 0; i < k; ++i) acc.add(0.5 * (p(i) + p(i + 1)));
  const double frac = A - static_cast<double>(k);
  if (frac > 0.0) {
    const double at_a = p(k) + frac * (p(k + 1) - p(k));
    acc.add(0.5 * frac * (p(k) + at_a));
  }
  return acc.value() / static_cast<double>(M);
}

double curlyW(const ExpSumGrid& grid, double h) {
  if (!(h >= 1.0 && h <= static_cast<double>(grid.N))) {
    throw DomainError("𝒲(N,h) needs 1 <= h <= N");
  }
  return window_integral(grid, 0.5 / h);
}

double dyadic_breakup(const ExpSumGrid& grid) {
  const auto n = static_cast<double>(grid.N);
  const double log2n = std::log2(n);
  KahanSum acc;
  for (int k = 0; k < log2n; ++k) {
    const double scale = std::ldexp(1.0, k);
    acc.add(n / scale * window_integral(grid, 2.0 * scale / n));
  }
  return acc.value();
}

double E_from_grid(const ExpSumGrid& grid) {
  std::vector<double> terms(grid.M);
  const auto Md = static_cast<double>(grid.M);
  for (std::size_t j = 0; j < grid.M; ++j) {
    const auto s = grid.values[j];
    terms[j] = (s * s * I_N_closed(grid.N, static_cast<double>(j) / Md)).real();
  }
  return pairwise_sum(terms) / Md;
}

double psi_error_from_grid(const ExpSumGrid& grid) {
  std::vector<double> terms(grid.M);
  const auto Md = static_cast<double>(grid.M);
  for (std::size_t j = 0; j < grid.M; ++j) {
    terms[j] =
        (grid.values[j] * I_N_closed(grid.N, static_cast<double>(j) / Md)).real();
  }
  return pairwise_sum(terms) / Md;
}

PntCheck pnt_error_check(const LambdaTable& table, const ExpSumGrid& grid,
                         std::int64_t N) {
  if (N < 2) throw DomainError("the PNT check needs N >= 2");
  if (grid.N != N) throw DomainError("grid was built for a different N");
  const auto n = static_cast<double>(N);
  PntCheck c;
  c.lhs = std::abs(psi(table, n) - n);
  c.rhs = std::sqrt(curlyE(grid).value * std::log(n));
  c.holds = c.lhs <= 3.0 * c.rhs;
  return c;
}

double wbound_rhs(const LambdaTable& table, std::int64_t N, double h) {
  const auto n = static_cast<double>(N);
  if (!(h >= 1.0 && h <= n)) throw DomainError("the 𝒲 bound needs 1 <= h <= N");
  KahanSum acc;
  acc.add(H_exact(table, h) / (h * h));
  for (int j = 1; std::ldexp(1.0, -j) >= 1e-6; ++j) {
    const double wj = std::ldexp(1.0, -j);
    acc.add(wj * H_exact(table, j * n) / (n * n));
    acc.add(wj * J_exact(table, j * n, h) / (h * h));
  }
  acc.add(n / (h * h));
  return acc.value();
}

}  // namespace gbz
