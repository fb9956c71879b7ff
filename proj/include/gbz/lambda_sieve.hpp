// lambda_sieve.hpp
//
// Sieved von Mangoldt table Λ(n) for 1 <= n <= n_max together with the
// Chebyshev prefix ψ(n) and the list of prime-power support points.
//
//   Λ(n) = log p   if n = p^k, k >= 1
//        = 0       otherwise
//   ψ(x) = Σ_{n<=x} Λ(n)                     (right-continuous step function)
//   ψ₁(x) = ∫_0^x ψ(t) dt = Σ_{n<=x} Λ(n)(x - n)
//   R(u) = ψ(u) - ⌊u⌋
//
// Arguments x may be real; the step functions are resolved at ⌊x⌋.

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace gbz {

inline constexpr std::int64_t kDefaultSieveCap = 100'000'000;

class LambdaTable {
 public:
  LambdaTable() = default;

  std::int64_t n_max() const noexcept { return n_max_; }

  // Index 0 is a zero sentinel; values()[n] = Λ(n).
  std::span<const double> values() const noexcept { return values_; }
  // psi_prefix()[n] = ψ(n).
  std::span<const double> psi_prefix() const noexcept { return psi_prefix_; }
  // Sorted prime powers <= n_max.
  std::span<const std::uint32_t> support() const noexcept { return support_; }

  double lambda(std::int64_t n) const;

  // Λ₀(n) = Λ(n) - 1 for n >= 1.
  double lambda0(std::int64_t n) const { return lambda(n) - 1.0; }

  // Number of support points <= x (x may be real and negative).
  std::size_t support_count_upto(double x) const noexcept;

 private:
  friend LambdaTable build_lambda_table(std::int64_t n_max, std::int64_t cap);
  friend LambdaTable table_from_values(std::vector<double> values);

  void finish();  // derive support and prefix from values_

  std::int64_t n_max_ = 0;
  std::vector<double> values_;
  std::vector<double> psi_prefix_;
  std::vector<std::uint32_t> support_;
};

// Segmented Eratosthenes sieve (blocks of 2^18) followed by prime-power
// passes. Throws DomainError for n_max < 1 and SizeError above `cap`.
LambdaTable build_lambda_table(std::int64_t n_max,
                               std::int64_t cap = kDefaultSieveCap);

// Builds a table from raw values (index 0 ignored). No validation.
LambdaTable table_from_values(std::vector<double> values);

// ψ(x); throws RangeError when x > n_max. ψ(x) = 0 for x < 2.
double psi(const LambdaTable& table, double x);

// ψ₁(x) = Σ_{n<=x} Λ(n)(x - n), the exact integral of the step function.
double psi1(const LambdaTable& table, double x);

// R(u) = ψ(u) - ⌊u⌋.
double remainder_R(const LambdaTable& table, double u);

// Binary cache: "LAMB1", little-endian u64 n_max, n_max little-endian doubles
// holding Λ(1..n_max).
void save_lambda_cache(const LambdaTable& table,
                       const std::filesystem::path& path);

// Loads and revalidates a cache file. Every positive entry must equal log p
// for an n that is a power of p, and ψ(n_max) must respect the sanity
// envelope below. Throws IoError or CorruptCacheError.
LambdaTable load_lambda_cache(const std::filesystem::path& path,
                              std::int64_t cap = kDefaultSieveCap);

// |ψ(n_max) - n_max| <= √n_max · log²(n_max), checked for n_max >= 1000.
bool psi_envelope_ok(const LambdaTable& table);

}  // namespace gbz
