#include "gbz/lambda_sieve.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <string>

#include "gbz/error.hpp"
#include "gbz/summation.hpp"

namespace gbz {

namespace {

constexpr std::int64_t kSegmentSize = std::int64_t{1} << 18;
constexpr std::array<char, 5> kCacheMagic = {'L', 'A', 'M', 'B', '1'};

std::vector<std::int64_t> small_primes(std::int64_t limit) {
  std::vector<char> composite(static_cast<std::size_t>(limit + 1), 0);
  std::vector<std::int64_t> primes;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

void put_u64_le(std::ostream& out, std::uint64_t v) {
  std::array<unsigned char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b.data()), 8);
}

std::uint64_t get_u64_le(const unsigned char* b) {
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

}  // namespace

double LambdaTable::lambda(std::int64_t n) const {
  if (n < 1 || n > n_max_) {
    throw RangeError("Λ(" + std::to_string(n) + ") outside table of size " +
                     std::to_string(n_max_));
  }
  return values_[static_cast<std::size_t>(n)];
}

std::size_t LambdaTable::support_count_upto(double x) const noexcept {
  if (x < 2.0) return 0;
  const double fx = std::floor(x);
  auto it = std::upper_bound(support_.begin(), support_.end(), fx,
                             [](double v, std::uint32_t s) { return v < s; });
  return static_cast<std::size_t>(it - support_.begin());
}

void LambdaTable::finish() {
  psi_prefix_.assign(values_.size(), 0.0);
  support_.clear();
  KahanSum acc;
  for (std::size_t n = 1; n < values_.size(); ++n) {
    if (values_[n] > 0.0) {
      support_.push_back(static_cast<std::uint32_t>(n));
      acc.add(values_[n]);
    }
    psi_prefix_[n] = acc.value();
  }
}

LambdaTable build_lambda_table(std::int64_t n_max, std::int64_t cap) {
  if (n_max < 1) throw DomainError("n_max must be positive");
  if (n_max > cap) {
    throw SizeError("n_max " + std::to_string(n_max) + " exceeds cap " +
                    std::to_string(cap));
  }
  LambdaTable t;
  t.n_max_ = n_max;
  t.values_.assign(static_cast<std::size_t>(n_max + 1), 0.0);

  const std::int64_t root = isqrt(n_max);
  const auto base = small_primes(root);
  std::vector<char> composite(static_cast<std::size_t>(kSegmentSize));
  for (std::int64_t lo = 0; lo <= n_max; lo += kSegmentSize) {
    const std::int64_t hi = std::min(lo + kSegmentSize, n_max + 1);
    std::fill(composite.begin(), composite.end(), 0);
    for (std::int64_t p : base) {
      if (p * p >= hi) break;
      std::int64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::int64_t j = start; j < hi; j += p) composite[j - lo] = 1;
    }
    for (std::int64_t n = std::max<std::int64_t>(lo, 2); n < hi; ++n) {
      if (!composite[n - lo]) t.values_[n] = std::log(static_cast<double>(n));
    }
  }
  // Higher powers only exist for p <= √n_max.
  for (std::int64_t p : base) {
    const double lp = std::log(static_cast<double>(p));
    for (std::int64_t pk = p * p; pk <= n_max; pk *= p) {
      t.values_[pk] = lp;
      if (pk > n_max / p) break;
    }
  }
  t.finish();
  return t;
}

LambdaTable table_from_values(std::vector<double> values) {
  if (values.size() < 2) throw DomainError("table needs at least Λ(1)");
  values[0] = 0.0;
  LambdaTable t;
  t.n_max_ = static_cast<std::int64_t>(values.size()) - 1;
  t.values_ = std::move(values);
  t.finish();
  return t;
}

double psi(const LambdaTable& table, double x) {
  if (!(x <= static_cast<double>(table.n_max()))) {
    throw RangeError("ψ(" + std::to_string(x) + ") beyond table n_max " +
                     std::to_string(table.n_max()));
  }
  if (x < 2.0) return 0.0;
  return table.psi_prefix()[static_cast<std::size_t>(std::floor(x))];
}

double psi1(const LambdaTable& table, double x) {
  if (!(x <= static_cast<double>(table.n_max()))) {
    throw RangeError("ψ₁(" + std::to_string(x) + ") beyond table n_max " +
                     std::to_string(table.n_max()));
  }
  const auto vals = table.values();
  const auto sup = table.support();
  const std::size_t count = table.support_count_upto(x);
  KahanSum acc;
  for (std::size_t i = 0; i < count; ++i) {
    acc.add(vals[sup[i]] * (x - static_cast<double>(sup[i])));
  }
  return acc.value();
}

double remainder_R(const LambdaTable& table, double u) {
  return psi(table, u) - std::floor(u);
}

bool psi_envelope_ok(const LambdaTable& table) {
  const auto n = static_cast<double>(table.n_max());
  if (table.n_max() < 1000) return true;
  const double l = std::log(n);
  return std::abs(table.psi_prefix().back() - n) <= std::sqrt(n) * l * l;
}

void save_lambda_cache(const LambdaTable& table,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(kCacheMagic.data(), kCacheMagic.size());
  put_u64_le(out, static_cast<std::uint64_t>(table.n_max()));
  const auto vals = table.values();
  std::vector<unsigned char> buf(8 * 4096);
  for (std::size_t n = 1; n < vals.size();) {
    std::size_t k = 0;
    for (; k < 4096 && n < vals.size(); ++k, ++n) {
      const auto bits = std::bit_cast<std::uint64_t>(vals[n]);
      for (int b = 0; b < 8; ++b) {
        buf[8 * k + b] = static_cast<unsigned char>(bits >> (8 * b));
      }
    }
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(8 * k));
  }
  if (!out) throw IoError("write failed for " + path.string());
}

LambdaTable load_lambda_cache(const std::filesystem::path& path,
                              std::int64_t cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::array<char, 5> magic{};
  std::array<unsigned char, 8> head{};
  in.read(magic.data(), magic.size());
  in.read(reinterpret_cast<char*>(head.data()), head.size());
  if (!in || magic != kCacheMagic) {
    throw CorruptCacheError(path.string() + ": missing LAMB1 header");
  }
  const std::uint64_t n_max = get_u64_le(head.data());
  if (n_max < 1 || n_max > static_cast<std::uint64_t>(cap)) {
    throw CorruptCacheError(path.string() + ": implausible n_max " +
                            std::to_string(n_max));
  }
  std::vector<double> values(n_max + 1, 0.0);
  std::vector<unsigned char> buf(8 * 4096);
  for (std::uint64_t n = 1; n <= n_max;) {
    const std::uint64_t k = std::min<std::uint64_t>(4096, n_max + 1 - n);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(8 * k));
    if (static_cast<std::uint64_t>(in.gcount()) != 8 * k) {
      throw CorruptCacheError(path.string() + ": truncated payload");
    }
    for (std::uint64_t i = 0; i < k; ++i, ++n) {
      values[n] = std::bit_cast<double>(get_u64_le(&buf[8 * i]));
    }
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw CorruptCacheError(path.string() + ": trailing bytes");
  }

  // Structural check of every entry.
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const double v = values[n];
    if (!std::isfinite(v) || v < 0.0) {
      throw CorruptCacheError("entry " + std::to_string(n) + " not finite");
    }
    if (v == 0.0) continue;
    const auto p = static_cast<std::uint64_t>(std::llround(std::exp(v)));
    bool ok = p >= 2 && std::abs(v - std::log(static_cast<double>(p))) <= 1e-12;
    std::uint64_t m = n;
    while (ok && m % p == 0) m /= p;
    if (!ok || m != 1) {
      throw CorruptCacheError("entry " + std::to_string(n) +
                              " is not log of a prime-power base");
    }
  }
  // Exact agreement with a fresh sieve on a prefix catches wrong bases and
  // dropped prime powers that the structural check cannot see.
  const auto prefix = static_cast<std::int64_t>(std::min<std::uint64_t>(n_max, 1 << 16));
  const LambdaTable fresh = build_lambda_table(prefix, cap);
  for (std::int64_t n = 1; n <= prefix; ++n) {
    if (std::abs(fresh.values()[n] - values[n]) > 1e-12) {
      throw CorruptCacheError("entry " + std::to_string(n) +
                              " disagrees with the sieve");
    }
  }
  LambdaTable t = table_from_values(std::move(values));
  if (!psi_envelope_ok(t)) {
    throw CorruptCacheError(path.string() + ": ψ(n_max) outside envelope");
  }
  return t;
}

}  // namespace gbz
