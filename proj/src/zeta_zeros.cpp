#include "gbz/zeta_zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

#include "gbz/error.hpp"
#include "gbz/phase.hpp"
#include "gbz/summation.hpp"

namespace gbz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// log A, Glaisher–Kinkelin.
constexpr double kLogGlaisher = 0.24875447703378426;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double distance_to_integer(double u) { return std::abs(u - std::nearbyint(u)); }

}  // namespace

std::span<const double> ZeroTable::upto(double T) const {
  if (T > max_height) {
    throw CoverageError("height " + std::to_string(T) +
                        " beyond zero table max_height " +
                        std::to_string(max_height));
  }
  const auto it = std::upper_bound(gammas.begin(), gammas.end(), T);
  return {gammas.data(), static_cast<std::size_t>(it - gammas.begin())};
}

ZeroTable make_zero_table(std::vector<double> gammas, std::string source,
                          int precision_digits) {
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    if (!(gammas[i] > 0.0) || !std::isfinite(gammas[i])) {
      throw ParseError("zero ordinate #" + std::to_string(i + 1) +
                       " is not a positive number");
    }
    if (i > 0 && !(gammas[i] > gammas[i - 1])) {
      throw OrderError("zero ordinates not strictly increasing at #" +
                       std::to_string(i + 1));
    }
  }
  if (!gammas.empty() && !(gammas.front() > 14.0)) {
    throw DomainError("first ordinate " + std::to_string(gammas.front()) +
                      " is below the first zeta zero");
  }
  ZeroTable t;
  t.max_height = gammas.empty() ? 0.0 : gammas.back();
  t.gammas = std::move(gammas);
  t.source = std::move(source);
  t.precision_digits = precision_digits;
  return t;
}

ZeroTable parse_zeros(std::istream& in, const std::string& source) {
  std::vector<double> gammas;
  std::string line;
  std::size_t line_no = 0;
  int digits = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec != std::errc{} || ptr != body.data() + body.size()) {
      throw ParseError(source + ":" + std::to_string(line_no) +
                       ": malformed number '" + std::string(body) + "'");
    }
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ParseError(source + ":" + std::to_string(line_no) +
                       ": ordinate must be positive");
    }
    if (!gammas.empty() && !(v > gammas.back())) {
      throw OrderError(source + ":" + std::to_string(line_no) +
                       ": ordinate not greater than the previous one");
    }
    const auto dot = body.find('.');
    if (dot != std::string_view::npos) {
      digits = std::max(digits, static_cast<int>(body.size() - dot - 1));
    }
    gammas.push_back(v);
  }
  if (gammas.empty()) throw EmptyFileError(source + ": no zero ordinates");
  return make_zero_table(std::move(gammas), source, digits);
}

ZeroTable load_zeros(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zero file " + path.string());
  return parse_zeros(in, path.string());
}

std::size_t count_zeros(const ZeroTable& table, double T) {
  return table.upto(T).size();
}

double rvm_main_term(double T) {
  const double u = T / kTwoPi;
  return u * std::log(u) - u;
}

double count_law_deviation(const ZeroTable& table, double T) {
  return static_cast<double>(count_zeros(table, T)) - rvm_main_term(T) - 0.875;
}

ExplicitConstants ExplicitConstants::standard() noexcept {
  const double log_2pi = std::log(kTwoPi);
  return {log_2pi, 12.0 * kLogGlaisher - 1.0, 2.0 * log_2pi - 0.5};
}

double fujii_zero_sum(const ZeroTable& table, double N, double T) {
  if (!(N >= 1.0)) throw DomainError("fujii_zero_sum needs N >= 1");
  const auto gammas = table.upto(T);
  const double log_n = std::log(N);
  const double scale = N * std::sqrt(N);
  KahanSum acc;
  for (double g : gammas) {
    const std::complex<double> rho(0.5, g);
    const std::complex<double> term =
        unit_phase(g, log_n) / (rho * (rho + 1.0));
    acc.add(term.real());
  }
  return 2.0 * scale * acc.value();
}

double tail_estimate(double N, double T) {
  if (!(T >= 20.0)) throw DomainError("tail_estimate needs T >= 20");
  return N * std::sqrt(N) * std::log(T) / (kPi * T);
}

double trivial_zero_series(double x) {
  if (!(x >= 1.0)) throw DomainError("trivial_zero_series needs x >= 1");
  if (x < 1.5) {
    // Closed form: artanh(1/x) + (x/2) log(1 - 1/x²).
    const double y = 1.0 / x;
    const double tail = x == 1.0 ? 0.0 : 0.5 * x * std::log1p(-y * y);
    return x == 1.0 ? std::numbers::ln2 : std::atanh(y) + tail;
  }
  const double inv_x2 = 1.0 / (x * x);
  double power = 1.0 / x;
  double sum = 0.0;
  for (int k = 1; k < 1000; ++k) {
    const double term = power / (2.0 * k * (2.0 * k - 1.0));
    sum += term;
    if (term < 1e-18) break;
    power *= inv_x2;
  }
  return sum;
}

double psi1_explicit(const ExplicitConstants& constants, const ZeroTable& table,
                     double x, double T) {
  if (!(x >= 1.0)) throw DomainError("psi1_explicit needs x >= 1");
  return 0.5 * x * x - fujii_zero_sum(table, x, T) - constants.log_2pi * x +
         constants.zeta_prime_over_zeta_at_minus1 - trivial_zero_series(x);
}

double landau_sum(const ZeroTable& table, double x, double T) {
  if (!(x > 1.0)) throw DomainError("landau_sum needs x > 1");
  const auto gammas = table.upto(T);
  const double log_x = std::log(x);
  KahanSum acc;
  for (double g : gammas) acc.add(std::cos(reduced_phase(g, log_x)));
  return 2.0 * std::sqrt(x) * acc.value();
}

double von_mangoldt(long long n) {
  if (n < 2) return 0.0;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
  }
  return std::log(static_cast<double>(n));
}

double landau_prediction(double x, double T) {
  const double lam = x == std::floor(x) ? von_mangoldt(static_cast<long long>(x)) : 0.0;
  return -T * lam / kPi;
}

std::complex<double> a_of_s(double delta, std::complex<double> s) {
  const double L = std::log1p(delta);
  if (s == 0.0) return L;
  // e^z - 1 without cancellation for small |z|.
  const std::complex<double> z = s * L;
  const double half = std::sin(0.5 * z.imag());
  const std::complex<double> em1(std::expm1(z.real()) * std::cos(z.imag()) - 2.0 * half * half,
                                 std::exp(z.real()) * std::sin(z.imag()));
  return em1 / s;
}

double short_interval_zero_sum(const ZeroTable& table, double t, double delta,
                               double Z) {
  if (!(t >= 2.0)) throw DomainError("short_interval_zero_sum needs t >= 2");
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw DomainError("short_interval_zero_sum needs 0 < δ <= 1");
  }
  const auto gammas = table.upto(Z);
  const double log_t = std::log(t);
  KahanSum acc;
  for (double g : gammas) {
    const std::complex<double> term =
        a_of_s(delta, {0.5, g}) * unit_phase(g, log_t);
    acc.add(term.real());
  }
  return -2.0 * std::sqrt(t) * acc.value();
}

double explicit_error_bound(double t, double delta, double Z) {
  const double log_t = std::log(t);
  const double lz = std::log(t * Z);
  auto near_integer = [&](double u) {
    const double d = distance_to_integer(u);
    return d == 0.0 ? 1.0 : std::min(1.0, t / (Z * d));
  };
  return t * lz * lz / Z + log_t * near_integer(t) +
         log_t * near_integer((1.0 + delta) * t);
}

}  // namespace gbz
