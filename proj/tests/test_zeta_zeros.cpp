#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "gbz/error.hpp"
#include "gbz/lambda_sieve.hpp"
#include "gbz/zeta_zeros.hpp"
#include "oracles.hpp"

using namespace gbz;

namespace {

const std::vector<double> kFirstTen = {
    14.134725141734693, 21.022039638771555, 25.010857580145688,
    30.424876125859513, 32.935061587739189, 37.586178158825671,
    40.918719012147495, 43.327073280914999, 48.005150881167159,
    49.773832477672302};

ZeroTable parse(const std::string& text) {
  std::istringstream in(text);
  return parse_zeros(in, "inline");
}

const ZeroTable& full_table() {
  static const ZeroTable t = load_zeros(oracle::data_file("zeros_10k.txt"));
  return t;
}

}  // namespace

TEST_CASE("parsing zero files") {
  const auto one = parse("14.134725141734694\n");
  CHECK(one.size() == 1);
  CHECK(one.max_height == doctest::Approx(14.1347).epsilon(1e-5));
  CHECK(one.precision_digits == 15);

  const auto mixed = parse("# header\r\n\r\n  14.1347251417\r\n21.0220396388 \r\n");
  CHECK(mixed.size() == 2);
  CHECK(mixed.gammas[1] == doctest::Approx(21.0220396388));

  CHECK_THROWS_AS(parse(""), EmptyFileError);
  CHECK_THROWS_AS(parse("# only comments\n\n"), EmptyFileError);
  CHECK_THROWS_AS(parse("15.0\n14.0\n"), OrderError);
  CHECK_THROWS_AS(parse("14.5\n14.5\n"), OrderError);
  CHECK_THROWS_AS(parse("14.1x\n"), ParseError);
  CHECK_THROWS_AS(parse("-3\n"), ParseError);
  CHECK_THROWS_AS(parse("10.0\n"), DomainError);
  CHECK_THROWS_AS(load_zeros("/nonexistent/zeros.txt"), IoError);
}

TEST_CASE("counting zeros") {
  const auto t = make_zero_table(kFirstTen);
  CHECK(count_zeros(t, 0) == 0);
  CHECK(count_zeros(t, 14) == 0);
  CHECK(count_zeros(t, 15) == 1);
  CHECK(count_zeros(t, t.max_height) == 10);
  CHECK_THROWS_AS(count_zeros(t, 49.8), CoverageError);
}

TEST_CASE("Riemann–von Mangoldt main term") {
  CHECK(rvm_main_term(2 * std::numbers::pi) == doctest::Approx(-1.0));
  CHECK(rvm_main_term(4 * std::numbers::pi) == doctest::Approx(2 * std::log(2.0) - 2));
  CHECK(rvm_main_term(100) == doctest::Approx(28.127).epsilon(1e-4));
}

TEST_CASE("zero-count law on the bundled table") {
  const auto& t = full_table();
  REQUIRE(t.size() == 10000);
  CHECK(t.max_height == doctest::Approx(9877.782654005).epsilon(1e-9));
  for (double T = 20; T <= t.max_height; T *= 1.05) {
    CHECK(std::abs(count_law_deviation(t, T)) <= 2 * std::log(T));
  }
}

TEST_CASE("bundled table matches published ordinates") {
  const auto& t = full_table();
  for (std::size_t i = 0; i < kFirstTen.size(); ++i) {
    CHECK(t.gammas[i] == doctest::Approx(kFirstTen[i]).epsilon(1e-12));
  }
}

TEST_CASE("explicit constants") {
  const auto c = ExplicitConstants::standard();
  CHECK(c.log_2pi == doctest::Approx(1.8378770664093453));
  CHECK(c.zeta_prime_over_zeta_at_minus1 ==
        doctest::Approx(1.98505372440541115).epsilon(1e-15));
  CHECK(c.two_log2pi_minus_half == doctest::Approx(2 * 1.8378770664093453 - 0.5));
}

TEST_CASE("Fujii zero sum") {
  const auto one = make_zero_table({kFirstTen[0]});
  CHECK(fujii_zero_sum(one, 1.0, one.max_height) == doctest::Approx(-0.00984952258192).epsilon(1e-10));
  CHECK(fujii_zero_sum(ZeroTable{}, 5.0, 0) == 0.0);
  const auto ten = make_zero_table(kFirstTen);
  for (double N : {1.0, 10.0, 1234.5, 1e6}) {
    CHECK(fujii_zero_sum(ten, N, ten.max_height) ==
          doctest::Approx(oracle::fujii_zero_sum(kFirstTen, N)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(fujii_zero_sum(ten, 0.5, ten.max_height), DomainError);
}

TEST_CASE("tail estimate") {
  CHECK(tail_estimate(1e4, 1e4) == doctest::Approx(293.17).epsilon(1e-3));
  CHECK(tail_estimate(1, 1000) == doctest::Approx(0.0022).epsilon(0.01));
  CHECK(tail_estimate(100, 2000) < tail_estimate(100, 1000));
  CHECK_THROWS_AS(tail_estimate(10, 19), DomainError);

  const auto& t = full_table();
  for (double N : {10.0, 1000.0}) {
    for (double T1 : {100.0, 1000.0, 5000.0}) {
      const double change = fujii_zero_sum(t, N, t.max_height) - fujii_zero_sum(t, N, T1);
      CHECK(std::abs(change) <= tail_estimate(N, T1));
    }
  }
}

TEST_CASE("trivial-zero series") {
  CHECK(trivial_zero_series(1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  for (double x : {1.0 + 1e-9, 1.2, 1.499, 1.5, 2.0, 10.0, 1e4}) {
    double direct = 0.0;
    for (int k = 1; k < 2000000; ++k) {
      const double term = std::pow(x, 1.0 - 2 * k) / (2.0 * k * (2 * k - 1));
      direct += term;
      if (term < 1e-20) break;
    }
    CHECK(trivial_zero_series(x) == doctest::Approx(direct).epsilon(1e-6));
  }
  CHECK_THROWS_AS(trivial_zero_series(0.9), DomainError);
}

TEST_CASE("explicit formula for ψ₁") {
  const auto c = ExplicitConstants::standard();
  const auto& t = full_table();
  const auto tab = build_lambda_table(1000);
  for (double x : {100.5, 1000.0}) {
    const double got = psi1_explicit(c, t, x, t.max_height);
    CHECK(std::abs(got - psi1(tab, x)) <= 2 * tail_estimate(x, t.max_height));
  }
  const double empty = psi1_explicit(c, ZeroTable{}, 2.0, 0);
  CHECK(empty == doctest::Approx(2.0 - 2 * c.log_2pi + c.zeta_prime_over_zeta_at_minus1 -
                                 trivial_zero_series(2.0)));
}

TEST_CASE("Landau's formula") {
  const auto& t = full_table();
  const double T = 5000;
  const double at2 = landau_sum(t, 2, T);
  const double at4 = landau_sum(t, 4, T);
  const double at6 = landau_sum(t, 6, T);
  CHECK(landau_prediction(2, T) == doctest::Approx(-T * std::log(2.0) / std::numbers::pi));
  CHECK(landau_prediction(6, T) == 0.0);
  CHECK(std::abs(at2 / landau_prediction(2, T) - 1.0) <= 0.2);
  CHECK(std::abs(at6) <= 0.2 * T * std::log(2.0) / std::numbers::pi);
  CHECK(at4 < 0.0);
  CHECK(std::abs(at4 / at2) > 0.5);
  CHECK(std::abs(at4 / at2) < 2.0);
  CHECK(landau_sum(ZeroTable{}, 2, 0) == 0.0);
}

TEST_CASE("von Mangoldt by trial division") {
  for (long long n = 1; n <= 2000; ++n) CHECK(von_mangoldt(n) == oracle::lambda(n));
}

TEST_CASE("a(s)") {
  const double d = 0.5;
  CHECK(std::abs(a_of_s(d, 0.0) - std::log1p(d)) < 1e-15);
  CHECK(std::abs(a_of_s(d, 1.0) - d) < 1e-15);
  const double kappa = 0.5 * std::log1p(d);
  for (double t : {1.0, 3.0, 100.0}) {
    const auto a = a_of_s(d, {0.0, t});
    const double s = std::sin(kappa * t) / t;
    CHECK(std::norm(a) == doctest::Approx(4 * s * s).epsilon(1e-12));
  }
  // Small s, against expm1 on the real axis.
  for (double f : {0.999, 1.001, 1e-3}) {
    const double s = 1e-4 / std::log1p(d) * f;
    const double want = std::expm1(s * std::log1p(d)) / s;
    CHECK(std::abs(a_of_s(d, s) - want) < 1e-16);
  }
}

TEST_CASE("short-interval explicit formula") {
  CHECK(short_interval_zero_sum(ZeroTable{}, 100, 0.1, 0) == 0.0);
  const auto& t = full_table();
  const auto tab = build_lambda_table(2000);
  const double Z = t.max_height;
  const double x = 1000.5, delta = 0.05;
  const double sieve = psi(tab, (1 + delta) * x) - psi(tab, x) - delta * x;
  const double zeros = short_interval_zero_sum(t, x, delta, Z);
  CHECK(std::abs(sieve - zeros) <= 5 * explicit_error_bound(x, delta, Z));
  CHECK_THROWS_AS(short_interval_zero_sum(t, 1.5, 0.1, Z), DomainError);
  CHECK_THROWS_AS(short_interval_zero_sum(t, 100, 1.5, Z), DomainError);
}

TEST_CASE("ordinates past 10^8 radians keep their phase") {
  // γ·log x near 2e9: the compensated reduction must agree with a long-double
  // reference to well under 1e-6.
  const double g = 9877.782654005, lx = std::log(1e90);
  const long double ref = static_cast<long double>(g) * static_cast<long double>(lx);
  const double r = std::remainder(static_cast<double>(std::fmod(ref, 2.0L * std::numbers::pi_v<long double>)),
                                  2 * std::numbers::pi);
  const auto z = std::polar(1.0, r);
  const auto zt = make_zero_table({g});
  CHECK(landau_sum(zt, 1e90, g) == doctest::Approx(2 * 1e45 * z.real()).epsilon(1e-6));
}
