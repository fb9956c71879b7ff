#include "gbz/pair_correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "gbz/error.hpp"
#include "gbz/phase.hpp"
#include "gbz/simd/kernels.hpp"
#include "gbz/summation.hpp"
#include "gbz/variance_lab.hpp"

namespace gbz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Phases {
  std::vector<double> c;
  std::vector<double> s;
  bool large = false;
};

Phases phases_for(std::span<const double> gammas, double log_x) {
  Phases p;
  p.c.resize(gammas.size());
  p.s.resize(gammas.size());
  for (std::size_t j = 0; j < gammas.size(); ++j) {
    const auto z = unit_phase(gammas[j], log_x);
    p.c[j] = z.real();
    p.s[j] = z.imag();
    if (std::abs(gammas[j] * log_x) > kLargePhase) p.large = true;
  }
  return p;
}

// Runs body(i) for every row, split into contiguous blocks across threads.
template <class Body>
void for_rows(std::size_t rows, unsigned threads, Body body) {
  const unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(rows)));
  if (t <= 1) {
    for (std::size_t i = 0; i < rows; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (rows + t - 1) / t;
  for (unsigned k = 0; k < t; ++k) {
    const std::size_t lo = k * chunk;
    const std::size_t hi = std::min(rows, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([=] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

CorrelationResult finish(CorrelationResult r, const std::vector<double>& re,
                         const std::vector<double>& im) {
  const double F = pairwise_sum(re);
  const double imag = pairwise_sum(im);
  if (std::abs(imag) > 1e-6 * std::abs(F) + 1e-9) {
    throw Error(ErrorKind::kDomain,
                "pair sum left an imaginary residue of " + std::to_string(imag));
  }
  r.F_value = F;
  r.main_term = montgomery_main_term(r.x, r.T);
  r.ratio = r.x >= 1.0 && r.x <= r.T ? F / r.main_term
                                     : std::numeric_limits<double>::quiet_NaN();
  return r;
}

CorrelationResult pair_sum(const ZeroTable& table, double x, double T,
                           double window, PairMode mode,
                           const PairOptions& options) {
  if (!(x > 0.0)) throw DomainError("F(x,T) needs x > 0");
  const auto g = table.upto(T);
  const std::size_t m = g.size();
  if (mode == PairMode::kExact && m > options.exact_cap) {
    throw SizeError(std::to_string(m) + " zeros exceed the exact-mode cap of " +
                    std::to_string(options.exact_cap) +
                    "; use the windowed mode");
  }
  const Phases ph = phases_for(g, std::log(x));
  const auto& k = simd::kernels();
  std::vector<double> re(m), im(m);
  for_rows(m, options.threads, [&](std::size_t i) {
    std::size_t lo = 0;
    std::size_t hi = m;
    if (mode == PairMode::kWindowed) {
      lo = static_cast<std::size_t>(
          std::lower_bound(g.begin(), g.end(), g[i] - window) - g.begin());
      hi = static_cast<std::size_t>(
          std::upper_bound(g.begin(), g.end(), g[i] + window) - g.begin());
    }
    const auto a = k.pair_row(g[i], ph.c[i], ph.s[i], g.data() + lo,
                              ph.c.data() + lo, ph.s.data() + lo, hi - lo);
    re[i] = a.re;
    im[i] = a.im;
  });

  CorrelationResult r;
  r.x = x;
  r.T = T;
  r.mode = mode;
  r.window = mode == PairMode::kWindowed ? window : 0.0;
  r.zeros = m;
  r.large_phase = ph.large;
  if (mode == PairMode::kWindowed && m > 1 && g[m - 1] - g[0] > window) {
    const double l = std::max(std::log(T), 1.0);
    r.truncation_bound = static_cast<double>(m) * 16.0 * l *
                         (1.0 / window + 1.0 / (window * window));
  }
  return finish(r, re, im);
}

// Σ_{k>=0} 2 log(base+k+1) / (W+k)²: ordinates at distance > W from t, at
// most 2 log(height) per unit interval, each weighted by at most 1/u².
double beyond_window_mass(double base, double W) {
  constexpr int kTerms = 100000;
  KahanSum acc;
  for (int k = 0; k < kTerms; ++k) {
    const double u = W + k;
    acc.add(2.0 * std::log(base + k + 1.0) / (u * u));
  }
  const double K = kTerms;
  acc.add(2.0 * (std::log(2.0 * (base + W + K)) + 1.0) / K);
  return acc.value();
}

}  // namespace

double weight_w(double u) noexcept { return 4.0 / (4.0 + u * u); }

double montgomery_main_term(double x, double T) {
  const double lt = std::log(T);
  return T / kTwoPi * (lt * lt / (x * x) + std::log(x));
}

CorrelationResult F_exact(const ZeroTable& table, double x, double T,
                          const PairOptions& options) {
  return pair_sum(table, x, T, 0.0, PairMode::kExact, options);
}

CorrelationResult F_windowed(const ZeroTable& table, double x, double T,
                             double window, const PairOptions& options) {
  if (!(window > 0.0)) throw DomainError("the pair window must be positive");
  return pair_sum(table, x, T, window, PairMode::kWindowed, options);
}

double montgomery_ratio(const CorrelationResult& result) {
  if (!(result.x >= 1.0 && result.x <= result.T)) {
    throw DomainError("montgomery_ratio needs 1 <= x <= T");
  }
  return result.F_value / montgomery_main_term(result.x, result.T);
}

const char* pair_mode_name(PairMode mode) noexcept {
  return mode == PairMode::kExact ? "exact" : "windowed";
}

double default_G_height(double delta) {
  const double l = std::log(2.0 / delta);
  return 2.0 * l * l / delta;
}

GResult G_numeric(const ZeroTable& table, double x, double delta, double U,
                  double window, double step) {
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("G needs 0 < δ <= 1");
  if (!(x > 0.0)) throw DomainError("G needs x > 0");
  if (!(U > 0.0) || !(window > 0.0) || !(step > 0.0)) {
    throw DomainError("G needs positive U, window and step");
  }
  GResult out;
  out.U = U;
  if (table.empty()) return out;
  if (U > table.max_height - window) {
    throw CoverageError("G up to U = " + std::to_string(U) + " with window " +
                        std::to_string(window) + " needs zeros past " +
                        std::to_string(table.max_height));
  }
  const auto g = table.upto(U + window);
  const Phases ph = phases_for(g, std::log(x));
  const auto& k = simd::kernels();
  const double kappa = 0.5 * std::log1p(delta);

  std::size_t n = static_cast<std::size_t>(std::ceil(U / step));
  n += n % 2;
  n = std::max<std::size_t>(n, 2);
  const double h = U / static_cast<double>(n);
  const double eps = beyond_window_mass(U + window, window);

  KahanSum fine, coarse, spill;
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = h * static_cast<double>(i);
    const double sk = t == 0.0 ? kappa : std::sin(kappa * t) / t;
    const double kern = sk * sk;
    const auto lo = static_cast<std::size_t>(
        std::lower_bound(g.begin(), g.end(), t - window) - g.begin());
    const auto hi = static_cast<std::size_t>(
        std::upper_bound(g.begin(), g.end(), t + window) - g.begin());
    const auto pos = k.lorentz_sum(t, g.data() + lo, ph.c.data() + lo,
                                   ph.s.data() + lo, hi - lo);
    double re = pos.re;
    double im = pos.im;
    // Zeros at -γ within the window: conj of the positive-side sum at -t.
    const auto nhi = static_cast<std::size_t>(
        std::upper_bound(g.begin(), g.end(), window - t) - g.begin());
    if (nhi > 0) {
      const auto neg = k.lorentz_sum(-t, g.data(), ph.c.data(), ph.s.data(), nhi);
      re += neg.re;
      im -= neg.im;
    }
    const double mag = std::hypot(re, im);
    const double f = kern * mag * mag;
    const double end = (i == 0 || i == n) ? 0.5 : 1.0;
    fine.add(end * f);
    spill.add(end * kern * eps * (2.0 * mag + eps));
    if (i % 2 == 0) coarse.add(((i == 0 || i == n) ? 0.5 : 1.0) * f);
  }
  const double t_h = h * fine.value();
  const double t_2h = 2.0 * h * coarse.value();
  out.value = t_h;
  out.quadrature_error = std::abs(t_h - t_2h);
  out.window_error = h * spill.value();
  const double lu = std::log(U);
  out.tail_error = lu * lu / U;
  return out;
}

Lemma2Result lemma2_check(const LambdaTable& table, const ZeroTable& zeros,
                          double x, double delta, double window, double step) {
  if (!(x >= 1.0)) throw DomainError("lemma2_check needs x >= 1");
  if (!(delta >= 1.0 / x && delta <= 1.0)) {
    throw DomainError("lemma2_check needs 1/x <= δ <= 1");
  }
  Lemma2Result r;
  r.lhs = calJ_exact(table, x, delta);
  const double U_cap = zeros.max_height - window;
  if (!zeros.empty() && !(U_cap > 0.0)) {
    throw CoverageError("zero table too short for a G window of " +
                        std::to_string(window));
  }
  const double U = zeros.empty() ? default_G_height(delta)
                                 : std::min(default_G_height(delta), U_cap);
  r.G = G_numeric(zeros, x, delta, U, window, step);
  r.x2G = x * x * r.G.value;
  r.delta_x2 = delta * x * x;
  r.holds = r.lhs <= 100.0 * (r.x2G + r.delta_x2);
  return r;
}

}  // namespace gbz
