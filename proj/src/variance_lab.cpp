#include "gbz/variance_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gbz/error.hpp"
#include "gbz/summation.hpp"

namespace gbz {

namespace {

// ∫_a^b u(t)² dt for u linear with u(b) = p, u(a) = q.
inline double linear_square_integral(double a, double b, double p, double q) {
  return (b - a) * (p * p + p * q + q * q) / 3.0;
}

void require_within(const LambdaTable& table, double reach, const char* what) {
  if (!(reach <= static_cast<double>(table.n_max()))) {
    throw RangeError(std::string(what) + " needs ψ up to " +
                     std::to_string(reach) + " but the table stops at " +
                     std::to_string(table.n_max()));
  }
}

double simpson_step(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double eps,
                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * eps) {
    return left + right + diff / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

}  // namespace

double H_exact(const LambdaTable& table, double x) {
  if (!(x >= 0.0)) throw DomainError("H(x) needs x >= 0");
  require_within(table, x, "H(x)");
  const auto sup = table.support();
  const auto prefix = table.psi_prefix();
  const std::size_t count = table.support_count_upto(x);
  KahanSum acc;
  double prev = 0.0;
  double c = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto s = static_cast<double>(sup[i]);
    acc.add(linear_square_integral(prev, s, s - c, prev - c));
    c = prefix[sup[i]];
    prev = s;
  }
  acc.add(linear_square_integral(prev, x, x - c, prev - c));
  return acc.value();
}

double J_range(const LambdaTable& table, double a, double b, double h) {
  if (!(h > 0.0)) throw DomainError("J needs h > 0");
  if (!(a >= 0.0 && b >= a)) throw DomainError("J needs 0 <= a <= b");
  require_within(table, b + h, "J(x,h)");
  const auto sup = table.support();
  const auto vals = table.values();

  // Events: t = n (ψ(t) jumps, D falls) and t = n - h (ψ(t+h) jumps, D rises).
  std::size_t i = table.support_count_upto(a);
  const std::size_t i_end = table.support_count_upto(b);
  std::size_t j = table.support_count_upto(a + h);
  const std::size_t j_end = table.support_count_upto(b + h);
  double D = psi(table, a + h) - psi(table, a);

  KahanSum acc;
  double prev = a;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  while (i < i_end || j < j_end) {
    const double ti = i < i_end ? static_cast<double>(sup[i]) : kInf;
    const double tj = j < j_end ? static_cast<double>(sup[j]) - h : kInf;
    const double pos = std::min(ti, tj);
    if (pos > b) break;
    if (pos > prev) {
      const double v = D - h;
      acc.add((pos - prev) * v * v);
      prev = pos;
    }
    if (ti == pos) D -= vals[sup[i++]];
    if (tj == pos) D += vals[sup[j++]];
  }
  const double v = D - h;
  acc.add((b - prev) * v * v);
  return acc.value();
}

double J_exact(const LambdaTable& table, double x, double h) {
  if (!(x >= 0.0)) throw DomainError("J(x,h) needs x >= 0");
  return J_range(table, 0.0, x, h);
}

double multiplicative_variance(const LambdaTable& table, double x,
                               double delta) {
  if (!(delta > 0.0)) throw DomainError("𝒥 needs δ > 0");
  if (!(x >= 0.0)) throw DomainError("𝒥 needs x >= 0");
  const double stretch = 1.0 + delta;
  require_within(table, stretch * x, "𝒥(x,δ)");
  const auto sup = table.support();
  const auto vals = table.values();

  // Events: t = n (ψ(t) jumps) and t = n/(1+δ) (ψ((1+δ)t) jumps).
  std::size_t i = 0;
  const std::size_t i_end = table.support_count_upto(x);
  std::size_t j = 0;
  const std::size_t j_end = table.support_count_upto(stretch * x);
  double D = 0.0;

  KahanSum acc;
  double prev = 0.0;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  while (i < i_end || j < j_end) {
    const double ti = i < i_end ? static_cast<double>(sup[i]) : kInf;
    const double tj = j < j_end ? static_cast<double>(sup[j]) / stretch : kInf;
    const double pos = std::min(ti, tj);
    if (pos > x) break;
    if (pos > prev) {
      acc.add(linear_square_integral(prev, pos, delta * pos - D,
                                     delta * prev - D));
      prev = pos;
    }
    if (ti == pos) D -= vals[sup[i++]];
    if (tj == pos) D += vals[sup[j++]];
  }
  acc.add(linear_square_integral(prev, x, delta * x - D, delta * prev - D));
  return acc.value();
}

double calJ_exact(const LambdaTable& table, double x, double delta) {
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("𝒥 needs 0 < δ <= 1");
  return multiplicative_variance(table, x, delta);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol, int max_depth) {
  if (b == a) return 0.0;
  // A composite pass fixes the tolerance scale and keeps a lucky agreement
  // on one coarse panel from ending the refinement early.
  constexpr int kPanels = 16;
  const double width = (b - a) / kPanels;
  std::vector<double> nodes(2 * kPanels + 1);
  for (int k = 0; k <= 2 * kPanels; ++k) nodes[k] = f(a + 0.5 * width * k);
  double scale = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    scale += width / 6.0 *
             (nodes[2 * p] + 4.0 * nodes[2 * p + 1] + nodes[2 * p + 2]);
  }
  const double eps = std::max(rel_tol * std::abs(scale), 1e-300) / kPanels;
  KahanSum acc;
  for (int p = 0; p < kPanels; ++p) {
    const double lo = a + width * p;
    const double hi = p + 1 == kPanels ? b : lo + width;
    const double whole = (hi - lo) / 6.0 *
                         (nodes[2 * p] + 4.0 * nodes[2 * p + 1] + nodes[2 * p + 2]);
    acc.add(simpson_step(f, lo, hi, nodes[2 * p], nodes[2 * p + 1],
                         nodes[2 * p + 2], whole, eps, max_depth));
  }
  return acc.value();
}

SaffariVaughanResult saffari_vaughan_check(
    const std::function<double(double, double, double)>& additive,
    const std::function<double(double, double)>& multiplicative, double x,
    double h) {
  if (!(h >= 1.0 && h <= x / 4.0)) {
    throw DomainError("Saffari–Vaughan check needs 1 <= h <= x/4");
  }
  const double lhs = additive(0.5 * x, x, h);
  const double inner = adaptive_simpson(
      [&](double delta) { return delta > 0.0 ? multiplicative(x, delta) : 0.0; },
      0.0, 8.0 * h / x, 1e-6);
  const double rhs = 2.0 * x / h * inner;
  return {lhs, rhs, lhs <= rhs * (1.0 + 1e-6)};
}

SaffariVaughanResult saffari_vaughan_check(const LambdaTable& table, double x,
                                           double h) {
  if (!(h >= 1.0 && h <= x / 4.0)) {
    throw DomainError("Saffari–Vaughan check needs 1 <= h <= x/4");
  }
  require_within(table, (1.0 + 8.0 * h / x) * x, "Saffari–Vaughan check");
  return saffari_vaughan_check(
      [&](double a, double b, double hh) { return J_range(table, a, b, hh); },
      [&](double xx, double d) { return multiplicative_variance(table, xx, d); },
      x, h);
}

const char* variance_kind_name(VarianceKind kind) {
  switch (kind) {
    case VarianceKind::kH:
      return "H";
    case VarianceKind::kJ:
      return "J";
    case VarianceKind::kCalJ:
      return "calJ";
  }
  return "?";
}

VarianceKind parse_variance_kind(const std::string& name) {
  if (name == "H") return VarianceKind::kH;
  if (name == "J") return VarianceKind::kJ;
  if (name == "calJ") return VarianceKind::kCalJ;
  throw DomainError("unknown variance kind '" + name + "' (H, J, calJ)");
}

double variance_normalizer(VarianceKind kind, double x, double param) {
  switch (kind) {
    case VarianceKind::kH:
      return x * x;
    case VarianceKind::kJ: {
      const double l = std::log(2.0 * x / param);
      return param * x * l * l;
    }
    case VarianceKind::kCalJ: {
      const double l = std::log(2.0 / param);
      return param * x * x * l * l;
    }
  }
  return 0.0;
}

VarianceCurve bound_ratio_curve(const LambdaTable& table, VarianceKind kind,
                                const std::vector<double>& xs,
                                const std::vector<double>& params) {
  if (xs.empty() || (kind != VarianceKind::kH && params.empty())) {
    throw DomainError("variance grid is empty");
  }
  VarianceCurve curve{kind, {}, 0.0};
  const std::vector<double> h_params{0.0};
  const auto& ps = kind == VarianceKind::kH ? h_params : params;
  for (double x : xs) {
    for (double p : ps) {
      double value = 0.0;
      switch (kind) {
        case VarianceKind::kH:
          value = H_exact(table, x);
          break;
        case VarianceKind::kJ:
          value = J_exact(table, x, p);
          break;
        case VarianceKind::kCalJ:
          value = calJ_exact(table, x, p);
          break;
      }
      const double norm = variance_normalizer(kind, x, p);
      const double ratio = value / norm;
      curve.rows.push_back({x, p, value, norm, ratio});
      curve.max_ratio = std::max(curve.max_ratio, ratio);
    }
  }
  return curve;
}

}  // namespace gbz
