// phase.hpp
//
// e^{iγL} for large γL. The product is split into its rounded value and the
// exact rounding error (fma two-product), and reduced modulo a two-part 2π,
// so the angle fed to sin/cos is accurate to a few ulps of the reduced value
// rather than of γL.

#pragma once

#include <cmath>
#include <complex>

namespace gbz {

inline constexpr double kTwoPiHi = 6.283185307179586;
inline constexpr double kTwoPiLo = 2.4492935982947064e-16;

// Above this magnitude a plain product loses more than ~1e-8 rad.
inline constexpr double kLargePhase = 1e8;

inline double reduced_phase(double gamma, double log_x) noexcept {
  const double p = gamma * log_x;
  const double err = std::fma(gamma, log_x, -p);
  const double k = std::nearbyint(p / kTwoPiHi);
  double r = std::fma(-k, kTwoPiHi, p);
  r = std::fma(-k, kTwoPiLo, r);
  return r + err;
}

inline std::complex<double> unit_phase(double gamma, double log_x) noexcept {
  const double r = reduced_phase(gamma, log_x);
  return {std::cos(r), std::sin(r)};
}

}  // namespace gbz
