// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "wavelab/gas_model.hpp"
#include "wavelab/root_finding.hpp"
#include "wavelab/wave_curves.hpp"
#include "wavelab/wave_kernels.hpp"

namespace wavelab {

enum class Regime { BelowFiveThirds, AtFiveThirds, AboveFiveThirds };

/// gamma == 5/3 corresponds to a == 1/4; within this band of it the root of
/// alpha collides with 1 and the regime is treated as the boundary case.
inline constexpr double regime_band = 1e-10;

inline Regime regime_of(const GasConstants& gas) {
  if (std::abs(gas.a - 0.25) < regime_band) return Regime::AtFiveThirds;
  return gas.a < 0.25 ? Regime::BelowFiveThirds : Regime::AboveFiveThirds;
}

/// M(q) = sqrt(q phi_bwd(q)): velocity-scale transfer across a backward
/// wave.  Increasing, concave, M(1) = 1.
inline double aux_M(double q, const GasConstants& gas) {
  detail::require_positive(q, "aux_M");
  if (q <= 1.0) return std::pow(q, gas.zeta);
  return std::sqrt((q + gas.a * q * q) / (q + gas.a));
}

/// N(q) = sqrt(q phi_fwd(q)); same branches as M with conditions swapped.
inline double aux_N(double q, const GasConstants& gas) {
  detail::require_positive(q, "aux_N");
  if (q >= 1.0) return std::pow(q, gas.zeta);
  return std::sqrt((q + gas.a * q * q) / (q + gas.a));
}

/// Logarithmic derivatives m(q) = q M'(q)/M(q) and n(q) = m(1/q); both take
/// values in [zeta, 1/2).
inline std::pair<double, double> log_derivative_kernels(double q,
                                                        const GasConstants& gas) {
  detail::require_positive(q, "log_derivative_kernels");
  auto m = [&](double s) {
    if (s <= 1.0) return gas.zeta;
    return gas.a * (1.0 + 2.0 * gas.a * s + s * s) /
           (2.0 * (s + gas.a) * (1.0 + gas.a * s));
  };
  return {m(q), m(1.0 / q)};
}

/// ell(q) = q psi_bwd'(q) / psi_bwd(q); vertical asymptote at q == 1.
inline double aux_ell(double q, const GasConstants& gas) {
  detail::require_positive(q, "aux_ell");
  if (in_tie_band(q))
    throw std::invalid_argument("aux_ell: undefined at q == 1 (asymptote)");
  if (q < 1.0) {
    const double qz = std::pow(q, gas.zeta);
    return gas.zeta * qz / (qz - 1.0);
  }
  return q * (q + 2.0 * gas.a + 1.0) / (2.0 * (q - 1.0) * (q + gas.a));
}

/// A(q, xi) = (1 + a q + a^2 xi) / (a^2 + a q + xi); A(q, 1) == 1.
inline double aux_A(double q, double xi_arg, const GasConstants& gas) {
  if (!(q > 0.0) || !(xi_arg > 0.0))
    throw std::invalid_argument("aux_A: arguments must be positive");
  return (1.0 + gas.a * q + gas.a * gas.a * xi_arg) /
         (gas.a * gas.a + gas.a * q + xi_arg);
}

/// D(q) = q^(1/gamma) (1 + a q)/(q + a); strictly increasing, D(1) = 1.
inline double aux_D(double q, const GasConstants& gas) {
  if (!(q > 0.0)) throw std::invalid_argument("aux_D: q must be positive");
  return std::pow(q, 1.0 / gas.gamma) * (1.0 + gas.a * q) / (q + gas.a);
}

/// E(x) = (1 + a x)/(x + a).
inline double aux_E(double x, const GasConstants& gas) {
  if (!(x > 0.0)) throw std::invalid_argument("aux_E: x must be positive");
  return (1.0 + gas.a * x) / (x + gas.a);
}

/// delta = D^{-1}, by bracketed root finding on the monotone D.  D'(1) = 0,
/// so the inversion loses half its digits as d approaches 1; the fixed
/// point itself is returned exactly.
inline double aux_D_inverse(double d, const GasConstants& gas) {
  if (!(d > 0.0))
    throw std::invalid_argument("aux_D_inverse: value must be positive");
  if (d == 1.0) return 1.0;
  const double guess = d >= 1.0 ? std::pow(d / gas.a, gas.gamma)
                                : std::pow(d * gas.a, gas.gamma);
  return solve_increasing([&](double q) { return aux_D(q, gas) - d; }, guess,
                          1e-13)
      .x;
}

/// alpha(q) = psi_fwd(q) - psi_bwd(q).  Vanishes at 1 (tangentially for
/// gamma != 5/3) and at one further root y0.
inline double alpha(double q, const GasConstants& gas) {
  detail::require_positive(q, "alpha");
  return psi(Direction::Forward, q, gas) - psi(Direction::Backward, q, gas);
}

struct AlphaRootInfo {
  double y0;  ///< the root of alpha distinct from 1 (== 1 when gamma == 5/3)
  double x0;  ///< 1 / y0
  Regime regime;
};

inline AlphaRootInfo alpha_roots(const GasConstants& gas) {
  const Regime regime = regime_of(gas);
  if (regime == Regime::AtFiveThirds) return {1.0, 1.0, regime};

  // alpha crosses zero transversally exactly once: below 1 for gamma < 5/3,
  // above 1 for gamma > 5/3.  Coarse log scan, then bracketed refinement.
  // q = 1 is a triple root, so samples too close to it are rounding noise;
  // sign tracking only arms once |alpha| clears a noise floor built from
  // the magnitudes of the two velocity kernels it subtracts.
  double lo, hi;
  if (regime == Regime::BelowFiveThirds) {
    lo = 1e-12;
    hi = 1.0 - 1e-9;
  } else {
    lo = 1.0 + 1e-9;
    hi = 1e12;
  }
  const int n = 4000;
  const double log_lo = std::log(lo), log_hi = std::log(hi);
  double x_prev = 0.0, f_prev = 0.0;
  bool armed = false;
  double y0 = 0.0;
  bool found = false;
  for (int i = 0; i <= n; ++i) {
    const double x = i == 0 ? lo
                            : (i == n ? hi
                                      : std::exp(log_lo +
                                                 (log_hi - log_lo) * i / n));
    const double pf = psi(Direction::Forward, x, gas);
    const double pb = psi(Direction::Backward, x, gas);
    const double fx = pf - pb;
    const double noise = 64.0 * std::numeric_limits<double>::epsilon() *
                         (std::abs(pf) + std::abs(pb));
    if (!armed) {
      if (std::abs(fx) > noise) {
        armed = true;
        x_prev = x;
        f_prev = fx;
      }
      continue;
    }
    if (fx == 0.0) {
      y0 = x;
      found = true;
      break;
    }
    if (std::signbit(fx) != std::signbit(f_prev)) {
      y0 = find_root_bracketed([&](double q) { return alpha(q, gas); }, x_prev,
                               x, f_prev, fx, 1e-14)
               .x;
      found = true;
      break;
    }
    x_prev = x;
    f_prev = fx;
  }
  if (!found)
    throw std::runtime_error("alpha_roots: no sign change located");
  return {y0, 1.0 / y0, regime};
}

/// Omega = sqrt(gamma_fn) on (a, 1); strictly decreasing from +inf to 1.
inline double omega(double s, const GasConstants& gas) {
  if (!(s > gas.a && s < 1.0))
    throw std::domain_error("omega: argument must lie in (a, 1)");
  return std::sqrt(gamma_fn(s, gas));
}

/// Inverse of omega for z > 1, by bisection on the monotone domain.
inline double omega_inverse(double z, const GasConstants& gas) {
  if (z == 1.0) return 1.0;
  if (!(z > 1.0)) throw std::domain_error("omega_inverse: need z >= 1");
  // omega decreases in s, so log omega(s) - log z is decreasing; negate.
  auto f = [&](double s) { return -(0.5 * log_gamma_fn(s, gas) - std::log(z)); };
  double lo = gas.a, hi = 1.0;
  // Move endpoints strictly inside the open domain.
  double lo_in = gas.a + (1.0 - gas.a) * 1e-15;
  double f_lo = f(lo_in), f_hi;
  double hi_in = 1.0 - 1e-16;
  f_hi = f(hi_in);
  if (std::signbit(f_lo) == std::signbit(f_hi))
    throw std::runtime_error("omega_inverse: bracketing failed");
  (void)lo;
  (void)hi;
  return find_root_bracketed(f, lo_in, hi_in, f_lo, f_hi, 1e-13).x;
}

/// Lambda(z) = xi_bwd(omega^{-1}(z)); increasing and concave for z > 1.
inline double lambda_fn(double z, const GasConstants& gas) {
  if (z == 1.0) return 0.0;
  if (!(z > 1.0)) throw std::domain_error("lambda_fn: need z >= 1");
  return xi(Direction::Backward, omega_inverse(z, gas), gas);
}

/// v(x) = (nu sqrt(x+a) + kappa (x-1)) / sqrt(x + a x^2); v(1) = nu,
/// strictly decreasing toward kappa/sqrt(a).
inline double v_fn(double x, const GasConstants& gas) {
  if (!(x > 0.0)) throw std::invalid_argument("v_fn: x must be positive");
  return (gas.nu * std::sqrt(x + gas.a) + gas.kappa * (x - 1.0)) /
         std::sqrt(x + gas.a * x * x);
}

}  // namespace wavelab
