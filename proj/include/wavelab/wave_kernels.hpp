// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <stdexcept>

#include "wavelab/gas_model.hpp"

namespace wavelab {

/// Acoustic family: backward waves run left (negative characteristic
/// speed), forward waves run right.
enum class Direction { Backward, Forward };

namespace detail {

inline void require_positive(double q, const char* who) {
  if (!(q > 0.0) || !std::isfinite(q))
    throw std::domain_error(std::string(who) + ": strength must be in (0, inf)");
}

}  // namespace detail

/// True when a pressure-ratio strength q lies on the shock branch of the
/// given family.  Backward waves shock for q > 1, forward waves for q < 1;
/// q == 1 evaluates on the rarefaction branch for both.
inline bool pressure_branch_is_shock(Direction dir, double q) {
  return dir == Direction::Backward ? q > 1.0 : q < 1.0;
}

/// Specific-volume ratio across an acoustic wave with pressure ratio q.
inline double phi(Direction dir, double q, const GasConstants& gas) {
  detail::require_positive(q, "phi");
  if (pressure_branch_is_shock(dir, q)) return (1.0 + gas.a * q) / (q + gas.a);
  return std::pow(q, -1.0 / gas.gamma);
}

/// Scaled velocity jump across an acoustic wave with pressure ratio q.
/// The rarefaction branch is evaluated with expm1 so the kernel keeps full
/// relative accuracy near q == 1.
inline double psi(Direction dir, double q, const GasConstants& gas) {
  detail::require_positive(q, "psi");
  if (pressure_branch_is_shock(dir, q))
    return gas.kappa * (q - 1.0) / std::sqrt(q + gas.a);
  return gas.nu * std::expm1(gas.zeta * std::log(q));
}

/// Shock compression ratio bound: specific-volume strengths live in
/// (a, inf) for backward waves and (0, 1/a) for forward waves.
inline void require_volume_domain(Direction dir, double q,
                                  const GasConstants& gas, const char* who) {
  bool ok = std::isfinite(q) &&
            (dir == Direction::Backward ? q > gas.a
                                        : (q > 0.0 && q < 1.0 / gas.a));
  if (!ok)
    throw std::domain_error(std::string(who) +
                            ": volume strength outside the admissible range");
}

/// True when a specific-volume strength lies on the shock branch: backward
/// waves compress (q < 1), forward waves have q > 1.
inline bool volume_branch_is_shock(Direction dir, double q) {
  return dir == Direction::Backward ? q < 1.0 : q > 1.0;
}

/// Scaled velocity jump across an acoustic wave with specific-volume
/// ratio q (entropy variables).
inline double xi(Direction dir, double q, const GasConstants& gas) {
  require_volume_domain(dir, q, gas, "xi");
  if (volume_branch_is_shock(dir, q))
    return std::sqrt(gas.a + 1.0) * (1.0 - q) / std::sqrt(q - gas.a);
  return gas.nu * std::expm1(0.5 * (1.0 - gas.gamma) * std::log(q));
}

/// Rankine-Hugoniot entropy factor, defined on (a, 1/a).  It satisfies
/// gamma_fn(s) * gamma_fn(1/s) == 1 and decreases strictly.
inline double gamma_fn(double s, const GasConstants& gas) {
  if (!(s > gas.a && s < 1.0 / gas.a))
    throw std::domain_error("gamma_fn: argument must lie in (a, 1/a)");
  return std::pow(s, gas.gamma) * (1.0 - gas.a * s) / (s - gas.a);
}

/// log(gamma_fn(s)) evaluated without cancellation near s == 1.
inline double log_gamma_fn(double s, const GasConstants& gas) {
  if (!(s > gas.a && s < 1.0 / gas.a))
    throw std::domain_error("log_gamma_fn: argument must lie in (a, 1/a)");
  double d = s - 1.0;
  double w = 1.0 - gas.a;
  return gas.gamma * std::log1p(d) + std::log1p(-gas.a * d / w) -
         std::log1p(d / w);
}

/// Entropy jump (in units of c_v) across an acoustic wave with
/// specific-volume ratio q.  Zero on rarefaction branches.
inline double eta(Direction dir, double q, const GasConstants& gas) {
  require_volume_domain(dir, q, gas, "eta");
  if (!volume_branch_is_shock(dir, q)) return 0.0;
  return log_gamma_fn(q, gas);
}

}  // namespace wavelab
