// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <stdexcept>

namespace wavelab {

/// Adiabatic exponent together with the derived constants that appear in
/// every wave relation.  All of them are fixed by gamma alone.
struct GasConstants {
  double gamma;  ///< adiabatic exponent, > 1
  double a;      ///< (gamma - 1) / (gamma + 1)
  double kappa;  ///< sqrt(1 - a)
  double nu;     ///< sqrt(1 - a^2) / a
  double zeta;   ///< a / (1 + a) == (gamma - 1) / (2 gamma)
};

/// Exponents above this are accepted but outside the range the numerics
/// were tuned for; the CLI warns when crossing it.
inline constexpr double calibrated_gamma_max = 10.0;

inline GasConstants derive_constants(double gamma) {
  if (!(gamma > 1.0))
    throw std::invalid_argument("derive_constants: gamma must be > 1");
  GasConstants g;
  g.gamma = gamma;
  g.a = (gamma - 1.0) / (gamma + 1.0);
  g.kappa = std::sqrt(1.0 - g.a);
  g.nu = std::sqrt(1.0 - g.a * g.a) / g.a;
  g.zeta = g.a / (1.0 + g.a);
  return g;
}

/// Specific volume, velocity, pressure.  tau > 0 and p > 0 for physical
/// states; routines that require validity check it explicitly.
struct PrimitiveState {
  double tau;
  double u;
  double p;
};

/// Specific volume, velocity, specific entropy.
struct EntropyState {
  double tau;
  double u;
  double S;
};

/// Reference constants of the pressure law p = K tau^(-gamma) exp(S / c_v).
struct ReferenceConstants {
  double K = 1.0;
  double c_v = 1.0;
};

inline bool is_physical(const PrimitiveState& s) {
  return std::isfinite(s.tau) && std::isfinite(s.u) && std::isfinite(s.p) &&
         s.tau > 0.0 && s.p > 0.0;
}

inline void require_physical(const PrimitiveState& s, const char* who) {
  if (!is_physical(s))
    throw std::invalid_argument(std::string(who) +
                                ": state needs tau > 0, p > 0 and finite u");
}

/// Lagrangian sound speed sqrt(gamma tau p); the characteristic speeds in
/// mass coordinates are -sqrt(gamma p / tau) and +sqrt(gamma p / tau).
inline double sound_speed(const PrimitiveState& s, const GasConstants& gas) {
  return std::sqrt(gas.gamma * s.tau * s.p);
}

/// Characteristic speed of the given family (+1 forward, -1 backward) at a
/// state, in mass coordinates.
inline double char_speed(int sign, const PrimitiveState& s,
                         const GasConstants& gas) {
  return sign * std::sqrt(gas.gamma * s.p / s.tau);
}

inline double pressure_from_entropy(double tau, double S,
                                    const GasConstants& gas,
                                    const ReferenceConstants& ref = {}) {
  if (!(tau > 0.0))
    throw std::invalid_argument("pressure_from_entropy: tau must be > 0");
  return ref.K * std::pow(tau, -gas.gamma) * std::exp(S / ref.c_v);
}

inline double entropy_from_state(double tau, double p, const GasConstants& gas,
                                 const ReferenceConstants& ref = {}) {
  if (!(tau > 0.0 && p > 0.0))
    throw std::invalid_argument("entropy_from_state: need tau > 0, p > 0");
  return ref.c_v * std::log(p * std::pow(tau, gas.gamma) / ref.K);
}

inline EntropyState entropy_from_primitive(const PrimitiveState& s,
                                           const GasConstants& gas,
                                           const ReferenceConstants& ref = {}) {
  return {s.tau, s.u, entropy_from_state(s.tau, s.p, gas, ref)};
}

inline PrimitiveState primitive_from_entropy(const EntropyState& s,
                                             const GasConstants& gas,
                                             const ReferenceConstants& ref = {}) {
  return {s.tau, s.u, pressure_from_entropy(s.tau, s.S, gas, ref)};
}

}  // namespace wavelab
