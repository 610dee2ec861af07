// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <stdexcept>

#include "wavelab/gas_model.hpp"
#include "wavelab/wave_kernels.hpp"

namespace wavelab {

enum class WaveFamily { BackwardAcoustic, Contact, ForwardAcoustic };

/// Outgoing wave classification.  ContactUp/ContactDown follow the
/// specific-volume ratio (c > 1 raises entropy left-to-right, c < 1 lowers
/// it); Null marks a strength inside the tie-band around 1.
enum class WaveType { Shock, Rarefaction, ContactUp, ContactDown, Null };

enum class EntropyJump { Up, Down, None };

/// Strengths within this band of 1 classify as Null: incoming waves are
/// assumed ≠ 1, and the band makes that assumption testable.
inline constexpr double strength_tie_band = 1e-12;

inline bool in_tie_band(double strength) {
  return std::abs(strength - 1.0) <= strength_tie_band;
}

inline Direction family_direction(WaveFamily family) {
  switch (family) {
    case WaveFamily::BackwardAcoustic: return Direction::Backward;
    case WaveFamily::ForwardAcoustic: return Direction::Forward;
    default:
      throw std::invalid_argument("family_direction: contact has no direction");
  }
}

inline WaveType wave_type_of(WaveFamily family, double strength) {
  if (!(strength > 0.0))
    throw std::invalid_argument("wave_type_of: strength must be positive");
  if (in_tie_band(strength)) return WaveType::Null;
  switch (family) {
    case WaveFamily::BackwardAcoustic:
      return strength > 1.0 ? WaveType::Shock : WaveType::Rarefaction;
    case WaveFamily::ForwardAcoustic:
      return strength < 1.0 ? WaveType::Shock : WaveType::Rarefaction;
    default:
      return strength > 1.0 ? WaveType::ContactUp : WaveType::ContactDown;
  }
}

/// State on the right of a single wave applied to `left`; acoustic
/// strengths are pressure ratios, contact strengths specific-volume ratios.
inline PrimitiveState apply_wave_primitive(WaveFamily family, double strength,
                                           const PrimitiveState& left,
                                           const GasConstants& gas) {
  require_physical(left, "apply_wave_primitive");
  if (!(strength > 0.0))
    throw std::invalid_argument("apply_wave_primitive: strength must be > 0");
  const double root = std::sqrt(left.tau * left.p);
  switch (family) {
    case WaveFamily::BackwardAcoustic:
      return {phi(Direction::Backward, strength, gas) * left.tau,
              left.u - psi(Direction::Backward, strength, gas) * root,
              strength * left.p};
    case WaveFamily::ForwardAcoustic:
      return {phi(Direction::Forward, strength, gas) * left.tau,
              left.u + psi(Direction::Forward, strength, gas) * root,
              strength * left.p};
    default:
      return {strength * left.tau, left.u, left.p};
  }
}

/// Same wave action in (tau, u, S) variables; all strengths are
/// specific-volume ratios here.
inline EntropyState apply_wave_entropy(WaveFamily family, double strength,
                                       const EntropyState& left,
                                       const GasConstants& gas,
                                       const ReferenceConstants& ref = {}) {
  if (!(left.tau > 0.0))
    throw std::invalid_argument("apply_wave_entropy: tau must be > 0");
  if (!(strength > 0.0))
    throw std::invalid_argument("apply_wave_entropy: strength must be > 0");
  const double p_hat = pressure_from_entropy(left.tau, left.S, gas, ref);
  const double root = std::sqrt(left.tau * p_hat);
  switch (family) {
    case WaveFamily::BackwardAcoustic:
      return {strength * left.tau,
              left.u - xi(Direction::Backward, strength, gas) * root,
              left.S + ref.c_v * eta(Direction::Backward, strength, gas)};
    case WaveFamily::ForwardAcoustic:
      return {strength * left.tau,
              left.u + xi(Direction::Forward, strength, gas) * root,
              left.S + ref.c_v * eta(Direction::Forward, strength, gas)};
    default:
      return {strength * left.tau, left.u,
              left.S + ref.c_v * gas.gamma * std::log(strength)};
  }
}

/// Recovers the strength of the single wave joining two states; throws when
/// the pair does not lie on one wave curve of the family (residual > tol).
inline double measure_strength(WaveFamily family, const PrimitiveState& left,
                               const PrimitiveState& right,
                               const GasConstants& gas, double tol = 1e-8) {
  require_physical(left, "measure_strength");
  require_physical(right, "measure_strength");
  if (family == WaveFamily::Contact) {
    const double s = right.tau / left.tau;
    const double u_scale = std::max({std::abs(left.u), std::abs(right.u),
                                     std::sqrt(left.tau * left.p)});
    if (std::abs(right.u - left.u) > tol * u_scale ||
        std::abs(right.p - left.p) > tol * left.p)
      throw std::invalid_argument(
          "measure_strength: states not joined by a contact");
    return s;
  }
  const double s = right.p / left.p;
  const PrimitiveState probe = apply_wave_primitive(family, s, left, gas);
  const double u_scale = std::max({std::abs(left.u), std::abs(right.u),
                                   std::sqrt(left.tau * left.p)});
  const double res =
      std::max({std::abs(probe.tau - right.tau) / right.tau,
                std::abs(probe.u - right.u) / u_scale,
                std::abs(probe.p - right.p) / right.p});
  if (res > tol)
    throw std::invalid_argument(
        "measure_strength: states not joined by a single wave of this family");
  return s;
}

/// Propagation speeds in Lagrangian mass coordinates.  head is the edge
/// facing the wave's direction of travel (the outer edge of a fan); shocks
/// and contacts are degenerate intervals.
struct SpeedInterval {
  double head;
  double tail;
};

inline SpeedInterval wave_speed(WaveFamily family, double strength,
                                const PrimitiveState& left,
                                const GasConstants& gas) {
  if (family == WaveFamily::Contact) return {0.0, 0.0};
  require_physical(left, "wave_speed");
  const PrimitiveState right = apply_wave_primitive(family, strength, left, gas);
  const int sgn = family == WaveFamily::BackwardAcoustic ? -1 : +1;
  const WaveType type = wave_type_of(family, strength);
  if (type == WaveType::Shock) {
    const double sigma =
        sgn * std::sqrt((right.p - left.p) / (left.tau - right.tau));
    return {sigma, sigma};
  }
  // Rarefaction (or Null): edge characteristic speeds; the head faces the
  // undisturbed side (left state for backward waves, right state for
  // forward waves).
  const double at_left = char_speed(sgn, left, gas);
  const double at_right = char_speed(sgn, right, gas);
  if (family == WaveFamily::BackwardAcoustic) return {at_left, at_right};
  return {at_right, at_left};
}

}  // namespace wavelab
