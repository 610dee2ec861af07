// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

#include "wavelab/gas_model.hpp"
#include "wavelab/root_finding.hpp"
#include "wavelab/wave_curves.hpp"

namespace wavelab {

struct RiemannResiduals {
  double curve_function = 0.0;     ///< |F(B) - target| at the accepted root
  double velocity_mismatch = 0.0;  ///< left- vs right-traversal middle velocity
  int iterations = 0;
};

struct RiemannSolution {
  bool vacuum = false;

  // Classical solution (meaningless when vacuum):
  double B = std::numeric_limits<double>::quiet_NaN();
  double C = std::numeric_limits<double>::quiet_NaN();
  double F = std::numeric_limits<double>::quiet_NaN();
  PrimitiveState left_middle{0, 0, 0};
  PrimitiveState right_middle{0, 0, 0};

  std::array<WaveType, 3> wave_types{WaveType::Null, WaveType::Null,
                                     WaveType::Null};
  /// Edge speeds of the two rarefactions spanning a vacuum.
  std::optional<std::pair<double, double>> fan;
  /// Entropy direction across the contact (or across the vacuum).
  EntropyJump entropy_jump = EntropyJump::None;
  RiemannResiduals residuals;
};

/// Left-hand side of the scalar equation for the backward strength B:
/// F(B) = psi_bwd(B) + sqrt(tau_r p_r / (tau_l p_l)) psi_bwd(p_l B / p_r).
/// Strictly increasing in B.
inline double curve_function(double B, const PrimitiveState& left,
                             const PrimitiveState& right,
                             const GasConstants& gas) {
  if (!(B > 0.0))
    throw std::invalid_argument("curve_function: B must be positive");
  const double weight =
      std::sqrt(right.tau * right.p / (left.tau * left.p));
  return psi(Direction::Backward, B, gas) +
         weight * psi(Direction::Backward, left.p * B / right.p, gas);
}

/// Right-hand side matching curve_function at the solution.
inline double curve_target(const PrimitiveState& left,
                           const PrimitiveState& right) {
  return (left.u - right.u) / std::sqrt(left.tau * left.p);
}

/// True iff the states cannot be joined classically: the velocity gap
/// reaches (2/(gamma-1)) (c_l + c_r).  The boundary counts as vacuum.
inline bool vacuum_check(const PrimitiveState& left,
                         const PrimitiveState& right,
                         const GasConstants& gas) {
  require_physical(left, "vacuum_check");
  require_physical(right, "vacuum_check");
  const double threshold = 2.0 / (gas.gamma - 1.0) *
                           (sound_speed(left, gas) + sound_speed(right, gas));
  return right.u - left.u >= threshold;
}

namespace detail {

inline EntropyJump entropy_jump_of_ratio(double c) {
  if (in_tie_band(c)) return EntropyJump::None;
  return c > 1.0 ? EntropyJump::Up : EntropyJump::Down;
}

inline WaveType contact_type_of_jump(EntropyJump jump) {
  switch (jump) {
    case EntropyJump::Up: return WaveType::ContactUp;
    case EntropyJump::Down: return WaveType::ContactDown;
    default: return WaveType::Null;
  }
}

}  // namespace detail

/// Vacuum representation: two full rarefactions spanning an empty region.
inline RiemannSolution assemble_fan(const PrimitiveState& left,
                                    const PrimitiveState& right,
                                    const GasConstants& gas,
                                    const ReferenceConstants& ref = {}) {
  if (!vacuum_check(left, right, gas))
    throw std::invalid_argument(
        "assemble_fan: states admit a classical solution");
  RiemannSolution sol;
  sol.vacuum = true;
  sol.fan = {-std::sqrt(gas.gamma * left.p / left.tau),
             +std::sqrt(gas.gamma * right.p / right.tau)};
  const double S_l = entropy_from_state(left.tau, left.p, gas, ref);
  const double S_r = entropy_from_state(right.tau, right.p, gas, ref);
  const double scale = std::max({1.0, std::abs(S_l), std::abs(S_r)});
  if (std::abs(S_r - S_l) <= 1e-12 * scale)
    sol.entropy_jump = EntropyJump::None;
  else
    sol.entropy_jump = S_r > S_l ? EntropyJump::Up : EntropyJump::Down;
  sol.wave_types = {WaveType::Rarefaction,
                    detail::contact_type_of_jump(sol.entropy_jump),
                    WaveType::Rarefaction};
  return sol;
}

/// Exact solution of the Riemann problem.  tol bounds both the residual of
/// the scalar equation and the relative bracket width of the root.
inline RiemannSolution solve(const PrimitiveState& left,
                             const PrimitiveState& right,
                             const GasConstants& gas, double tol = 1e-12) {
  require_physical(left, "solve");
  require_physical(right, "solve");
  if (!(tol > 0.0)) throw std::invalid_argument("solve: tol must be positive");
  if (vacuum_check(left, right, gas)) return assemble_fan(left, right, gas);

  RiemannSolution sol;
  const double p_ratio = right.p / left.p;
  int iterations = 0;

  if (left.p == right.p && left.u == right.u) {
    // No acoustic waves; the contact carries the whole jump.
    sol.B = 1.0;
    sol.F = 1.0;
  } else {
    const double target = curve_target(left, right);
    auto f = [&](double B) {
      return curve_function(B, left, right, gas) - target;
    };
    const RootResult root = solve_increasing(f, std::max(1.0, p_ratio), tol);
    sol.B = root.x;
    sol.F = p_ratio / sol.B;
    sol.residuals.curve_function = std::abs(root.fx);
    iterations = root.iterations;
  }
  sol.C = (right.tau / left.tau) /
          (phi(Direction::Backward, sol.B, gas) *
           phi(Direction::Forward, sol.F, gas));

  const double p_m = sol.B * left.p;
  const double tau_lm = phi(Direction::Backward, sol.B, gas) * left.tau;
  const double tau_rm = right.tau / phi(Direction::Forward, sol.F, gas);
  const double u_from_left =
      left.u -
      psi(Direction::Backward, sol.B, gas) * std::sqrt(left.tau * left.p);
  const double u_from_right =
      right.u - psi(Direction::Forward, sol.F, gas) * std::sqrt(tau_rm * p_m);
  const double mismatch = u_from_left - u_from_right;
  const double u_scale =
      std::max({std::sqrt(left.tau * left.p), std::abs(left.u),
                std::abs(right.u)});
  if (std::abs(mismatch) > 10.0 * tol * u_scale)
    throw std::runtime_error("solve: traversal velocities failed to meet");

  const double u_m = 0.5 * (u_from_left + u_from_right);
  sol.left_middle = {tau_lm, u_m, p_m};
  sol.right_middle = {tau_rm, u_m, p_m};
  sol.wave_types = {wave_type_of(WaveFamily::BackwardAcoustic, sol.B),
                    wave_type_of(WaveFamily::Contact, sol.C),
                    wave_type_of(WaveFamily::ForwardAcoustic, sol.F)};
  sol.entropy_jump = detail::entropy_jump_of_ratio(sol.C);
  sol.residuals.velocity_mismatch = mismatch;
  sol.residuals.iterations = iterations;
  return sol;
}

/// Max relative deviation between the right state and the one obtained by
/// replaying B, C, F from the left state; a solver-independent diagnostic.
inline double recomposition_residual(const RiemannSolution& sol,
                                     const PrimitiveState& left,
                                     const PrimitiveState& right,
                                     const GasConstants& gas) {
  if (sol.vacuum) return 0.0;
  PrimitiveState s =
      apply_wave_primitive(WaveFamily::BackwardAcoustic, sol.B, left, gas);
  s.u = sol.left_middle.u;  // traversal average, as stored
  s = apply_wave_primitive(WaveFamily::Contact, sol.C, s, gas);
  s = apply_wave_primitive(WaveFamily::ForwardAcoustic, sol.F, s, gas);
  const double u_scale = std::max({std::abs(left.u), std::abs(right.u),
                                   std::sqrt(left.tau * left.p)});
  return std::max({std::abs(s.tau - right.tau) / right.tau,
                   std::abs(s.u - right.u) / u_scale,
                   std::abs(s.p - right.p) / right.p});
}

}  // namespace wavelab
