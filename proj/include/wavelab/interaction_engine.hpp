// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "wavelab/analysis_kernels.hpp"
#include "wavelab/gas_model.hpp"
#include "wavelab/riemann_solver.hpp"
#include "wavelab/root_finding.hpp"
#include "wavelab/wave_curves.hpp"
#include "wavelab/wave_kernels.hpp"

namespace wavelab {

/// The ten pairwise interactions: Group I head-on (forward wave meets
/// backward wave), Group II acoustic-meets-contact, Group III overtaking
/// (two backward waves).
enum class InteractionKind { Ia, Ib, Ic, IIa, IIb, IIc, IId, IIIa, IIIb, IIIc };

inline int group_of(InteractionKind kind) {
  switch (kind) {
    case InteractionKind::Ia:
    case InteractionKind::Ib:
    case InteractionKind::Ic: return 1;
    case InteractionKind::IIa:
    case InteractionKind::IIb:
    case InteractionKind::IIc:
    case InteractionKind::IId: return 2;
    default: return 3;
  }
}

/// Incoming pair in the canonical orientation of its group: Group I has the
/// forward wave on the left (s_left = f, s_right = b), Group II the forward
/// wave and then the contact (s_left = f, s_right = c), Group III two
/// backward waves (s_left = x, s_right = y).
struct IncomingPair {
  InteractionKind kind;
  double s_left;
  double s_right;
};

inline void validate_pair(const IncomingPair& pair) {
  const double l = pair.s_left, r = pair.s_right;
  if (!(l > 0.0) || !(r > 0.0) || !std::isfinite(l) || !std::isfinite(r))
    throw std::invalid_argument("IncomingPair: strengths must be positive");
  if (in_tie_band(l) || in_tie_band(r))
    throw std::invalid_argument(
        "IncomingPair: incoming strengths must differ from 1");
  bool ok = false;
  switch (pair.kind) {
    case InteractionKind::Ia: ok = l < 1.0 && r > 1.0; break;
    case InteractionKind::Ib: ok = l < 1.0 && r < 1.0; break;
    case InteractionKind::Ic: ok = l > 1.0 && r < 1.0; break;
    case InteractionKind::IIa: ok = l < 1.0 && r < 1.0; break;
    case InteractionKind::IIb: ok = l < 1.0 && r > 1.0; break;
    case InteractionKind::IIc: ok = l > 1.0 && r < 1.0; break;
    case InteractionKind::IId: ok = l > 1.0 && r > 1.0; break;
    case InteractionKind::IIIa: ok = l > 1.0 && r > 1.0; break;
    case InteractionKind::IIIb: ok = l > 1.0 && r < 1.0; break;
    case InteractionKind::IIIc: ok = l < 1.0 && r > 1.0; break;
  }
  if (!ok)
    throw std::invalid_argument(
        "IncomingPair: strengths inconsistent with interaction kind");
}

/// Classifies two adjacent waves; nullopt means the pair never meets (for
/// example two backward rarefactions).  Mirrored orientations map onto the
/// canonical kinds.  Throws for contact-contact pairs.
inline std::optional<InteractionKind> classify_pair(WaveFamily left_family,
                                                    double left_strength,
                                                    WaveFamily right_family,
                                                    double right_strength) {
  auto check = [](WaveFamily fam, double s) {
    if (!(s > 0.0) || !std::isfinite(s))
      throw std::invalid_argument("classify_pair: strengths must be positive");
    if (fam != WaveFamily::Contact && in_tie_band(s))
      throw std::invalid_argument(
          "classify_pair: acoustic strengths must differ from 1");
  };
  check(left_family, left_strength);
  check(right_family, right_strength);
  const bool lF = left_family == WaveFamily::ForwardAcoustic;
  const bool lB = left_family == WaveFamily::BackwardAcoustic;
  const bool lC = left_family == WaveFamily::Contact;
  const bool rF = right_family == WaveFamily::ForwardAcoustic;
  const bool rB = right_family == WaveFamily::BackwardAcoustic;
  const bool rC = right_family == WaveFamily::Contact;

  if (lC && rC)
    throw std::invalid_argument(
        "classify_pair: contact-contact interactions are not defined");
  if ((lC && in_tie_band(left_strength)) ||
      (rC && in_tie_band(right_strength)))
    return std::nullopt;  // a null contact is no wave

  if (lF && rB) {
    const double f = left_strength, b = right_strength;
    if (f < 1.0) return b > 1.0 ? InteractionKind::Ia : InteractionKind::Ib;
    return b < 1.0 ? InteractionKind::Ic : InteractionKind::Ib;  // mirrored
  }
  if (lF && rC) {
    const double f = left_strength, c = right_strength;
    if (f < 1.0) return c < 1.0 ? InteractionKind::IIa : InteractionKind::IIb;
    return c < 1.0 ? InteractionKind::IIc : InteractionKind::IId;
  }
  if (lC && rB) {  // mirror of forward-then-contact
    const double f = 1.0 / right_strength, c = 1.0 / left_strength;
    if (f < 1.0) return c < 1.0 ? InteractionKind::IIa : InteractionKind::IIb;
    return c < 1.0 ? InteractionKind::IIc : InteractionKind::IId;
  }
  if (lB && rB) {
    const double x = left_strength, y = right_strength;
    if (x > 1.0 && y > 1.0) return InteractionKind::IIIa;
    if (x > 1.0 && y < 1.0) return InteractionKind::IIIb;
    if (x < 1.0 && y > 1.0) return InteractionKind::IIIc;
    return std::nullopt;  // two backward rarefactions do not meet
  }
  if (lF && rF) {  // mirror of backward-backward
    const double x = 1.0 / right_strength, y = 1.0 / left_strength;
    if (x > 1.0 && y > 1.0) return InteractionKind::IIIa;
    if (x > 1.0 && y < 1.0) return InteractionKind::IIIb;
    if (x < 1.0 && y > 1.0) return InteractionKind::IIIc;
    return std::nullopt;
  }
  return std::nullopt;  // (backward, forward) and contact-adjacent receders
}

/// Product BF of the outgoing acoustic strengths, fixed by the incoming
/// pair: bf (Group I), f (Group II), xy (Group III).
inline double outgoing_product(const IncomingPair& pair) {
  switch (group_of(pair.kind)) {
    case 1: return pair.s_left * pair.s_right;
    case 2: return pair.s_left;
    default: return pair.s_left * pair.s_right;
  }
}

/// Group residual as a function of the outgoing backward strength B;
/// strictly increasing, with the solution at its root.
inline double interaction_residual(InteractionKind kind, double B,
                                   const IncomingPair& pair,
                                   const GasConstants& gas) {
  const double l = pair.s_left, r = pair.s_right;
  switch (group_of(kind)) {
    case 1: {
      const double f = l, b = r;
      return psi(Direction::Backward, B, gas) +
             psi(Direction::Backward, B / (b * f), gas) * aux_M(b, gas) *
                 aux_N(f, gas) +
             psi(Direction::Forward, f, gas) -
             aux_N(f, gas) * psi(Direction::Backward, b, gas);
    }
    case 2: {
      const double f = l, c = r;
      return psi(Direction::Backward, B, gas) +
             std::sqrt(c) * aux_N(f, gas) *
                 psi(Direction::Backward, B / f, gas) +
             psi(Direction::Forward, f, gas);
    }
    default: {
      const double x = l, y = r;
      return psi(Direction::Backward, B, gas) +
             psi(Direction::Backward, B / (x * y), gas) * aux_M(x, gas) *
                 aux_M(y, gas) -
             psi(Direction::Backward, x, gas) -
             psi(Direction::Backward, y, gas) * aux_M(x, gas);
    }
  }
}

/// Limit of the group residual as B -> 0+.  Nonnegative exactly when the
/// interaction produces a vacuum.
inline double interaction_residual_at_zero(const IncomingPair& pair,
                                           const GasConstants& gas) {
  const double l = pair.s_left, r = pair.s_right;
  switch (group_of(pair.kind)) {
    case 1: {
      const double f = l, b = r;
      return -gas.nu * (1.0 + aux_M(b, gas) * aux_N(f, gas)) +
             psi(Direction::Forward, f, gas) -
             aux_N(f, gas) * psi(Direction::Backward, b, gas);
    }
    case 2: {
      const double f = l, c = r;
      return -gas.nu * (1.0 + std::sqrt(c) * aux_N(f, gas)) +
             psi(Direction::Forward, f, gas);
    }
    default: {
      const double x = l, y = r;
      return -gas.nu * (1.0 + aux_M(x, gas) * aux_M(y, gas)) -
             psi(Direction::Backward, x, gas) -
             psi(Direction::Backward, y, gas) * aux_M(x, gas);
    }
  }
}

/// Vacuum predicate per group; only Ic, IIc and IIIb can reach vacuum, and
/// the boundary counts as vacuum.
inline bool vacuum_condition(InteractionKind kind, const IncomingPair& pair,
                             const GasConstants& gas) {
  switch (kind) {
    case InteractionKind::Ic: {
      const double f = pair.s_left, b = pair.s_right;
      return std::pow(b, gas.zeta) + std::pow(f, -gas.zeta) <= 1.0;
    }
    case InteractionKind::IIc: {
      const double f = pair.s_left, c = pair.s_right;
      return (1.0 - std::sqrt(c)) * std::pow(f, gas.zeta) >= 2.0;
    }
    case InteractionKind::IIIb: {
      const double x = pair.s_left, y = pair.s_right;
      const double t = 0.5 * (1.0 - v_fn(x, gas) / gas.nu);
      return t > 0.0 && std::pow(y, gas.zeta) <= t;
    }
    default:
      return false;
  }
}

struct InteractionResiduals {
  double equation = 0.0;  ///< |group residual| at B (vacuum: residual at 0+)
  double velocity = 0.0;  ///< outgoing minus incoming far-field velocity gap
  double product = 0.0;   ///< relative defect of the BF product relation
  int iterations = 0;
};

struct InteractionOutcome {
  bool vacuum = false;
  double B = std::numeric_limits<double>::quiet_NaN();
  double C = std::numeric_limits<double>::quiet_NaN();
  double F = std::numeric_limits<double>::quiet_NaN();
  std::array<WaveType, 3> types{WaveType::Null, WaveType::Null, WaveType::Null};
  EntropyJump entropy_jump_across_vacuum = EntropyJump::None;
  InteractionResiduals residuals;
};

namespace detail {

/// Scaled far-field velocity change of the incoming configuration, in units
/// of sqrt(tau_l p_l) of the extreme left state.
inline double incoming_velocity_change(const IncomingPair& pair,
                                       const GasConstants& gas) {
  const double l = pair.s_left, r = pair.s_right;
  switch (group_of(pair.kind)) {
    case 1:
      return psi(Direction::Forward, l, gas) -
             aux_N(l, gas) * psi(Direction::Backward, r, gas);
    case 2:
      return psi(Direction::Forward, l, gas);
    default:
      return -psi(Direction::Backward, l, gas) -
             psi(Direction::Backward, r, gas) * aux_M(l, gas);
  }
}

}  // namespace detail

/// Solves the group equation for the outgoing strengths.  Vacuum is decided
/// first; otherwise B comes from bracketed root finding on the monotone
/// residual, F from the product relation, and C from the volume relation.
inline InteractionOutcome solve_interaction(const IncomingPair& pair,
                                            const GasConstants& gas,
                                            double tol = 1e-12) {
  validate_pair(pair);
  if (!(tol > 0.0))
    throw std::invalid_argument("solve_interaction: tol must be positive");

  InteractionOutcome out;
  if (vacuum_condition(pair.kind, pair, gas)) {
    out.vacuum = true;
    switch (pair.kind) {
      case InteractionKind::Ic:
        out.entropy_jump_across_vacuum = EntropyJump::None;
        break;
      case InteractionKind::IIc:
        out.entropy_jump_across_vacuum = EntropyJump::Down;
        break;
      default:  // IIIb
        out.entropy_jump_across_vacuum = EntropyJump::Up;
        break;
    }
    out.types = {WaveType::Rarefaction,
                 detail::contact_type_of_jump(out.entropy_jump_across_vacuum),
                 WaveType::Rarefaction};
    out.residuals.equation = interaction_residual_at_zero(pair, gas);
    return out;
  }

  // All three group residuals share the shape
  //   psi_bwd(B) + coef * psi_bwd(B / prod) + tail
  // so the constants are hoisted out of the root-finding loop.
  const double prod = outgoing_product(pair);
  double coef, tail;
  switch (group_of(pair.kind)) {
    case 1: {
      const double f_in = pair.s_left, b_in = pair.s_right;
      coef = aux_M(b_in, gas) * aux_N(f_in, gas);
      tail = psi(Direction::Forward, f_in, gas) -
             aux_N(f_in, gas) * psi(Direction::Backward, b_in, gas);
      break;
    }
    case 2: {
      const double f_in = pair.s_left, c_in = pair.s_right;
      coef = std::sqrt(c_in) * aux_N(f_in, gas);
      tail = psi(Direction::Forward, f_in, gas);
      break;
    }
    default: {
      const double x_in = pair.s_left, y_in = pair.s_right;
      coef = aux_M(x_in, gas) * aux_M(y_in, gas);
      tail = -psi(Direction::Backward, x_in, gas) -
             psi(Direction::Backward, y_in, gas) * aux_M(x_in, gas);
      break;
    }
  }
  auto f = [&](double B) {
    return psi(Direction::Backward, B, gas) +
           coef * psi(Direction::Backward, B / prod, gas) + tail;
  };
  const RootResult root = solve_increasing(f, std::max(1.0, prod), tol);
  out.B = root.x;
  out.F = prod / out.B;

  const double phi_out = phi(Direction::Backward, out.B, gas) *
                         phi(Direction::Forward, out.F, gas);
  switch (group_of(pair.kind)) {
    case 1:
      out.C = phi(Direction::Backward, pair.s_right, gas) *
              phi(Direction::Forward, pair.s_left, gas) / phi_out;
      break;
    case 2:
      out.C = pair.s_right * phi(Direction::Forward, pair.s_left, gas) /
              phi_out;
      break;
    default:
      out.C = phi(Direction::Backward, pair.s_left, gas) *
              phi(Direction::Backward, pair.s_right, gas) / phi_out;
      break;
  }

  out.types = {wave_type_of(WaveFamily::BackwardAcoustic, out.B),
               wave_type_of(WaveFamily::Contact, out.C),
               wave_type_of(WaveFamily::ForwardAcoustic, out.F)};
  out.residuals.equation = std::abs(root.fx);
  out.residuals.iterations = root.iterations;
  out.residuals.product = std::abs(out.B * out.F - prod) / prod;
  const double outgoing =
      -psi(Direction::Backward, out.B, gas) +
      psi(Direction::Forward, out.F, gas) *
          std::sqrt(out.C * out.B * phi(Direction::Backward, out.B, gas));
  out.residuals.velocity =
      outgoing - detail::incoming_velocity_change(pair, gas);
  return out;
}

/// Theorem clause describing the outgoing contact (or vacuum) for a solved
/// interaction, as printed by the CLI.
inline std::string theorem_tag(const IncomingPair& pair,
                               const InteractionOutcome& out) {
  switch (pair.kind) {
    case InteractionKind::Ia: {
      const double bf = pair.s_left * pair.s_right;
      if (in_tie_band(bf)) return "Thm1(iii) bf=1";
      return bf > 1.0 ? "Thm1(iii) bf>1" : "Thm1(iii) bf<1";
    }
    case InteractionKind::Ib: return "Thm1(iii) C>1";
    case InteractionKind::Ic:
      return out.vacuum ? "Thm1(iv) vacuum" : "Thm1(iii) C=1";
    case InteractionKind::IIa: return "Thm2(iii) c<C<1";
    case InteractionKind::IIb: return "Thm2(iii) 1<C<c";
    case InteractionKind::IIc:
      return out.vacuum ? "Thm2(iv) vacuum" : "Thm2(iii) C=c";
    case InteractionKind::IId: return "Thm2(iii) C<c";
    case InteractionKind::IIIa: return "Thm3(iii) C<1";
    case InteractionKind::IIIb:
      return out.vacuum ? "Thm3(iv) vacuum" : "Thm3(iii) C>1";
    default: return "Thm3(iii) C>1";
  }
}

/// Composes the incoming pair from a reference left state; the outgoing
/// waves must solve the Riemann problem between the extreme states.
inline std::pair<PrimitiveState, PrimitiveState> compose_extremes(
    const IncomingPair& pair, const GasConstants& gas,
    const PrimitiveState& ref_left = {1.0, 0.0, 1.0}) {
  PrimitiveState s = ref_left;
  switch (group_of(pair.kind)) {
    case 1:
      s = apply_wave_primitive(WaveFamily::ForwardAcoustic, pair.s_left, s, gas);
      s = apply_wave_primitive(WaveFamily::BackwardAcoustic, pair.s_right, s,
                               gas);
      break;
    case 2:
      s = apply_wave_primitive(WaveFamily::ForwardAcoustic, pair.s_left, s, gas);
      s = apply_wave_primitive(WaveFamily::Contact, pair.s_right, s, gas);
      break;
    default:
      s = apply_wave_primitive(WaveFamily::BackwardAcoustic, pair.s_left, s,
                               gas);
      s = apply_wave_primitive(WaveFamily::BackwardAcoustic, pair.s_right, s,
                               gas);
      break;
  }
  return {ref_left, s};
}

struct ClassifiedPair {
  IncomingPair pair;
  bool mirrored;
};

/// Canonical form of an arbitrary colliding pair; mirrored orientations are
/// reflected (strengths invert, families swap) onto the Figure-1 layout.
inline std::optional<ClassifiedPair> canonicalize_pair(WaveFamily left_family,
                                                       double left_strength,
                                                       WaveFamily right_family,
                                                       double right_strength) {
  const auto kind =
      classify_pair(left_family, left_strength, right_family, right_strength);
  if (!kind) return std::nullopt;
  const bool lF = left_family == WaveFamily::ForwardAcoustic;
  const bool lB = left_family == WaveFamily::BackwardAcoustic;
  const bool rB = right_family == WaveFamily::BackwardAcoustic;
  const bool rF = right_family == WaveFamily::ForwardAcoustic;

  if (lF && rB) {
    if (left_strength > 1.0 && right_strength > 1.0)  // mirrored Ib
      return ClassifiedPair{
          {*kind, 1.0 / right_strength, 1.0 / left_strength}, true};
    return ClassifiedPair{{*kind, left_strength, right_strength}, false};
  }
  if (lF && !rB && !rF)  // forward-contact, canonical Group II
    return ClassifiedPair{{*kind, left_strength, right_strength}, false};
  if (lB && rB)  // canonical Group III
    return ClassifiedPair{{*kind, left_strength, right_strength}, false};
  // Remaining colliding layouts are mirrors: contact-backward, forward-forward.
  return ClassifiedPair{{*kind, 1.0 / right_strength, 1.0 / left_strength},
                        true};
}

/// Solves an arbitrary-orientation pair, mapping mirrored outcomes back to
/// the original frame (strengths invert, families and jumps flip).
inline InteractionOutcome solve_families(WaveFamily left_family,
                                         double left_strength,
                                         WaveFamily right_family,
                                         double right_strength,
                                         const GasConstants& gas,
                                         double tol = 1e-12) {
  const auto classified = canonicalize_pair(left_family, left_strength,
                                            right_family, right_strength);
  if (!classified)
    throw std::invalid_argument("solve_families: waves do not meet");
  InteractionOutcome out = solve_interaction(classified->pair, gas, tol);
  if (!classified->mirrored) return out;

  InteractionOutcome back = out;
  if (out.vacuum) {
    back.entropy_jump_across_vacuum =
        out.entropy_jump_across_vacuum == EntropyJump::Up ? EntropyJump::Down
        : out.entropy_jump_across_vacuum == EntropyJump::Down
            ? EntropyJump::Up
            : EntropyJump::None;
    back.types = {WaveType::Rarefaction,
                  detail::contact_type_of_jump(back.entropy_jump_across_vacuum),
                  WaveType::Rarefaction};
    return back;
  }
  back.B = 1.0 / out.F;
  back.C = 1.0 / out.C;
  back.F = 1.0 / out.B;
  back.types = {wave_type_of(WaveFamily::BackwardAcoustic, back.B),
                wave_type_of(WaveFamily::Contact, back.C),
                wave_type_of(WaveFamily::ForwardAcoustic, back.F)};
  return back;
}

struct EntropyCrossCheck {
  double L;  ///< outgoing backward specific-volume strength
  double C;  ///< outgoing contact strength
  double I;  ///< outgoing forward specific-volume strength
  double residual_velocity;
  double residual_entropy;
  double residual_volume;
  bool contact_direction_agrees;
  double L_from_pressure;  ///< phi_bwd(B) of the pressure-variable solution
  double I_from_pressure;  ///< phi_fwd(F) of the pressure-variable solution
  double C_from_pressure;
};

/// Independent Group III solve in (tau, u, S) variables, compared against
/// the pressure-variable solution after conversion.
inline EntropyCrossCheck entropy_cross_check(const IncomingPair& pair,
                                             const GasConstants& gas,
                                             const ReferenceConstants& ref = {},
                                             double tol = 1e-12) {
  if (group_of(pair.kind) != 3)
    throw std::invalid_argument("entropy_cross_check: Group III pairs only");
  validate_pair(pair);
  const InteractionOutcome pressure = solve_interaction(pair, gas, tol);
  if (pressure.vacuum)
    throw std::invalid_argument("entropy_cross_check: pair produces a vacuum");

  const double L0 = phi(Direction::Backward, pressure.B, gas);
  const double I0 = phi(Direction::Forward, pressure.F, gas);
  const double x_t = phi(Direction::Backward, pair.s_left, gas);
  const double y_t = phi(Direction::Backward, pair.s_right, gas);

  const EntropyState s0{1.0, 0.0, 0.0};
  const EntropyState s1 =
      apply_wave_entropy(WaveFamily::BackwardAcoustic, x_t, s0, gas, ref);
  const EntropyState sR =
      apply_wave_entropy(WaveFamily::BackwardAcoustic, y_t, s1, gas, ref);
  const double p_hat_R = pressure_from_entropy(sR.tau, sR.S, gas, ref);

  // For a trial backward strength L: the contact preserves u and p-hat, so
  // the forward strength follows from the pressure-hat ratio, and the far
  // right velocity can be compared with the incoming composition.
  auto forward_strength_for = [&](double L) {
    const EntropyState mid =
        apply_wave_entropy(WaveFamily::BackwardAcoustic, L, s0, gas, ref);
    const double p_hat_m = pressure_from_entropy(mid.tau, mid.S, gas, ref);
    const double log_ratio = std::log(p_hat_R) - std::log(p_hat_m);
    auto g = [&](double iota) {
      return gas.gamma * std::log(iota) - eta(Direction::Forward, iota, gas) +
             log_ratio;
    };
    const double ceil_iota = (1.0 / gas.a) * (1.0 - 1e-14);
    return solve_increasing(g, std::min(std::max(I0, 1e-12), ceil_iota), tol,
                            1e-280, ceil_iota)
        .x;
  };
  auto velocity_residual = [&](double L) {
    const EntropyState mid =
        apply_wave_entropy(WaveFamily::BackwardAcoustic, L, s0, gas, ref);
    const double p_hat_m = pressure_from_entropy(mid.tau, mid.S, gas, ref);
    const double iota = forward_strength_for(L);
    const double tau_rm = sR.tau / iota;
    const double u_right =
        mid.u + xi(Direction::Forward, iota, gas) * std::sqrt(tau_rm * p_hat_m);
    return u_right - sR.u;
  };

  // Scan around the converted pressure solution for a sign change, then
  // refine.  The window is generous; the root sits very close to L0.
  const double lo_limit = gas.a * (1.0 + 1e-12);
  double lo = std::max(L0 / 16.0, lo_limit);
  double hi = L0 * 16.0;
  const int n = 48;
  double L = L0;
  bool found = false;
  double x_prev = lo, f_prev = velocity_residual(lo);
  for (int i = 1; i <= n; ++i) {
    const double x =
        std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * i / n);
    const double fx = velocity_residual(x);
    if (fx == 0.0) {
      L = x;
      found = true;
      break;
    }
    if (std::signbit(fx) != std::signbit(f_prev)) {
      L = find_root_bracketed(velocity_residual, x_prev, x, f_prev, fx, 1e-14)
              .x;
      found = true;
      break;
    }
    x_prev = x;
    f_prev = fx;
  }
  if (!found)
    throw std::runtime_error("entropy_cross_check: no sign change located");

  EntropyCrossCheck result;
  result.L = L;
  result.I = forward_strength_for(L);
  result.C = x_t * y_t / (L * result.I);
  result.residual_velocity = velocity_residual(L);
  result.residual_entropy =
      (eta(Direction::Backward, x_t, gas) + eta(Direction::Backward, y_t, gas)) -
      (eta(Direction::Backward, L, gas) + gas.gamma * std::log(result.C) +
       eta(Direction::Forward, result.I, gas));
  result.residual_volume =
      (x_t * y_t - L * result.C * result.I) / (x_t * y_t);
  result.L_from_pressure = L0;
  result.I_from_pressure = I0;
  result.C_from_pressure = pressure.C;
  result.contact_direction_agrees =
      wave_type_of(WaveFamily::Contact, result.C) ==
      wave_type_of(WaveFamily::Contact, pressure.C);
  return result;
}

}  // namespace wavelab
