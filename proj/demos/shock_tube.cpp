// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
//
// Solves a Sod-style shock tube and prints the wave pattern, the middle
// states, and the characteristic speeds of each wave, then pushes the same
// initial pressure ratio far enough apart to open a vacuum region.

#include <cmath>
#include <cstdio>

#include "wavelab/wavelab.hpp"

using namespace wavelab;

namespace {

const char* type_name(WaveType t) {
  switch (t) {
    case WaveType::Shock: return "shock";
    case WaveType::Rarefaction: return "rarefaction";
    case WaveType::ContactUp: return "contact (entropy up)";
    case WaveType::ContactDown: return "contact (entropy down)";
    default: return "none";
  }
}

void print_state(const char* label, const PrimitiveState& s) {
  std::printf("  %-12s tau = %-22.15g u = %-22.15g p = %.15g\n", label, s.tau,
              s.u, s.p);
}

void print_solution(const RiemannSolution& sol, const PrimitiveState& left,
                    const PrimitiveState& right, const GasConstants& gas) {
  if (sol.vacuum) {
    std::printf("  vacuum opens between the rarefactions\n");
    std::printf("  fan edge speeds: head %-.15g, far edge %.15g\n",
                sol.fan->first, sol.fan->second);
    return;
  }

  std::printf("  strengths: B = %-.15g C = %-.15g F = %.15g\n", sol.B, sol.C,
              sol.F);
  print_state("left state", left);
  print_state("left middle", sol.left_middle);
  print_state("right middle", sol.right_middle);
  print_state("right state", right);

  const char* positions[3] = {"backward wave", "contact", "forward wave"};
  for (int w = 0; w < 3; ++w)
    std::printf("  %-14s %s\n", positions[w], type_name(sol.wave_types[w]));

  const auto [bwd_head, bwd_tail] =
      wave_speed(WaveFamily::BackwardAcoustic, sol.B, left, gas);
  const auto [fwd_head, fwd_tail] =
      wave_speed(WaveFamily::ForwardAcoustic, sol.F, sol.right_middle, gas);
  if (sol.wave_types[0] == WaveType::Rarefaction)
    std::printf("  backward fan: head %-.15g tail %.15g\n", bwd_head,
                bwd_tail);
  else
    std::printf("  backward speed: %.15g\n", bwd_head);
  if (sol.wave_types[2] == WaveType::Rarefaction)
    std::printf("  forward fan:  head %-.15g tail %.15g\n", fwd_head,
                fwd_tail);
  else
    std::printf("  forward speed: %.15g\n", fwd_head);

  std::printf("  residuals: curve %.3g, recomposition %.3g, %d iterations\n",
              sol.residuals.curve_function,
              recomposition_residual(sol, left, right, gas),
              sol.residuals.iterations);
}

}  // namespace

int main() {
  const GasConstants gas = derive_constants(1.4);

  const PrimitiveState left{1.0, 0.0, 1.0};
  const PrimitiveState right{8.0, 0.0, 0.1};
  std::printf("shock tube, gamma = %.15g\n", gas.gamma);
  print_solution(solve(left, right, gas), left, right, gas);

  // Same thermodynamic states, but receding fast enough that the complete
  // rarefactions cannot absorb the velocity difference.
  const double gap = gas.nu * (std::sqrt(left.tau * left.p) +
                               std::sqrt(right.tau * right.p));
  const PrimitiveState apart_l{1.0, -0.51 * gap, 1.0};
  const PrimitiveState apart_r{8.0, +0.51 * gap, 0.1};
  std::printf("\nsame states receding at %.6g (threshold %.6g)\n",
              apart_r.u - apart_l.u, gap);
  print_solution(solve(apart_l, apart_r, gas), apart_l, apart_r, gas);

  return 0;
}
