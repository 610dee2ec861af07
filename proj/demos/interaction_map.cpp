// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
//
// Character map of the overtaking-interaction plane: for each (x, y) on a
// log grid of incoming backward strengths, solve the interaction and mark
// the outgoing pattern.  The reflected-wave and vacuum transition curves
// show up as the boundaries between regions.

#include <cmath>
#include <cstdio>
#include <vector>

#include "wavelab/wavelab.hpp"

using namespace wavelab;

namespace {

// One cell of the (x, y) map.
//   S  shock reflected            (F > 1)
//   r  rarefaction reflected      (F < 1)
//   =  reflected wave vanishes    (|F - 1| inside the tie band scale)
//   v  vacuum opens
char cell_mark(double x, double y, const GasConstants& gas) {
  IncomingPair pair{InteractionKind::IIIa, x, y};
  if (x > 1.0 && y < 1.0) pair.kind = InteractionKind::IIIb;
  if (x < 1.0 && y > 1.0) pair.kind = InteractionKind::IIIc;
  if (x < 1.0 && y < 1.0) return '.';  // both rarefactions: no interaction

  const InteractionOutcome out = solve_interaction(pair, gas);
  if (out.vacuum) return 'v';
  if (std::abs(out.F - 1.0) < 1e-6) return '=';
  return out.F > 1.0 ? 'S' : 'r';
}

std::vector<double> log_axis(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(i)] =
        lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return v;
}

}  // namespace

int main() {
  const GasConstants gas = derive_constants(1.4);
  const SpecialPoints pts = special_points(gas);

  std::printf("reflected wave of x-then-y collisions, gamma = %g\n",
              gas.gamma);
  std::printf("x right 0.2..50 (log), y up 0.2..50 (log)\n");
  std::printf("S shock, r rarefaction, v vacuum, . no interaction\n\n");

  const int nx = 64, ny = 32;
  const auto xs = log_axis(0.2, 50.0, nx);
  const auto ys = log_axis(0.2, 50.0, ny);
  for (int row = ny - 1; row >= 0; --row) {
    std::string line;
    for (int col = 0; col < nx; ++col)
      line += cell_mark(xs[static_cast<std::size_t>(col)],
                        ys[static_cast<std::size_t>(row)], gas);
    std::printf("%7.3f |%s|\n", ys[static_cast<std::size_t>(row)],
                line.c_str());
  }

  std::printf("\ntransition curves along the map:\n");
  std::printf("  k (reflected wave changes type across it):\n");
  for (double x : {1.5, 3.0, 10.0, 30.0})
    std::printf("    k(%-4g) = %.12g\n", x, k_curve(x, gas));
  std::printf("  h (second sign change, x > x0 = %.6g):\n", pts.x0);
  for (double x : {5.0, 10.0, 30.0})
    if (const auto h = h_curve(x, gas))
      std::printf("    h(%-4g) = %.12g\n", x, *h);
  std::printf("  vacuum boundary V (x-shock over y-rarefaction):\n");
  for (double x : {2.0, 5.0, 30.0})
    std::printf("    V(%-4g) = %.12g\n", x, V_vacuum_curve(x, gas));

  // How strong a backward shock must be before a sample overtaking
  // collision flips its reflected wave from rarefaction to shock.
  std::printf("\noutgoing strengths along y = 2:\n");
  std::printf("  %-8s %-22s %-22s %s\n", "x", "B", "C", "F");
  for (double x : {1.5, 2.0, 4.0, 8.0, 16.0}) {
    const InteractionOutcome out =
        solve_interaction({InteractionKind::IIIa, x, 2.0}, gas);
    std::printf("  %-8g %-22.15g %-22.15g %.15g\n", x, out.B, out.C, out.F);
  }

  return 0;
}
