// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <stdexcept>

#include "wavelab/wavelab.hpp"

using namespace wavelab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
const GasConstants g53 = derive_constants(5.0 / 3.0);
const GasConstants g14 = derive_constants(1.4);
}  // namespace

TEST_CASE("colliding streams produce two shocks", "[riemann]") {
  const PrimitiveState left{1.0, 0.0, 1.0};
  const PrimitiveState right{1.0, -2.0, 1.0};
  const RiemannSolution sol = solve(left, right, g53);

  REQUIRE_FALSE(sol.vacuum);
  REQUIRE_THAT(sol.B, WithinRel(3.1196329811802245, 1e-12));
  REQUIRE_THAT(sol.C, WithinRel(1.0, 1e-12));
  REQUIRE_THAT(sol.F, WithinRel(0.32055052822966322, 1e-12));
  REQUIRE(sol.wave_types[0] == WaveType::Shock);
  REQUIRE(sol.wave_types[1] == WaveType::Null);
  REQUIRE(sol.wave_types[2] == WaveType::Shock);
  REQUIRE(sol.entropy_jump == EntropyJump::None);
  REQUIRE_FALSE(sol.fan.has_value());

  REQUIRE_THAT(sol.left_middle.tau, WithinRel(0.52822021129186529, 1e-12));
  REQUIRE_THAT(sol.left_middle.u, WithinRel(-1.0, 1e-12));
  REQUIRE_THAT(sol.left_middle.p, WithinRel(3.1196329811802245, 1e-12));
  REQUIRE(sol.right_middle.p == sol.left_middle.p);
  REQUIRE(sol.right_middle.u == sol.left_middle.u);

  const SpeedInterval bs =
      wave_speed(WaveFamily::BackwardAcoustic, sol.B, left, g53);
  REQUIRE_THAT(bs.head, WithinRel(-2.1196329811802245, 1e-12));

  REQUIRE(recomposition_residual(sol, left, right, g53) < 1e-12);
  REQUIRE(sol.residuals.velocity_mismatch < 1e-12);
}

TEST_CASE("pressure-jump tube: rarefaction, contact, shock", "[riemann]") {
  const PrimitiveState left{1.0, 0.0, 1.0};
  const PrimitiveState right{8.0, 0.0, 0.1};
  const RiemannSolution sol = solve(left, right, g14);

  REQUIRE_FALSE(sol.vacuum);
  REQUIRE_THAT(sol.B, WithinRel(0.30313017805064682, 1e-11));
  REQUIRE_THAT(sol.C, WithinRel(1.6052772145292718, 1e-11));
  REQUIRE_THAT(sol.F, WithinRel(0.32989127193826296, 1e-11));
  REQUIRE(sol.wave_types[0] == WaveType::Rarefaction);
  REQUIRE(sol.wave_types[1] == WaveType::ContactUp);
  REQUIRE(sol.wave_types[2] == WaveType::Shock);
  REQUIRE(sol.entropy_jump == EntropyJump::Up);

  REQUIRE_THAT(sol.left_middle.u, WithinRel(0.92745262004894995, 1e-11));
  REQUIRE_THAT(sol.left_middle.tau, WithinRel(2.3456589915984574, 1e-11));
  REQUIRE_THAT(sol.right_middle.tau, WithinRel(3.7654329322687122, 1e-11));
  REQUIRE_THAT(sol.right_middle.tau / sol.left_middle.tau,
               WithinRel(sol.C, 1e-13));

  const SpeedInterval fan =
      wave_speed(WaveFamily::BackwardAcoustic, sol.B, left, g14);
  REQUIRE_THAT(fan.head, WithinRel(-1.1832159566199232, 1e-13));
  REQUIRE_THAT(fan.tail, WithinRel(-0.42534973590949374, 1e-11));

  const SpeedInterval fwd =
      wave_speed(WaveFamily::ForwardAcoustic, sol.F, sol.right_middle, g14);
  REQUIRE_THAT(fwd.head, WithinRel(0.21901946650377227, 1e-10));

  REQUIRE(recomposition_residual(sol, left, right, g14) < 1e-9);
}

TEST_CASE("receding streams produce two rarefactions", "[riemann]") {
  const PrimitiveState left{1.0, 0.0, 1.0};
  const PrimitiveState right{1.0, 1.0, 1.0};
  const RiemannSolution sol = solve(left, right, g53);

  REQUIRE_THAT(sol.B, WithinRel(0.50100589608514665, 1e-12));
  REQUIRE_THAT(sol.C, WithinRel(1.0, 1e-12));
  REQUIRE_THAT(sol.F, WithinRel(1.9959844940228979, 1e-12));
  REQUIRE_THAT(sol.left_middle.u, WithinRel(0.5, 1e-12));
  REQUIRE(sol.wave_types[0] == WaveType::Rarefaction);
  REQUIRE(sol.wave_types[2] == WaveType::Rarefaction);
}

TEST_CASE("identical states snap to the trivial solution", "[riemann]") {
  const PrimitiveState s{0.7, 1.3, 2.1};
  const RiemannSolution sol = solve(s, s, g14);
  REQUIRE_FALSE(sol.vacuum);
  REQUIRE(sol.B == 1.0);
  REQUIRE(sol.C == 1.0);
  REQUIRE(sol.F == 1.0);
  REQUIRE(sol.wave_types[0] == WaveType::Null);
  REQUIRE(sol.wave_types[1] == WaveType::Null);
  REQUIRE(sol.wave_types[2] == WaveType::Null);
  REQUIRE(sol.residuals.iterations == 0);
  REQUIRE(recomposition_residual(sol, s, s, g14) == 0.0);
}

TEST_CASE("pure contact data snaps without iteration", "[riemann]") {
  const PrimitiveState left{1.0, 0.4, 2.0};
  const PrimitiveState right{3.0, 0.4, 2.0};
  const RiemannSolution sol = solve(left, right, g14);
  REQUIRE(sol.B == 1.0);
  REQUIRE(sol.F == 1.0);
  REQUIRE(sol.C == 3.0);
  REQUIRE(sol.wave_types[0] == WaveType::Null);
  REQUIRE(sol.wave_types[1] == WaveType::ContactUp);
  REQUIRE(sol.wave_types[2] == WaveType::Null);
  REQUIRE(sol.residuals.iterations == 0);
}

TEST_CASE("vacuum forms when the streams recede fast enough", "[riemann]") {
  const PrimitiveState left{1.0, 0.0, 1.0};
  const double gap = 11.832159566199232;  // 2 nu for tau = p = 1

  const PrimitiveState fast{1.0, gap * (1.0 + 1e-12), 1.0};
  REQUIRE(vacuum_check(left, fast, g14));
  const RiemannSolution sol = solve(left, fast, g14);
  REQUIRE(sol.vacuum);
  REQUIRE(std::isnan(sol.B));
  REQUIRE(std::isnan(sol.C));
  REQUIRE(std::isnan(sol.F));
  REQUIRE(sol.fan.has_value());
  REQUIRE(sol.fan->first == char_speed(-1, left, g14));
  REQUIRE(sol.fan->second == char_speed(+1, fast, g14));
  REQUIRE(sol.wave_types[0] == WaveType::Rarefaction);
  REQUIRE(sol.wave_types[1] == WaveType::Null);
  REQUIRE(sol.wave_types[2] == WaveType::Rarefaction);
  REQUIRE(sol.entropy_jump == EntropyJump::None);
  REQUIRE(recomposition_residual(sol, left, fast, g14) == 0.0);

  const PrimitiveState slow{1.0, gap * (1.0 - 1e-12), 1.0};
  REQUIRE_FALSE(vacuum_check(left, slow, g14));
  REQUIRE_FALSE(solve(left, slow, g14).vacuum);

  // Unequal entropy across the vacuum keeps a directed contact marker.
  const PrimitiveState hot{1.0, 30.0, 5.0};
  const RiemannSolution dir = solve(left, hot, g14);
  REQUIRE(dir.vacuum);
  REQUIRE(dir.wave_types[1] == WaveType::ContactUp);
  REQUIRE(dir.entropy_jump == EntropyJump::Up);
}

TEST_CASE("assemble_fan rejects classical data", "[riemann]") {
  const PrimitiveState left{1.0, 0.0, 1.0};
  const PrimitiveState right{1.0, 1.0, 1.0};
  REQUIRE_THROWS_AS(assemble_fan(left, right, g53), std::invalid_argument);
}

TEST_CASE("mirror symmetry swaps the acoustic strengths", "[riemann]") {
  const PrimitiveState left{1.0, 0.3, 2.0};
  const PrimitiveState right{2.5, -0.4, 0.7};
  const RiemannSolution sol = solve(left, right, g14);

  const PrimitiveState mleft{right.tau, -right.u, right.p};
  const PrimitiveState mright{left.tau, -left.u, left.p};
  const RiemannSolution mir = solve(mleft, mright, g14);

  REQUIRE_THAT(mir.B, WithinRel(1.0 / sol.F, 1e-11));
  REQUIRE_THAT(mir.C, WithinRel(1.0 / sol.C, 1e-11));
  REQUIRE_THAT(mir.F, WithinRel(1.0 / sol.B, 1e-11));
}

TEST_CASE("curve function is increasing and hits its target", "[riemann]") {
  const PrimitiveState left{1.0, 0.0, 1.0};
  const PrimitiveState right{8.0, 0.0, 0.1};
  const double target = curve_target(left, right);
  double prev = -1e300;
  for (double B : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    const double v = curve_function(B, left, right, g14);
    REQUIRE(v > prev);
    prev = v;
  }
  const RiemannSolution sol = solve(left, right, g14);
  REQUIRE_THAT(curve_function(sol.B, left, right, g14),
               WithinAbs(target, 1e-10));
}

TEST_CASE("solver rejects unphysical input", "[riemann]") {
  REQUIRE_THROWS_AS(solve({0.0, 0.0, 1.0}, {1.0, 0.0, 1.0}, g14),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(solve({1.0, 0.0, 1.0}, {1.0, 0.0, -1.0}, g14),
                    std::invalid_argument);
}
