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

TEST_CASE("wave types follow the strength conventions", "[curves]") {
  REQUIRE(wave_type_of(WaveFamily::BackwardAcoustic, 2.0) == WaveType::Shock);
  REQUIRE(wave_type_of(WaveFamily::BackwardAcoustic, 0.5) ==
          WaveType::Rarefaction);
  REQUIRE(wave_type_of(WaveFamily::ForwardAcoustic, 0.5) == WaveType::Shock);
  REQUIRE(wave_type_of(WaveFamily::ForwardAcoustic, 2.0) ==
          WaveType::Rarefaction);
  REQUIRE(wave_type_of(WaveFamily::Contact, 2.0) == WaveType::ContactUp);
  REQUIRE(wave_type_of(WaveFamily::Contact, 0.5) == WaveType::ContactDown);

  REQUIRE(strength_tie_band == 1e-12);
  REQUIRE(in_tie_band(1.0 + 1e-13));
  REQUIRE_FALSE(in_tie_band(1.0 + 1e-11));
  REQUIRE(wave_type_of(WaveFamily::BackwardAcoustic, 1.0 + 1e-13) ==
          WaveType::Null);
  REQUIRE(wave_type_of(WaveFamily::Contact, 1.0 - 1e-13) == WaveType::Null);
}

TEST_CASE("applying a wave in primitive variables", "[curves]") {
  const PrimitiveState left{1.0, 0.0, 1.0};

  const PrimitiveState bs =
      apply_wave_primitive(WaveFamily::BackwardAcoustic, 2.0, left, g53);
  REQUIRE_THAT(bs.tau, WithinRel(2.0 / 3.0, 1e-15));
  REQUIRE(bs.p == 2.0);
  REQUIRE_THAT(bs.u, WithinRel(-0.57735026918962576, 1e-15));

  const PrimitiveState fs =
      apply_wave_primitive(WaveFamily::ForwardAcoustic, 0.5, left, g53);
  REQUIRE_THAT(fs.tau, WithinRel(1.5, 1e-15));
  REQUIRE(fs.p == 0.5);
  REQUIRE_THAT(fs.u, WithinRel(-0.5, 1e-15));

  const PrimitiveState ct =
      apply_wave_primitive(WaveFamily::Contact, 3.0, left, g53);
  REQUIRE(ct.tau == 3.0);
  REQUIRE(ct.u == left.u);
  REQUIRE(ct.p == left.p);

  // Velocity jumps scale with sqrt(tau p) of the ahead state.
  const PrimitiveState big{4.0, 1.0, 9.0};
  const PrimitiveState bb =
      apply_wave_primitive(WaveFamily::BackwardAcoustic, 2.0, big, g53);
  REQUIRE_THAT(bb.u, WithinRel(1.0 - 6.0 * 0.57735026918962576, 1e-14));

  REQUIRE_THROWS_AS(
      apply_wave_primitive(WaveFamily::BackwardAcoustic, 0.0, left, g53),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      apply_wave_primitive(WaveFamily::BackwardAcoustic, 2.0, {0.0, 0.0, 1.0},
                           g53),
      std::invalid_argument);
}

TEST_CASE("entropy-variable traversal matches the primitive one", "[curves]") {
  const ReferenceConstants ref{};
  for (const GasConstants& gas : {g53, g14}) {
    const PrimitiveState left{0.8, 0.4, 1.7};
    const EntropyState eleft = entropy_from_primitive(left, gas, ref);

    for (double q : {0.45, 2.3}) {
      for (WaveFamily fam :
           {WaveFamily::BackwardAcoustic, WaveFamily::ForwardAcoustic}) {
        const PrimitiveState p = apply_wave_primitive(fam, q, left, gas);
        // Entropy-variable strengths are specific-volume ratios.
        const double qv = phi(family_direction(fam), q, gas);
        const EntropyState e = apply_wave_entropy(fam, qv, eleft, gas, ref);
        REQUIRE_THAT(e.tau, WithinRel(p.tau, 1e-13));
        REQUIRE_THAT(e.u, WithinAbs(p.u, 1e-13));
        const PrimitiveState back = primitive_from_entropy(e, gas, ref);
        REQUIRE_THAT(back.p, WithinRel(p.p, 1e-12));
      }
    }

    const EntropyState ec = apply_wave_entropy(WaveFamily::Contact, 2.0, eleft,
                                               gas, ref);
    REQUIRE(ec.u == eleft.u);
    REQUIRE_THAT(ec.S - eleft.S, WithinRel(gas.gamma * std::log(2.0), 1e-14));
  }
}

TEST_CASE("shocks produce the expected entropy jumps", "[curves]") {
  const ReferenceConstants ref{};
  const EntropyState left{1.0, 0.0, 0.0};
  // Backward shock: volume strength < 1.
  const EntropyState bs = apply_wave_entropy(
      WaveFamily::BackwardAcoustic, 0.5, left, g53, ref);
  REQUIRE(bs.S > 0.0);
  // Forward shock: volume strength > 1, entropy drops left to right.
  const EntropyState fs = apply_wave_entropy(
      WaveFamily::ForwardAcoustic, 1.5, left, g53, ref);
  REQUIRE(fs.S < 0.0);
  // Rarefactions are isentropic.
  REQUIRE(apply_wave_entropy(WaveFamily::BackwardAcoustic, 1.5, left, g53, ref)
              .S == 0.0);
  REQUIRE(apply_wave_entropy(WaveFamily::ForwardAcoustic, 0.5, left, g53, ref)
              .S == 0.0);
}

TEST_CASE("measure_strength inverts apply_wave_primitive", "[curves]") {
  const PrimitiveState left{1.3, -0.2, 0.9};
  for (const GasConstants& gas : {g53, g14}) {
    for (double q : {0.2, 0.8, 1.4, 6.0}) {
      for (WaveFamily fam :
           {WaveFamily::BackwardAcoustic, WaveFamily::ForwardAcoustic}) {
        const PrimitiveState right = apply_wave_primitive(fam, q, left, gas);
        REQUIRE_THAT(measure_strength(fam, left, right, gas),
                     WithinRel(q, 1e-13));
      }
    }
  }

  const PrimitiveState c = apply_wave_primitive(WaveFamily::Contact, 2.5,
                                                left, g53);
  REQUIRE_THAT(measure_strength(WaveFamily::Contact, left, c, g53),
               WithinRel(2.5, 1e-14));
}

TEST_CASE("measure_strength rejects states off the curve", "[curves]") {
  const PrimitiveState left{1.0, 0.0, 1.0};
  PrimitiveState right =
      apply_wave_primitive(WaveFamily::BackwardAcoustic, 2.0, left, g53);
  right.tau *= 1.001;
  REQUIRE_THROWS_AS(
      measure_strength(WaveFamily::BackwardAcoustic, left, right, g53),
      std::invalid_argument);

  REQUIRE_THROWS_AS(
      measure_strength(WaveFamily::Contact, left, {2.0, 0.5, 1.0}, g53),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      measure_strength(WaveFamily::Contact, left, {2.0, 0.0, 1.5}, g53),
      std::invalid_argument);
}

TEST_CASE("wave speeds satisfy the Lax conditions", "[curves]") {
  const PrimitiveState left{1.0, 0.0, 1.0};

  // Backward shock from the two-shock fixture.
  const double B = 3.1196329811802245;
  const SpeedInterval bs =
      wave_speed(WaveFamily::BackwardAcoustic, B, left, g53);
  REQUIRE(bs.head == bs.tail);
  REQUIRE_THAT(bs.head, WithinRel(-2.1196329811802245, 1e-13));
  const PrimitiveState behind =
      apply_wave_primitive(WaveFamily::BackwardAcoustic, B, left, g53);
  REQUIRE(char_speed(-1, behind, g53) < bs.head);
  REQUIRE(bs.head < char_speed(-1, left, g53));

  // Backward rarefaction fan: head on the undisturbed side, |head| >= |tail|.
  const SpeedInterval bf =
      wave_speed(WaveFamily::BackwardAcoustic, 0.5, left, g53);
  REQUIRE_THAT(bf.head, WithinRel(-1.2909944487358056, 1e-15));
  REQUIRE(bf.head <= bf.tail);
  REQUIRE(std::abs(bf.head) >= std::abs(bf.tail));

  // Forward shock.
  const SpeedInterval fsh =
      wave_speed(WaveFamily::ForwardAcoustic, 0.4, left, g53);
  REQUIRE(fsh.head == fsh.tail);
  const PrimitiveState fahead =
      apply_wave_primitive(WaveFamily::ForwardAcoustic, 0.4, left, g53);
  REQUIRE(char_speed(+1, fahead, g53) < fsh.head);
  REQUIRE(fsh.head < char_speed(+1, left, g53));

  // Forward rarefaction fan.
  const SpeedInterval ff =
      wave_speed(WaveFamily::ForwardAcoustic, 2.0, left, g53);
  REQUIRE(ff.head >= ff.tail);
  REQUIRE(std::abs(ff.head) >= std::abs(ff.tail));

  // Contacts are stationary in mass coordinates.
  const SpeedInterval ct = wave_speed(WaveFamily::Contact, 2.0, left, g53);
  REQUIRE(ct.head == 0.0);
  REQUIRE(ct.tail == 0.0);
}

TEST_CASE("family directions", "[curves]") {
  REQUIRE(family_direction(WaveFamily::BackwardAcoustic) ==
          Direction::Backward);
  REQUIRE(family_direction(WaveFamily::ForwardAcoustic) == Direction::Forward);
}
