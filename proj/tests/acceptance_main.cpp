// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
//
// Acceptance harness: eight numbered criteria, each printed as a single
// pass/fail line (with indented measurements for anything that misses its
// target).  Run all with no arguments or one with --criterion N.
//
// Criteria 4 and 5 each contain one sub-check whose tolerance is tighter
// than the underlying curves allow; they are evaluated and reported
// faithfully rather than loosened, so those two runs are expected to fail.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "wavelab/wavelab.hpp"

using namespace wavelab;

namespace {

constexpr std::uint64_t kSeed = 20260821;

const std::vector<double>& sweep_gammas() {
  static const std::vector<double> g = {1.2, 1.4, 5.0 / 3.0, 1.9, 2.0, 3.0};
  return g;
}

struct Sub {
  std::string label;
  bool passed;
  std::string detail;
};

struct Criterion {
  std::string label;
  std::vector<Sub> subs;

  bool passed() const {
    for (const Sub& s : subs)
      if (!s.passed) return false;
    return true;
  }
  void add(bool ok, std::string what, std::string detail = "") {
    subs.push_back({std::move(what), ok, std::move(detail)});
  }
};

std::string fmt(double v) { return format_g17(v); }

double rel_gap(double got, double want) {
  return std::abs(got - want) /
         std::max({std::abs(got), std::abs(want), 1e-300});
}

constexpr InteractionKind all_kinds[] = {
    InteractionKind::Ia,   InteractionKind::Ib,   InteractionKind::Ic,
    InteractionKind::IIa,  InteractionKind::IIb,  InteractionKind::IIc,
    InteractionKind::IId,  InteractionKind::IIIa, InteractionKind::IIIb,
    InteractionKind::IIIc};

const char* kind_label(InteractionKind k) {
  switch (k) {
    case InteractionKind::Ia: return "Ia";
    case InteractionKind::Ib: return "Ib";
    case InteractionKind::Ic: return "Ic";
    case InteractionKind::IIa: return "IIa";
    case InteractionKind::IIb: return "IIb";
    case InteractionKind::IIc: return "IIc";
    case InteractionKind::IId: return "IId";
    case InteractionKind::IIIa: return "IIIa";
    case InteractionKind::IIIb: return "IIIb";
    default: return "IIIc";
  }
}

// --------------------------------------------------------------------------
// Criterion 1: every interaction agrees with an independent Riemann solve of
// its composed far-field states.  10^4 pairs per kind per gamma, strengths
// log-uniform on [1e-3, 1e3] within each kind's validity quadrant; outgoing
// strengths within 1e-9 of 1 are excluded from the per-wave comparison.
// Tolerance 1e-9 relative on (B, C, F); types and the vacuum flag must match
// exactly; total runtime under 120 s.
Criterion criterion1() {
  Criterion c{"interaction engine matches the Riemann oracle", {}};
  const auto t_start = std::chrono::steady_clock::now();

  const int per_kind = 10000;
  long long compared = 0;
  long long excluded = 0;
  double max_gap = 0.0;
  bool ok = true;
  std::string first_fail;

  for (std::size_t gi = 0; gi < sweep_gammas().size(); ++gi) {
    const GasConstants gas = derive_constants(sweep_gammas()[gi]);
    for (int ki = 0; ki < 10; ++ki) {
      const InteractionKind kind = all_kinds[ki];
      for (int i = 0; i < per_kind; ++i) {
        SplitMix64 rng = stream_at(
            kSeed ^ 0xacce5501ULL,
            (static_cast<std::uint64_t>(gi * 16 + ki) << 32) |
                static_cast<std::uint64_t>(i));
        const IncomingPair pair = sample_pair(kind, rng);
        const InteractionOutcome out = solve_interaction(pair, gas);
        const auto [far_left, far_right] = compose_extremes(pair, gas);
        const RiemannSolution oracle = solve(far_left, far_right, gas);
        ++compared;

        if (out.vacuum != oracle.vacuum) {
          ok = false;
          if (first_fail.empty())
            first_fail = std::string("vacuum flag mismatch at ") +
                         kind_label(kind) + "(" + fmt(pair.s_left) + ", " +
                         fmt(pair.s_right) + ") gamma=" + fmt(gas.gamma);
          continue;
        }
        if (out.vacuum) {
          if (out.types != oracle.wave_types) {
            ok = false;
            if (first_fail.empty())
              first_fail = std::string("vacuum wave types differ at ") +
                           kind_label(kind) + "(" + fmt(pair.s_left) + ", " +
                           fmt(pair.s_right) + ")";
          }
          continue;
        }

        const double engine[3] = {out.B, out.C, out.F};
        const double expect[3] = {oracle.B, oracle.C, oracle.F};
        for (int w = 0; w < 3; ++w) {
          if (std::abs(engine[w] - 1.0) <= 1e-9 ||
              std::abs(expect[w] - 1.0) <= 1e-9) {
            ++excluded;
            continue;
          }
          const double gap = rel_gap(engine[w], expect[w]);
          if (gap > max_gap) max_gap = gap;
          if (gap > 1e-9 || out.types[w] != oracle.wave_types[w]) {
            ok = false;
            if (first_fail.empty())
              first_fail = std::string("component ") + std::to_string(w) +
                           " mismatch at " + kind_label(kind) + "(" +
                           fmt(pair.s_left) + ", " + fmt(pair.s_right) +
                           ") gamma=" + fmt(gas.gamma) + ": engine " +
                           fmt(engine[w]) + " vs oracle " + fmt(expect[w]);
          }
        }
      }
    }
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  c.add(ok,
        "agreement within 1e-9 relative over " + std::to_string(compared) +
            " pairs",
        ok ? "max relative gap " + fmt(max_gap) + ", " +
                 std::to_string(excluded) + " near-unit waves excluded"
           : first_fail);
  c.add(seconds < 120.0, "runtime under 120 s",
        "measured " + fmt(seconds) + " s");
  return c;
}

// --------------------------------------------------------------------------
// Criteria 2, 3, 6: the head-on, contact-crossing, and calculus suites at
// 10^4 samples per gamma, reusing the library verifier so the acceptance
// run and `wavelab verify` agree on what is being checked.
Criterion from_verifier(const char* label,
                        PropertyResult (*suite)(const VerifyConfig&),
                        int samples) {
  Criterion c{label, {}};
  for (double gamma : sweep_gammas()) {
    VerifyConfig cfg;
    cfg.gas = derive_constants(gamma);
    cfg.seed = kSeed;
    cfg.samples = samples;
    const PropertyResult r = suite(cfg);
    c.add(r.passed,
          "gamma = " + fmt(gamma) + " (" + std::to_string(r.cases) +
              " checks)",
          r.passed ? "max residual " + fmt(r.max_residual) : r.note);
  }
  return c;
}

Criterion criterion2() {
  return from_verifier("head-on interactions (strength signs, contact rule, "
                       "vacuum boundary)",
                       &verify_theorem1, 10000);
}

Criterion criterion3() {
  Criterion c = from_verifier(
      "contact-crossing interactions (orderings, invariance, transition)",
      &verify_theorem2, 10000);
  // Locate the transmitted-contact sign change directly and compare it with
  // the closed-form transition curve, 1e-6 relative.
  for (double gamma : {1.4, 2.0}) {
    const GasConstants gas = derive_constants(gamma);
    for (double cc : {1.2, 2.0, 5.0}) {
      const double f_t = iid_contact_transition(cc, gas);
      auto g = [&](double f) {
        return solve_interaction({InteractionKind::IId, f, cc}, gas).C - 1.0;
      };
      const double lo = f_t * (1.0 - 1e-3), hi = f_t * (1.0 + 1e-3);
      const RootResult root = find_root_bracketed(g, lo, hi, g(lo), g(hi));
      const double gap = rel_gap(root.x, f_t);
      c.add(gap <= 1e-6,
            "contact crossing location, gamma = " + fmt(gamma) +
                ", c = " + fmt(cc),
            "relative gap " + fmt(gap));
    }
  }
  return c;
}

Criterion criterion6() {
  Criterion c{"kernel identity and calculus suite", {}};
  for (double gamma : sweep_gammas()) {
    VerifyConfig cfg;
    cfg.gas = derive_constants(gamma);
    cfg.seed = kSeed;
    cfg.samples = 10000;
    const PropertyResult rel3 = verify_rel3(cfg);
    c.add(rel3.passed,
          "bridge identity, gamma = " + fmt(gamma) + " (" +
              std::to_string(rel3.cases) + " grid points)",
          rel3.passed ? "max residual " + fmt(rel3.max_residual) : rel3.note);
    const PropertyResult lem = verify_lemmas(cfg);
    c.add(lem.passed,
          "monotonicity/convexity lemmas, gamma = " + fmt(gamma) + " (" +
              std::to_string(lem.cases) + " checks)",
          lem.passed ? "max residual " + fmt(lem.max_residual) : lem.note);
  }
  return c;
}

// --------------------------------------------------------------------------
// Criterion 4: Group III transition structure around the k curve.
Criterion criterion4() {
  Criterion c{"overtaking transition curves (k anchor, asymptote, contact "
              "signs, vacuum boundary)",
              {}};

  for (double gamma : sweep_gammas()) {
    const GasConstants gas = derive_constants(gamma);
    const SpecialPoints pts = special_points(gas);

    // k(1) = 1 within 1e-10.
    const double k1 = k_curve(1.0, gas);
    c.add(std::abs(k1 - 1.0) <= 1e-10, "k(1) = 1, gamma = " + fmt(gamma),
          "measured " + fmt(k1));

    // k strictly decreasing across six decades.
    bool decreasing = true;
    double prev = std::numeric_limits<double>::infinity();
    for (double x : detail::verify_log_grid(1e-3, 1e3, 200)) {
      const double k = k_curve(x, gas);
      if (!(k < prev)) decreasing = false;
      prev = k;
    }
    c.add(decreasing, "k strictly decreasing, gamma = " + fmt(gamma));

    // Distance from the asymptote at x = 1e8, absolute 1e-5.  The approach
    // is O(x^(-zeta)), so the measured gap sits orders of magnitude above
    // the target at every calibrated gamma; reported as measured.
    const double k_far = k_curve(1e8, gas);
    const double gap = std::abs(k_far - pts.yhat);
    std::string detail = "measured " + fmt(gap);
    if (!(gap <= 1e-5)) {
      const double corrected =
          std::pow(k_far, gas.zeta) -
          (std::pow(pts.yhat, gas.zeta) + 0.5 * std::pow(1e8, -gas.zeta));
      detail += "; first-order model |k^zeta - (yhat^zeta + x^-zeta/2)| = " +
                fmt(std::abs(corrected));
    }
    c.add(gap <= 1e-5, "|k(1e8) - yhat| <= 1e-5, gamma = " + fmt(gamma),
          detail);

    // The k and h junctions meet at (x0, y0) with both defining residuals
    // below 1e-9.
    const double rk = K_classifier(pts.x0, pts.y0, gas);
    const double rh = H_reflect(pts.x0, pts.y0, gas);
    c.add(std::abs(rk) <= 1e-9 && std::abs(rh) <= 1e-9,
          "junction residuals at (x0, y0), gamma = " + fmt(gamma),
          "K = " + fmt(rk) + ", H = " + fmt(rh));
  }

  // Contact direction by kind: 10^4 pairs per kind per gamma.
  {
    bool ok = true;
    long long n = 0;
    std::string fail;
    for (std::size_t gi = 0; gi < sweep_gammas().size(); ++gi) {
      const GasConstants gas = derive_constants(sweep_gammas()[gi]);
      const InteractionKind kinds[] = {InteractionKind::IIIa,
                                       InteractionKind::IIIb,
                                       InteractionKind::IIIc};
      for (int ki = 0; ki < 3; ++ki) {
        for (int i = 0; i < 10000; ++i) {
          SplitMix64 rng = stream_at(
              kSeed ^ 0xacce5504ULL,
              (static_cast<std::uint64_t>(gi * 4 + ki) << 32) |
                  static_cast<std::uint64_t>(i));
          const IncomingPair pair = sample_pair(kinds[ki], rng);
          if (vacuum_condition(pair.kind, pair, gas)) continue;
          const InteractionOutcome out = solve_interaction(pair, gas);
          ++n;
          const bool want_below = kinds[ki] == InteractionKind::IIIa;
          if ((want_below && !(out.C < 1.0)) ||
              (!want_below && !(out.C > 1.0))) {
            ok = false;
            if (fail.empty())
              fail = std::string(kind_label(pair.kind)) + "(" +
                     fmt(pair.s_left) + ", " + fmt(pair.s_right) +
                     ") gave C = " + fmt(out.C);
          }
        }
      }
    }
    c.add(ok, "transmitted contact signs over " + std::to_string(n) +
                  " classical pairs",
          fail);
  }

  // Vacuum boundary: predicate equivalence with the residual-at-zero sign,
  // straddles across V, and the boundary residual itself.
  {
    bool ok = true;
    double max_res = 0.0;
    std::string fail;
    for (double gamma : sweep_gammas()) {
      const GasConstants gas = derive_constants(gamma);
      for (double x : detail::verify_log_grid(1.0 + 1e-3, 1e4, 80)) {
        const double v = V_vacuum_curve(x, gas);
        if (v < 1e-280) continue;
        const double at_boundary =
            interaction_residual_at_zero({InteractionKind::IIIb, x, v}, gas);
        max_res = std::max(max_res, std::abs(at_boundary));
        if (!(std::abs(at_boundary) < 1e-8)) {
          ok = false;
          if (fail.empty())
            fail = "boundary residual " + fmt(at_boundary) +
                   " at x = " + fmt(x) + ", gamma = " + fmt(gamma);
        }
        for (double side : {1.0 - 1e-6, 1.0 + 1e-6}) {
          const IncomingPair pair{InteractionKind::IIIb, x, v * side};
          const bool predicate = vacuum_condition(pair.kind, pair, gas);
          const bool res_sign =
              interaction_residual_at_zero(pair, gas) >= 0.0;
          const bool want = side < 1.0;
          if (predicate != want || res_sign != want) {
            ok = false;
            if (fail.empty())
              fail = "straddle mismatch at x = " + fmt(x) +
                     ", side = " + fmt(side) + ", gamma = " + fmt(gamma);
          }
        }
      }
    }
    c.add(ok, "vacuum boundary straddles and residual below 1e-8",
          ok ? "max boundary residual " + fmt(max_res) : fail);
  }

  return c;
}

// --------------------------------------------------------------------------
// Criterion 5: regime split of the reflected-wave transition.
Criterion criterion5() {
  Criterion c{"regime split of the reflected transition curve", {}};

  {  // gamma = 1.4: h everywhere, explicit branch limit at x -> 1.
    const GasConstants gas = derive_constants(1.4);
    bool defined = true;
    for (double x : detail::verify_log_grid(1.0 + 1e-9, 1e6, 200)) {
      if (!h_curve(x, gas).has_value()) defined = false;
    }
    c.add(defined, "gamma = 1.4: h defined for all x > 1");

    const double at = h1_explicit(1.0 + 1e-8, gas);
    const double want = 0.4782969;  // (9/10)^7
    const double gap = std::abs(at - want);
    std::string detail = "measured " + fmt(gap);
    if (!(gap <= 1e-9)) {
      const double slope =
          std::abs(h1_explicit(1.0 + 1e-6, gas) - want) / 1e-6;
      detail += "; h1(1 + d) approaches the limit linearly with slope " +
                fmt(slope) + ", so |h1(1+1e-8) - y1| = " + fmt(gap) +
                " cannot drop below 1e-9 at d = 1e-8";
    }
    c.add(gap <= 1e-9, "gamma = 1.4: |h1(1+1e-8) - 0.4782969| <= 1e-9",
          detail);
  }

  {  // gamma = 5/3: h exists and the alpha root collapses to (1, 1).
    const GasConstants gas = derive_constants(5.0 / 3.0);
    bool defined = true;
    double max_res = 0.0;
    for (double x : detail::verify_log_grid(1.0 + 1e-6, 100.0, 120)) {
      const auto h = h_curve(x, gas);
      if (!h) {
        defined = false;
        continue;
      }
      max_res = std::max(max_res, std::abs(H_reflect(x, *h, gas)));
    }
    c.add(defined && max_res < 1e-9, "gamma = 5/3: h exists on (1, 100]",
          "max reflection residual " + fmt(max_res));
    const AlphaRootInfo roots = alpha_roots(gas);
    c.add(roots.y0 == 1.0 && roots.x0 == 1.0,
          "gamma = 5/3: no alpha root besides (1, 1)");
  }

  {  // gamma = 1.9: tangent onset at xbar; j crosses 1 there too.
    const GasConstants gas = derive_constants(1.9);
    const double xbar = *special_points(gas).xbar;
    const auto h_at = h_curve(xbar, gas);
    c.add(h_at && std::abs(*h_at - 1.0) <= 1e-8,
          "gamma = 1.9: h(xbar) = 1 within 1e-8",
          h_at ? "measured " + fmt(*h_at) : "h undefined at xbar");
    const double j_at = j_explicit(xbar, gas);
    const bool crosses = std::abs(j_at - 1.0) <= 1e-8 &&
                         j_explicit(xbar * (1.0 - 1e-6), gas) > 1.0 &&
                         j_explicit(xbar * (1.0 + 1e-6), gas) < 1.0;
    c.add(crosses, "gamma = 1.9: j crosses 1 at xbar within 1e-8",
          "j(xbar) = " + fmt(j_at));
  }

  for (double gamma : {2.0, 3.0}) {  // upper regime
    const GasConstants gas = derive_constants(gamma);
    bool none = true;
    for (double x : {1.2, 2.0, 10.0, 1e3}) {
      if (h_curve(x, gas).has_value()) none = false;
    }
    c.add(none, "gamma = " + fmt(gamma) + ": no reflected transition");
    const double ystar = *special_points(gas).ystar;
    const double j_far = j_explicit(1e9, gas);
    c.add(std::abs(j_far - ystar) <= 1e-6,
          "gamma = " + fmt(gamma) + ": j(1e9) at its limit within 1e-6",
          "measured gap " + fmt(std::abs(j_far - ystar)));
    if (gamma == 2.0)
      c.add(std::abs(ystar - 1.0) <= 1e-10,
            "gamma = 2: the j limit equals 1 within 1e-10",
            "measured " + fmt(ystar));
  }

  return c;
}

// --------------------------------------------------------------------------
// Criterion 7: Group III solved independently in (tau, u, S) variables.
Criterion criterion7() {
  Criterion c{"entropy-variable cross check of overtaking interactions", {}};
  for (std::size_t gi = 0; gi < sweep_gammas().size(); ++gi) {
    const GasConstants gas = derive_constants(sweep_gammas()[gi]);
    const InteractionKind kinds[] = {InteractionKind::IIIa,
                                     InteractionKind::IIIb,
                                     InteractionKind::IIIc};
    bool ok = true;
    long long n = 0;
    double max_gap = 0.0;
    std::string fail;
    for (int ki = 0; ki < 3; ++ki) {
      for (int i = 0; i < 334; ++i) {
        SplitMix64 rng = stream_at(
            kSeed ^ 0xacce5507ULL,
            (static_cast<std::uint64_t>(gi * 4 + ki) << 32) |
                static_cast<std::uint64_t>(i));
        const IncomingPair pair = sample_pair(kinds[ki], rng);
        if (vacuum_condition(pair.kind, pair, gas)) continue;
        const EntropyCrossCheck ecc = entropy_cross_check(pair, gas);
        const InteractionOutcome out = solve_interaction(pair, gas);
        ++n;

        const double gaps[3] = {rel_gap(ecc.L, ecc.L_from_pressure),
                                rel_gap(ecc.C, ecc.C_from_pressure),
                                rel_gap(ecc.I, ecc.I_from_pressure)};
        for (double g : gaps) max_gap = std::max(max_gap, g);
        const bool sjs = out.types[0] == WaveType::Shock &&
                         out.types[2] == WaveType::Shock;
        const bool contact_ok =
            std::abs(ecc.C - 1.0) <= 1e-9 || ecc.contact_direction_agrees;
        if (gaps[0] > 1e-8 || gaps[1] > 1e-8 || gaps[2] > 1e-8 ||
            ecc.residual_velocity > 1e-9 || !contact_ok ||
            (sjs && ecc.residual_entropy > 1e-9)) {
          ok = false;
          if (fail.empty())
            fail = std::string(kind_label(pair.kind)) + "(" +
                   fmt(pair.s_left) + ", " + fmt(pair.s_right) + ")";
        }
      }
    }
    c.add(ok,
          "gamma = " + fmt(sweep_gammas()[gi]) + " (" + std::to_string(n) +
              " classical pairs)",
          ok ? "max strength gap " + fmt(max_gap) : fail);
  }
  return c;
}

// --------------------------------------------------------------------------
// Criterion 8: strict orderings of the head-on outgoing strengths.
Criterion criterion8() {
  Criterion c{"head-on outgoing strengths interleave the incoming ones", {}};
  for (std::size_t gi = 0; gi < sweep_gammas().size(); ++gi) {
    const GasConstants gas = derive_constants(sweep_gammas()[gi]);

    bool ok_a = true;
    std::string fail_a;
    for (int i = 0; i < 10000; ++i) {
      SplitMix64 rng = stream_at(
          kSeed ^ 0xacce5508ULL,
          (static_cast<std::uint64_t>(gi * 4) << 32) |
              static_cast<std::uint64_t>(i));
      const IncomingPair pair = sample_pair(InteractionKind::Ia, rng);
      const double f = pair.s_left, b = pair.s_right;
      const InteractionOutcome out = solve_interaction(pair, gas);
      if (!(f < out.F && out.F < 1.0 && 1.0 < out.B && out.B < b &&
            out.B + out.F < b + f)) {
        ok_a = false;
        if (fail_a.empty())
          fail_a = "Ia(" + fmt(f) + ", " + fmt(b) + ") gave B = " +
                   fmt(out.B) + ", F = " + fmt(out.F);
      }
    }
    c.add(ok_a,
          "gamma = " + fmt(sweep_gammas()[gi]) +
              ": f < F < 1 < B < b and B + F < b + f on 10^4 collisions",
          fail_a);

    bool ok_b = true;
    std::string fail_b;
    for (int i = 0; i < 10000; ++i) {
      SplitMix64 rng = stream_at(
          kSeed ^ 0xacce5508ULL,
          (static_cast<std::uint64_t>(gi * 4 + 1) << 32) |
              static_cast<std::uint64_t>(i));
      const IncomingPair pair = sample_pair(InteractionKind::Ib, rng);
      const InteractionOutcome out = solve_interaction(pair, gas);
      if (!(out.F < pair.s_left && pair.s_left < 1.0)) {
        ok_b = false;
        if (fail_b.empty())
          fail_b = "Ib(" + fmt(pair.s_left) + ", " + fmt(pair.s_right) +
                   ") gave F = " + fmt(out.F);
      }
    }
    c.add(ok_b,
          "gamma = " + fmt(sweep_gammas()[gi]) +
              ": F < f < 1 on 10^4 shock-rarefaction collisions",
          fail_b);
  }
  return c;
}

void print_criterion(int index, const Criterion& c) {
  std::printf("criterion %d %s: %s\n", index, c.passed() ? "PASS" : "FAIL",
              c.label.c_str());
  for (const Sub& s : c.subs) {
    if (s.passed && s.detail.empty()) continue;
    std::printf("    [%s] %s%s%s\n", s.passed ? "ok" : "FAIL",
                s.label.c_str(), s.detail.empty() ? "" : ": ",
                s.detail.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr,
                   "usage: %s [--criterion N]   (N in 1..8; default all)\n",
                   argv[0]);
      return 2;
    }
  }
  if (only < 0 || only > 8) {
    std::fprintf(stderr, "criterion must be between 1 and 8\n");
    return 2;
  }

  Criterion (*const runners[8])() = {criterion1, criterion2, criterion3,
                                     criterion4, criterion5, criterion6,
                                     criterion7, criterion8};
  bool all_passed = true;
  for (int i = 1; i <= 8; ++i) {
    if (only != 0 && i != only) continue;
    const Criterion c = runners[i - 1]();
    print_criterion(i, c);
    all_passed = all_passed && c.passed();
  }
  return all_passed ? 0 : 1;
}
