// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wavelab/analysis_kernels.hpp"
#include "wavelab/gas_model.hpp"
#include "wavelab/interaction_engine.hpp"
#include "wavelab/root_finding.hpp"
#include "wavelab/wave_kernels.hpp"

namespace wavelab {

namespace detail {

/// Finds a root of f on (lo, hi) by scanning log-spaced grids of increasing
/// density for a sign change and refining the first bracketed cell.
template <typename F>
double root_on_interval(F&& f, double lo, double hi) {
  if (!(lo > 0.0) || !(hi > lo))
    throw std::runtime_error("root_on_interval: empty bracket");
  const double log_lo = std::log(lo), log_hi = std::log(hi);
  for (int n : {64, 256, 1024, 4096}) {
    double x_prev = lo;
    double f_prev = f(lo);
    if (f_prev == 0.0) return lo;
    for (int i = 1; i <= n; ++i) {
      const double x =
          i == n ? hi : std::exp(log_lo + (log_hi - log_lo) * i / n);
      const double fx = f(x);
      if (fx == 0.0) return x;
      if (std::signbit(fx) != std::signbit(f_prev))
        return find_root_bracketed(f, x_prev, x, f_prev, fx, 1e-14).x;
      x_prev = x;
      f_prev = fx;
    }
  }
  throw std::runtime_error("root_on_interval: no sign change located");
}

/// Root of f on (lo, 1) when f also vanishes identically at 1: inside the
/// rounding skirt of that trivial root the sign of f is noise and a plain
/// scan can hand the bracket to y = 1.  Walks down from 1 until f is
/// resolved above the supplied noise floor, then brackets normally.  When
/// the crossing itself hides inside the skirt, the skirt midpoint is the
/// best available answer.
template <typename F>
double root_below_one(F&& f, double lo, double noise) {
  const double f_lo = f(lo);
  if (f_lo == 0.0) return lo;
  for (double d = 1e-13; d < 2e-2; d *= 8.0) {
    const double y = 1.0 - d;
    if (y <= lo) break;
    const double fy = f(y);
    if (std::abs(fy) <= noise) continue;
    if (std::signbit(fy) != std::signbit(f_lo))
      return root_on_interval(f, lo, y);
    return 1.0 - 0.5 * d;
  }
  return root_on_interval(f, lo, 1.0 - 1e-13);
}

constexpr double atlas_regime_band = 1e-9;

}  // namespace detail

/// Functional whose zero set is the locus where the outgoing backward wave
/// of an overtaking pair changes type (B = 1); decreasing in both arguments.
inline double K_classifier(double x, double y, const GasConstants& gas) {
  if (!(x > 0.0) || !(y > 0.0))
    throw std::domain_error("K_classifier: arguments must be positive");
  return psi(Direction::Backward, 1.0 / (x * y), gas) * aux_M(y, gas) +
         psi(Direction::Forward, 1.0 / x, gas) -
         psi(Direction::Backward, y, gas);
}

/// Level at which k (and the vacuum boundary V) flattens as x grows.
inline double k_asymptote(const GasConstants& gas) {
  return std::pow(0.5 * (1.0 - std::sqrt(gas.zeta)), 1.0 / gas.zeta);
}

/// Backward-wave transition curve k(x): the unique root of
/// K_classifier(x, .); k(1) = 1, strictly decreasing.
inline double k_curve(double x, const GasConstants& gas) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error("k_curve: x must be positive and finite");
  auto f = [&](double y) { return -K_classifier(x, y, gas); };
  return solve_increasing(f, k_asymptote(gas) + 1.0 / x, 1e-14).x;
}

/// Reflection functional whose zero set carries the h and i transition
/// curves; y = 1 is always a root and must be excluded when bracketing.
inline double H_reflect(double x, double y, const GasConstants& gas) {
  if (!(x > 0.0) || !(y > 0.0))
    throw std::domain_error("H_reflect: arguments must be positive");
  return psi(Direction::Backward, x * y, gas) -
         psi(Direction::Backward, x, gas) -
         psi(Direction::Backward, y, gas) * aux_M(x, gas);
}

/// Limit level of h(x) as x -> infinity; defined for a < 1/3.
inline std::optional<double> h_asymptote(const GasConstants& gas) {
  if (gas.a >= 1.0 / 3.0 - detail::atlas_regime_band) return std::nullopt;
  const double sz = std::sqrt(gas.zeta);
  auto r = [&](double y) {
    return sz * (std::sqrt(y) - 1.0) - std::expm1(gas.zeta * std::log(y));
  };
  return detail::root_on_interval(r, 1e-12, 1.0 - 1e-9);
}

/// Regime landmarks of the transition diagram.  Optional fields exist only
/// where the regime defines them.
struct SpecialPoints {
  Regime regime;
  double y0;    ///< nontrivial root of alpha (1 in the critical regime)
  double x0;    ///< companion abscissa 1/y0
  double yhat;  ///< k-curve asymptote level
  std::optional<double> y1;      ///< reflection positivity threshold, a <= 1/4
  std::optional<double> xbar;    ///< h-curve onset abscissa, 1/4 < a < 1/3
  std::optional<double> ybar;    ///< i-curve limit at x -> 1, a > 1/4
  std::optional<double> ystar;   ///< j-curve large-x level, a > 1/4
  std::optional<double> h_asym;  ///< h-curve large-x level, a < 1/3
};

inline SpecialPoints special_points(const GasConstants& gas) {
  SpecialPoints p{};
  p.regime = regime_of(gas);
  const AlphaRootInfo roots = alpha_roots(gas);
  p.y0 = roots.y0;
  p.x0 = roots.x0;
  p.yhat = k_asymptote(gas);
  const double a = gas.a;
  const double band = detail::atlas_regime_band;
  if (a <= 0.25 + band)
    p.y1 = std::pow(3.0 / (4.0 * (1.0 - a)), 1.0 / gas.zeta);
  if (a > 0.25 + band) {
    const double sa = std::sqrt(a);
    p.ybar = 2.0 * a * sa / ((1.0 - sa) * (1.0 - sa));
    p.ystar = 4.0 * a * a / ((1.0 - a) * (1.0 - a));
  }
  if (a > 0.25 + band && a < 1.0 / 3.0 - band)
    p.xbar = 4.0 * a * a / (1.0 - 3.0 * a);
  if (a < 1.0 / 3.0 - band) p.h_asym = h_asymptote(gas);
  return p;
}

/// First branch of h in closed form, valid on (1, x0].  Uses a series for
/// the numerator and denominator near x = 1 where the direct expressions
/// cancel catastrophically.
inline double h1_explicit(double x, const GasConstants& gas) {
  if (!(x > 1.0) || !std::isfinite(x))
    throw std::domain_error("h1_explicit: x must exceed 1");
  const double a = gas.a, zeta = gas.zeta, kappa = gas.kappa, nu = gas.nu;
  const double w = x - 1.0;
  const double s = std::sqrt(x + a * x * x);
  const double t = std::sqrt(x + a);
  const double xz = std::pow(x, zeta);
  double num, den;
  if (std::abs(w) <= 0.5) {
    const double P = std::sqrt(1.0 + a) * (x + 1.0) / 2.0;
    const double B1 = 4.0 * a * a * (x + 1.0) / (s + t) +
                      2.0 * (1.0 - a) * P + (1.0 - 3.0 * a) * t +
                      (1.0 + a) * s;
    num = a * w * (w * w / 4.0) * B1 / ((P + s) * (P + t)) /
          (std::sqrt(1.0 + a) * (s + t)) / t;
    // Series for x^zeta - M(x) with the shared linear and quadratic terms
    // removed; the coefficient changes sign partway, so convergence needs
    // two consecutive negligible terms.
    double ck_prev = 2.0 * zeta * (2.0 * zeta - 1.0) / 2.0;
    double ck = ck_prev * (2.0 * zeta - 2.0) / 3.0;
    double wk = w * w * w;
    double gsum = 0.0;
    int small_run = 0;
    for (int k = 3; k <= 200; ++k) {
      const double term = -((1.0 + a) * ck + ck_prev) * wk;
      gsum += term;
      if (std::abs(term) < 1e-20 * std::abs(gsum)) {
        if (++small_run == 2) break;
      } else {
        small_run = 0;
      }
      const double next = ck * (2.0 * zeta - k) / (k + 1.0);
      ck_prev = ck;
      ck = next;
      wk *= w;
    }
    den = gsum / (t * (s + xz * t));
  } else {
    const double Mx = s / t;
    num = Mx - kappa * (x - 1.0) / (t * nu) - 1.0;
    den = Mx - xz;
  }
  return std::pow(num / den, 1.0 / zeta);
}

/// Reflected-wave transition h over the shock-overtakes-rarefaction
/// quadrant, stitched from its explicit and implicit branches.  nullopt
/// means the curve does not pass over this abscissa in the current regime.
inline std::optional<double> h_curve(double x, const GasConstants& gas,
                                     const SpecialPoints& pts) {
  if (!(x > 1.0) || !std::isfinite(x))
    throw std::domain_error("h_curve: x must exceed 1");
  if (gas.a >= 1.0 / 3.0 - detail::atlas_regime_band) return std::nullopt;
  auto H = [&](double y) { return H_reflect(x, y, gas); };
  const double noise = 512.0 * std::numeric_limits<double>::epsilon() *
                       std::abs(psi(Direction::Backward, x, gas)) *
                       (1.0 + aux_M(x, gas));

  switch (pts.regime) {
    case Regime::BelowFiveThirds: {
      if (x <= pts.x0) return h1_explicit(x, gas);
      if (x <= pts.x0 * (1.0 + 1e-11)) return pts.y0;
      const double lo = k_curve(x, gas) * (1.0 + 1e-12);
      return detail::root_below_one(H, lo, noise);
    }
    case Regime::AtFiveThirds:
      return detail::root_below_one(H, (1.0 / x) * (1.0 + 1e-12), noise);
    default: {
      if (!pts.xbar)  // regime boundary: fall back to the critical layout
        return detail::root_below_one(H, (1.0 / x) * (1.0 + 1e-12), noise);
      const double xbar = *pts.xbar;
      if (x < xbar * (1.0 - 1e-10)) return std::nullopt;
      if (x <= xbar * (1.0 + 1e-10)) return 1.0;
      return detail::root_below_one(H, (1.0 / x) * (1.0 + 1e-12), noise);
    }
  }
}

inline std::optional<double> h_curve(double x, const GasConstants& gas) {
  return h_curve(x, gas, special_points(gas));
}

/// Forward-wave transition j for overtaking shocks, in closed form; defined
/// for a > 1/4.  Crosses y = 1 at xbar when a < 1/3 and tends to ystar
/// otherwise.
inline double j_explicit(double x, const GasConstants& gas) {
  const double a = gas.a;
  if (a <= 0.25 + detail::atlas_regime_band)
    throw std::domain_error("j_explicit: undefined for a <= 1/4");
  if (!(x >= 1.0) || !std::isfinite(x))
    throw std::domain_error("j_explicit: x must be at least 1");
  const double om = 1.0 - a;
  const double rad = a * a * (1.0 + x) * (1.0 + x) + a * x * om * om;
  return (2.0 * a / (om * om * x)) * (a * (1.0 + x) + std::sqrt(rad));
}

/// Reflected-wave transition i for rarefaction-overtakes-shock pairs, on
/// (0, 1): constant y0 up to 1/y0, then the root of the reflection
/// functional.  Defined for a > 1/4.
inline double i_curve(double x, const GasConstants& gas,
                      const SpecialPoints& pts) {
  if (!pts.ybar)
    throw std::domain_error("i_curve: undefined for a <= 1/4");
  if (!(x > 0.0) || !(x < 1.0))
    throw std::domain_error("i_curve: x must lie in (0, 1)");
  if (x <= pts.x0 * (1.0 + 1e-11)) return pts.y0;
  auto H = [&](double y) { return H_reflect(x, y, gas); };
  const double lo = (1.0 / x) * (1.0 + 1e-12);
  const double hi = std::min(*pts.ybar / x, pts.y0) * (1.0 - 1e-14);
  return detail::root_on_interval(H, lo, hi);
}

inline double i_curve(double x, const GasConstants& gas) {
  return i_curve(x, gas, special_points(gas));
}

/// Vacuum boundary for overtaking pairs: largest rarefaction strength y that
/// still meets shock x without opening a vacuum.  V(1) = 0.
inline double V_vacuum_curve(double x, const GasConstants& gas) {
  if (!(x >= 1.0) || !std::isfinite(x))
    throw std::domain_error("V_vacuum_curve: x must be at least 1");
  const double t = 0.5 * (1.0 - v_fn(x, gas) / gas.nu);
  if (!(t > 0.0)) return 0.0;
  return std::pow(t, 1.0 / gas.zeta);
}

/// Vacuum boundary for head-on pairs: shock strength b below which forward
/// rarefaction f opens a vacuum.
inline double group1_vacuum_boundary(double f, const GasConstants& gas) {
  if (!(f > 1.0) || !std::isfinite(f))
    throw std::domain_error("group1_vacuum_boundary: f must exceed 1");
  const double t = 1.0 - std::pow(f, -gas.zeta);
  return std::pow(t, 1.0 / gas.zeta);
}

/// Vacuum boundary for rarefaction-contact pairs: f* such that f >= f*(c)
/// opens a vacuum; defined for c in (0, 1).
inline double iic_fstar(double c, const GasConstants& gas) {
  if (!(c > 0.0) || !(c < 1.0))
    throw std::domain_error("iic_fstar: c must lie in (0, 1)");
  return std::pow(2.0 / (1.0 - std::sqrt(c)), 1.0 / gas.zeta);
}

/// Auxiliary map whose minimum over (1, infinity) need not sit at either
/// end; used by the contact-transition curve.
inline double upsilon(double B, const GasConstants& gas) {
  if (!(B > 1.0) || !std::isfinite(B))
    throw std::domain_error("upsilon: B must exceed 1");
  const double num = psi(Direction::Forward, B, gas) +
                     psi(Direction::Backward, B, gas);
  const double den = gas.nu * (std::sqrt(aux_D(B, gas)) - 1.0);
  return std::pow(B, gas.zeta) + num / den;
}

/// Contact transition for shock-contact pairs: the f at which the outgoing
/// contact changes direction, for c > 1.
inline double iid_contact_transition(double c, const GasConstants& gas) {
  if (!(c > 1.0) || !std::isfinite(c))
    throw std::domain_error("iid_contact_transition: c must exceed 1");
  const double delta = aux_D_inverse(c, gas);
  return std::pow(upsilon(delta, gas), 1.0 / gas.zeta);
}

enum class AtlasPanel { GroupI, GroupII, GroupIII };

enum class CurveId {
  K_zero,
  H_zero,
  J_explicit,
  I_curve,
  V_vacuum,
  Ic_vacuum,
  IIc_fstar,
  IId_contact,
};

inline const char* curve_filename(CurveId id) {
  switch (id) {
    case CurveId::K_zero: return "k.csv";
    case CurveId::H_zero: return "h.csv";
    case CurveId::J_explicit: return "j.csv";
    case CurveId::I_curve: return "i.csv";
    case CurveId::V_vacuum: return "V.csv";
    case CurveId::Ic_vacuum: return "ic_vacuum.csv";
    case CurveId::IIc_fstar: return "fstar.csv";
    default: return "f_transition.csv";
  }
}

inline const char* curve_name(CurveId id) {
  switch (id) {
    case CurveId::K_zero: return "k";
    case CurveId::H_zero: return "h";
    case CurveId::J_explicit: return "j";
    case CurveId::I_curve: return "i";
    case CurveId::V_vacuum: return "V";
    case CurveId::Ic_vacuum: return "ic_vacuum";
    case CurveId::IIc_fstar: return "fstar";
    default: return "f_transition";
  }
}

struct CurvePoint {
  double x;
  double y;
  double residual;  ///< defect of the curve's defining relation at (x, y)
};

struct CurveSample {
  CurveId id;
  double gamma;
  std::vector<CurvePoint> points;
  std::vector<std::pair<std::string, double>> metadata;
};

struct GridSpec {
  int count = 200;
  std::optional<double> lo;
  std::optional<double> hi;
};

namespace detail {

inline std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(n));
  const double l0 = std::log(lo), l1 = std::log(hi);
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      xs.push_back(lo);
    } else if (i == n - 1) {
      xs.push_back(hi);
    } else {
      xs.push_back(std::exp(l0 + (l1 - l0) * i / (n - 1)));
    }
  }
  return xs;
}

/// Log grid in the offset x - 1; resolves structure crowding the left edge.
inline std::vector<double> shifted_log_grid(double lo, double hi, int n) {
  std::vector<double> xs = log_grid(lo - 1.0, hi - 1.0, n);
  for (double& x : xs) x += 1.0;
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

inline std::pair<double, double> resolve_range(const GridSpec& spec,
                                               double def_lo, double def_hi,
                                               double dom_lo, double dom_hi) {
  double lo = spec.lo.value_or(def_lo);
  double hi = spec.hi.value_or(def_hi);
  lo = std::max(lo, dom_lo);
  hi = std::min(hi, dom_hi);
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    return {def_lo, def_hi};
  return {lo, hi};
}

/// Splices exact junction rows into a sampled curve and enforces strictly
/// increasing abscissae.
inline void insert_junctions(
    std::vector<CurvePoint>& pts,
    const std::vector<CurvePoint>& junctions) {
  for (const CurvePoint& j : junctions) pts.push_back(j);
  std::sort(pts.begin(), pts.end(),
            [](const CurvePoint& a, const CurvePoint& b) { return a.x < b.x; });
  std::vector<CurvePoint> out;
  out.reserve(pts.size());
  for (const CurvePoint& p : pts) {
    if (!out.empty() && !(p.x > out.back().x)) continue;
    out.push_back(p);
  }
  pts = std::move(out);
}

inline double vacuum_residual_iiib(double x, double y,
                                   const GasConstants& gas) {
  if (y == 0.0) {
    return -gas.nu - psi(Direction::Backward, x, gas) +
           gas.nu * aux_M(x, gas);
  }
  return interaction_residual_at_zero({InteractionKind::IIIb, x, y}, gas);
}

inline double j_algebraic_residual(double x, double y,
                                   const GasConstants& gas) {
  const double a = gas.a, om = 1.0 - gas.a;
  return om * om * x * y * y / (4.0 * a * a) - y * (1.0 + x) - a;
}

}  // namespace detail

/// Samples every transition curve of one interaction group on log grids,
/// splicing regime junctions in analytically.
inline std::vector<CurveSample> sample_atlas(const GasConstants& gas,
                                             AtlasPanel panel,
                                             const GridSpec& spec = {}) {
  if (spec.count < 2)
    throw std::invalid_argument("sample_atlas: count must be at least 2");
  const int n = spec.count;
  std::vector<CurveSample> out;

  if (panel == AtlasPanel::GroupI) {
    auto [lo, hi] =
        detail::resolve_range(spec, 1.0 + 1e-3, 100.0, 1.0 + 1e-12, 1e295);
    CurveSample s{CurveId::Ic_vacuum, gas.gamma, {}, {}};
    for (double f : detail::shifted_log_grid(lo, hi, n)) {
      const double b = group1_vacuum_boundary(f, gas);
      const double res =
          std::pow(b, gas.zeta) + std::pow(f, -gas.zeta) - 1.0;
      s.points.push_back({f, b, res});
    }
    s.metadata = {{"zeta", gas.zeta}, {"b_limit", 1.0}};
    out.push_back(std::move(s));
    return out;
  }

  if (panel == AtlasPanel::GroupII) {
    {
      auto [lo, hi] = detail::resolve_range(spec, 0.01, 0.9, 1e-12, 1.0 - 1e-12);
      CurveSample s{CurveId::IIc_fstar, gas.gamma, {}, {}};
      for (double c : detail::log_grid(lo, hi, n)) {
        const double f = iic_fstar(c, gas);
        const double res =
            (1.0 - std::sqrt(c)) * std::pow(f, gas.zeta) - 2.0;
        s.points.push_back({c, f, res});
      }
      s.metadata = {{"f_limit_c_to_0", std::pow(2.0, 1.0 / gas.zeta)}};
      out.push_back(std::move(s));
    }
    {
      auto [lo, hi] =
          detail::resolve_range(spec, 1.05, 100.0, 1.0 + 1e-9, 1e290);
      CurveSample s{CurveId::IId_contact, gas.gamma, {}, {}};
      double min_f = std::numeric_limits<double>::infinity();
      double argmin_c = lo;
      for (double c : detail::shifted_log_grid(lo, hi, n)) {
        const double f = iid_contact_transition(c, gas);
        const InteractionOutcome oc =
            solve_interaction({InteractionKind::IId, f, c}, gas);
        const double res = oc.C - 1.0;
        s.points.push_back({c, f, res});
        if (f < min_f) {
          min_f = f;
          argmin_c = c;
        }
      }
      s.metadata = {{"min_f_sampled", min_f}, {"argmin_c_sampled", argmin_c}};
      out.push_back(std::move(s));
    }
    return out;
  }

  // Group III: curve set depends on the regime.
  const SpecialPoints pts = special_points(gas);
  const bool has_h = gas.a < 1.0 / 3.0 - detail::atlas_regime_band;
  const bool has_ji = static_cast<bool>(pts.ybar);

  {  // k
    auto [lo, hi] = detail::resolve_range(spec, 1e-2, 1e2, 1e-290, 1e290);
    CurveSample s{CurveId::K_zero, gas.gamma, {}, {}};
    for (double x : detail::log_grid(lo, hi, n)) {
      const double y = k_curve(x, gas);
      s.points.push_back({x, y, K_classifier(x, y, gas)});
    }
    std::vector<CurvePoint> junctions;
    if (1.0 > lo && 1.0 < hi)
      junctions.push_back({1.0, 1.0, K_classifier(1.0, 1.0, gas)});
    if (pts.x0 > lo && pts.x0 < hi && pts.regime != Regime::AtFiveThirds)
      junctions.push_back(
          {pts.x0, pts.y0, K_classifier(pts.x0, pts.y0, gas)});
    detail::insert_junctions(s.points, junctions);
    s.metadata = {{"yhat", pts.yhat}, {"y0", pts.y0}, {"x0", pts.x0}};
    out.push_back(std::move(s));
  }

  if (has_h) {  // h
    CurveSample s{CurveId::H_zero, gas.gamma, {}, {}};
    double def_lo = 1.0 + 1e-6, def_hi = 100.0;
    if (pts.xbar) {
      def_lo = *pts.xbar;
      def_hi = 100.0 * *pts.xbar;
    }
    auto [lo, hi] =
        detail::resolve_range(spec, def_lo, def_hi, 1.0 + 1e-9, 1e290);
    for (double x : detail::shifted_log_grid(lo, hi, n)) {
      const auto y = h_curve(x, gas, pts);
      if (!y) continue;
      s.points.push_back({x, *y, H_reflect(x, *y, gas)});
    }
    std::vector<CurvePoint> junctions;
    if (pts.regime == Regime::BelowFiveThirds && pts.x0 > lo && pts.x0 < hi)
      junctions.push_back(
          {pts.x0, pts.y0, H_reflect(pts.x0, pts.y0, gas)});
    if (pts.xbar && *pts.xbar >= lo && *pts.xbar < hi)
      junctions.push_back({*pts.xbar, 1.0, H_reflect(*pts.xbar, 1.0, gas)});
    detail::insert_junctions(s.points, junctions);
    s.metadata = {{"y0", pts.y0}, {"x0", pts.x0}};
    if (pts.h_asym) s.metadata.emplace_back("h_asymptote", *pts.h_asym);
    if (pts.xbar) s.metadata.emplace_back("xbar", *pts.xbar);
    if (pts.y1) s.metadata.emplace_back("y1", *pts.y1);
    out.push_back(std::move(s));
  }

  if (has_ji) {  // j
    CurveSample s{CurveId::J_explicit, gas.gamma, {}, {}};
    const double dom_hi = pts.xbar ? *pts.xbar : 1e290;
    const double def_hi = pts.xbar ? *pts.xbar : 1e3;
    auto [lo, hi] = detail::resolve_range(spec, 1.0, def_hi, 1.0, dom_hi);
    for (double x : detail::log_grid(lo, hi, n)) {
      const double y = j_explicit(x, gas);
      s.points.push_back({x, y, detail::j_algebraic_residual(x, y, gas)});
    }
    std::vector<CurvePoint> junctions;
    if (1.0 >= lo && 1.0 < hi && pts.ybar)
      junctions.push_back(
          {1.0, *pts.ybar, detail::j_algebraic_residual(1.0, *pts.ybar, gas)});
    if (pts.xbar && *pts.xbar > lo && *pts.xbar <= hi)
      junctions.push_back(
          {*pts.xbar, 1.0, detail::j_algebraic_residual(*pts.xbar, 1.0, gas)});
    detail::insert_junctions(s.points, junctions);
    s.metadata = {{"ybar", *pts.ybar}, {"ystar", *pts.ystar}};
    if (pts.xbar) s.metadata.emplace_back("xbar", *pts.xbar);
    out.push_back(std::move(s));
  }

  if (has_ji) {  // i
    CurveSample s{CurveId::I_curve, gas.gamma, {}, {}};
    auto [lo, hi] =
        detail::resolve_range(spec, 0.01, 1.0 - 1e-6, 1e-290, 1.0 - 1e-15);
    for (double x : detail::log_grid(lo, hi, n)) {
      const double y = i_curve(x, gas, pts);
      // On the constant branch the defining relation is alpha(y) = 0, not
      // the reflection equation.
      const double res =
          x <= pts.x0 * (1.0 + 1e-11) ? alpha(y, gas) : H_reflect(x, y, gas);
      s.points.push_back({x, y, res});
    }
    std::vector<CurvePoint> junctions;
    if (pts.x0 > lo && pts.x0 < hi)
      junctions.push_back({pts.x0, pts.y0, H_reflect(pts.x0, pts.y0, gas)});
    detail::insert_junctions(s.points, junctions);
    s.metadata = {{"y0", pts.y0}, {"x0", pts.x0}, {"ybar", *pts.ybar}};
    out.push_back(std::move(s));
  }

  {  // V
    CurveSample s{CurveId::V_vacuum, gas.gamma, {}, {}};
    auto [lo, hi] = detail::resolve_range(spec, 1.0, 100.0, 1.0, 1e290);
    for (double x : detail::log_grid(lo, hi, n)) {
      const double y = V_vacuum_curve(x, gas);
      s.points.push_back({x, y, detail::vacuum_residual_iiib(x, y, gas)});
    }
    std::vector<CurvePoint> junctions;
    if (lo <= 1.0)
      junctions.push_back({1.0, 0.0, detail::vacuum_residual_iiib(1.0, 0.0, gas)});
    detail::insert_junctions(s.points, junctions);
    s.metadata = {{"v_limit", gas.kappa / std::sqrt(gas.a)}};
    out.push_back(std::move(s));
  }

  return out;
}

}  // namespace wavelab
