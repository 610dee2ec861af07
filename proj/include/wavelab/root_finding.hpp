// Copyright (c) 2026 The wavelab authors
// SPDX-License-Identifier: MIT
#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace wavelab {

struct RootResult {
  double x;
  double fx;
  int iterations;
};

/// Root of a continuous f on [lo, hi] with f(lo) and f(hi) of opposite sign.
/// Illinois-damped regula falsi with a forced bisection every few steps, so
/// convergence is guaranteed and usually superlinear.  rel_tol bounds the
/// final bracket width relative to the root location.
template <class F>
RootResult find_root_bracketed(F&& f, double lo, double hi, double f_lo,
                               double f_hi, double rel_tol = 1e-14,
                               int max_iter = 400) {
  if (f_lo == 0.0) return {lo, 0.0, 0};
  if (f_hi == 0.0) return {hi, 0.0, 0};
  if (std::signbit(f_lo) == std::signbit(f_hi))
    throw std::runtime_error("find_root_bracketed: endpoints do not bracket");

  double x0 = lo, f0 = f_lo, x1 = hi, f1 = f_hi;
  int side = 0;
  int it = 0;
  for (; it < max_iter; ++it) {
    double scale = std::max({std::abs(x0), std::abs(x1),
                             std::numeric_limits<double>::min()});
    if (x1 - x0 <= rel_tol * scale) break;

    double xm;
    if (it % 4 == 3) {
      xm = 0.5 * (x0 + x1);
    } else {
      xm = (f1 * x0 - f0 * x1) / (f1 - f0);
      if (!std::isfinite(xm) || !(xm > x0 && xm < x1)) xm = 0.5 * (x0 + x1);
    }
    if (xm <= x0 || xm >= x1) break;  // bracket exhausted at this precision

    double fm = f(xm);
    if (fm == 0.0) return {xm, 0.0, it + 1};
    if (std::signbit(fm) == std::signbit(f0)) {
      x0 = xm;
      f0 = fm;
      if (side == -1) f1 *= 0.5;
      side = -1;
    } else {
      x1 = xm;
      f1 = fm;
      if (side == +1) f0 *= 0.5;
      side = +1;
    }
  }
  if (it >= max_iter)
    throw std::runtime_error("find_root_bracketed: iteration limit reached");
  double x = std::abs(f0) <= std::abs(f1) ? x0 : x1;
  double fx = std::abs(f0) <= std::abs(f1) ? f0 : f1;
  return {x, fx, it};
}

/// Marches a window [lo, hi] geometrically until an increasing function
/// changes sign, then returns the bracket.  The window keeps a bounded
/// ratio, so the subsequent root solve starts tight.
template <class F>
RootResult solve_increasing(F&& f, double guess, double rel_tol = 1e-14,
                            double lo_floor = 1e-280, double hi_ceil = 1e280) {
  if (!(guess > 0.0)) guess = 1.0;
  double lo = std::max(guess * 0.5, lo_floor);
  double hi = std::min(guess * 2.0, hi_ceil);
  double f_lo = f(lo);
  double f_hi = f(hi);

  int steps = 0;
  const int max_steps = 4000;
  while (f_lo > 0.0 && steps++ < max_steps) {  // root below the window
    hi = lo;
    f_hi = f_lo;
    lo = std::max(lo * 0.25, lo_floor);
    if (lo == hi)
      throw std::runtime_error("solve_increasing: no sign change above floor");
    f_lo = f(lo);
  }
  while (f_hi < 0.0 && steps++ < max_steps) {  // root above the window
    lo = hi;
    f_lo = f_hi;
    hi = std::min(hi * 4.0, hi_ceil);
    if (hi == lo)
      throw std::runtime_error("solve_increasing: no sign change below ceiling");
    f_hi = f(hi);
  }
  if (steps >= max_steps)
    throw std::runtime_error("solve_increasing: bracketing failed");
  return find_root_bracketed(f, lo, hi, f_lo, f_hi, rel_tol);
}

}  // namespace wavelab
