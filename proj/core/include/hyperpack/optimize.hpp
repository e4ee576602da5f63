#pragma once

#include <algorithm>
#include <cmath>

namespace hyperpack {

struct ScalarMaximum {
  double x = 0;
  double value = 0;
};

/// Golden-section search for the maximum of a unimodal f on [lo, hi];
/// stops once the bracket is narrower than tol.
template <class F>
ScalarMaximum golden_section_maximize(F&& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;  // (√5 - 1) / 2
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 400 && (b - a) > tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

/// Maximum of f on the closed interval [lo, hi]: a uniform pre-grid picks
/// the bracket, golden-section refines it, and the interval endpoints are
/// compared last. Handles endpoint maxima of convex pieces, which plain
/// golden-section can miss. Ties go to the smaller x.
template <class F>
ScalarMaximum bracketed_maximize(F&& f, double lo, double hi, double tol, int grid = 64) {
  if (!(hi > lo)) return {lo, f(lo)};
  ScalarMaximum best{lo, f(lo)};
  auto consider = [&best](double x, double v) {
    if (v > best.value || (v == best.value && x < best.x)) best = {x, v};
  };
  const double step = (hi - lo) / grid;
  int best_i = 0;
  double best_grid = best.value;
  for (int i = 1; i <= grid; ++i) {
    const double x = i == grid ? hi : lo + step * i;
    const double v = f(x);
    consider(x, v);
    if (v > best_grid) {
      best_grid = v;
      best_i = i;
    }
  }
  const double a = std::max(lo, lo + step * (best_i - 1));
  const double b = std::min(hi, lo + step * (best_i + 1));
  const ScalarMaximum refined = golden_section_maximize(f, a, b, tol);
  consider(refined.x, refined.value);
  return best;
}

}  // namespace hyperpack
