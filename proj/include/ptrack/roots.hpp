#pragma once

#include <cmath>
#include <string>

#include "ptrack/error.hpp"

namespace ptrack::roots {

/// Bisection on [lo, hi] where f(lo) and f(hi) have opposite signs (or one
/// vanishes). Runs until the bracket stops shrinking in floating point or
/// its width falls below `xtol`.
template <typename F>
double bisect(F&& f, double lo, double hi, double xtol = 0.0,
              int max_iter = 400) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw ConvergenceError("bisect: endpoints do not bracket a root", lo, hi);
  }
  for (int it = 0; it < max_iter; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi || hi - lo <= xtol) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  // Return whichever endpoint has the smaller residual.
  return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

}  // namespace ptrack::roots
