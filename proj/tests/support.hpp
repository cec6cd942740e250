#pragma once

// Hand-rolled generators and independent reference computations shared by
// the test executables.

#include <cmath>
#include <cstdint>
#include <algorithm>
#include <random>

#include "ptrack/eos.hpp"

namespace testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  /// Log-uniform on [lo, hi], lo > 0.
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }
  std::uint64_t seed() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

/// Velocity behind a 1-wave from (v, u) to pressure ps, in pressure
/// variables: Hugoniot branch for compression, integral curve otherwise.
inline double u_after_one(double v, double u, double a, double ps) {
  const double p = a * a / v;
  const double vs = a * a / ps;
  if (ps > p) return u - std::sqrt((ps - p) * (v - vs));
  return u - a * std::log(ps / p);
}

/// Velocity ahead of a 3-wave ending at (v, u), given the pressure ps
/// behind it.
inline double u_before_three(double v, double u, double a, double ps) {
  const double p = a * a / v;
  const double vs = a * a / ps;
  if (ps > p) return u + std::sqrt((ps - p) * (v - vs));
  return u + a * std::log(ps / p);
}

struct PressureSolution {
  double p_star;
  double u_star;
  double eps1;
  double eps3;
};

/// Riemann problem solved by bisection on log p*, independent of the
/// library's strength formulation.
inline PressureSolution riemann_by_pressure(double vl, double ul, double vr, double ur, double al,
                                            double ar) {
  auto f = [&](double lp) {
    const double ps = std::exp(lp);
    return u_after_one(vl, ul, al, ps) - u_before_three(vr, ur, ar, ps);
  };
  double lo = -60.0, hi = 60.0;
  for (int k = 0; k < 300; ++k) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    // f decreases in p*.
    if (f(mid) > 0.0) lo = mid; else hi = mid;
  }
  const double ps = std::exp(0.5 * (lo + hi));
  const double pl = al * al / vl;
  const double pr = ar * ar / vr;
  return {ps, u_after_one(vl, ul, al, ps), 0.5 * std::log(pl / ps), 0.5 * std::log(pr / ps)};
}

/// Rankine-Hugoniot defect of a jump with speed s: max of |s[v] + [u]| and
/// |s[u] - [p]|, each relative to the size of the terms it balances
/// (|s| v + |u| and |s u| + p over both sides).
inline double rh_defect(double vl, double ul, double vr, double ur, double a, double s) {
  const double pl = a * a / vl, pr = a * a / vr;
  const double dv = vr - vl, du = ur - ul, dp = pr - pl;
  const double m1 = std::abs(s * dv + du) /
                    (std::abs(s) * std::max(vl, vr) + std::max(std::abs(ul), std::abs(ur)) + 1e-300);
  const double m2 = std::abs(s * du - dp) /
                    (std::abs(s) * std::max(std::abs(ul), std::abs(ur)) + std::max(pl, pr) + 1e-300);
  return std::max(m1, m2);
}

}  // namespace testing
