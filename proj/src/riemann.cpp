#include "ptrack/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ptrack/error.hpp"

namespace ptrack::riemann {

double RiemannFan::max_residual() const noexcept {
  return std::max(std::abs(residuals[0]), std::abs(residuals[1]));
}

namespace {

// g(e1) = 2 (a_l h(e1) + a_r h(e1 + shift)) - du, strictly increasing in e1.
struct VelocityBalance {
  double a_l;
  double a_r;
  double shift;
  double du;

  double operator()(double e1) const {
    return 2.0 * (a_l * eos::h(e1) + a_r * eos::h(e1 + shift)) - du;
  }
  double derivative(double e1) const {
    return 2.0 * (a_l * eos::h_prime(e1) + a_r * eos::h_prime(e1 + shift));
  }
};

// Among the few floating-point neighbours of x, pick the one with the
// smallest |g|.
double polish(const VelocityBalance& g, double x) {
  double best = x;
  double best_r = std::abs(g(x));
  double lo = x;
  double hi = x;
  for (int k = 0; k < 4; ++k) {
    lo = std::nextafter(lo, -std::numeric_limits<double>::infinity());
    hi = std::nextafter(hi, std::numeric_limits<double>::infinity());
    for (double c : {lo, hi}) {
      const double r = std::abs(g(c));
      if (r < best_r) {
        best_r = r;
        best = c;
      }
    }
  }
  return best;
}

}  // namespace

RiemannFan solve_lax(const State& U_l, const State& U_r, double a_l, double a_r,
                     const SolverOptions& opts) {
  eos::require_in_omega(U_l);
  eos::require_in_omega(U_r);
  const double p_l = eos::pressure(U_l.v, a_l);
  const double p_r = eos::pressure(U_r.v, a_r);
  const double shift = 0.5 * std::log(p_r / p_l);
  const VelocityBalance g{a_l, a_r, shift, U_r.u - U_l.u};

  // Grow a symmetric bracket until g changes sign.
  double lo = -1.0;
  double hi = 1.0;
  int grow = 0;
  while (g(lo) > 0.0 || g(hi) < 0.0) {
    lo *= 2.0;
    hi *= 2.0;
    if (++grow > 60) {
      throw ConvergenceError("solve_lax: failed to bracket eps1", lo, hi);
    }
  }

  // Safeguarded Newton: keep [lo, hi] bracketing, fall back to bisection
  // whenever the Newton step leaves the bracket.
  double x = std::clamp(0.0, lo, hi);
  int it = 0;
  bool converged = false;
  for (; it < opts.max_iter; ++it) {
    const double gx = g(x);
    if (gx == 0.0) {
      converged = true;
      break;
    }
    if (gx < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double d = g.derivative(x);
    double next = x - gx / d;
    if (!(next > lo && next < hi)) next = lo + 0.5 * (hi - lo);
    const double step = std::abs(next - x);
    x = next;
    if (step <= opts.rel_tol * std::max(1.0, std::abs(x)) || hi - lo <= opts.rel_tol * std::max(1.0, std::abs(x))) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    std::ostringstream os;
    os << "solve_lax: no convergence after " << opts.max_iter << " iterations";
    throw ConvergenceError(os.str(), lo, hi);
  }
  // The bracket test may stop up to rel_tol away from the root; a few plain
  // Newton steps recover full precision.
  for (int k = 0; k < 3; ++k) {
    const double gx = g(x);
    if (gx == 0.0) break;
    const double next = x - gx / g.derivative(x);
    if (!(std::abs(g(next)) < std::abs(gx))) break;
    x = next;
  }
  x = polish(g, x);

  RiemannFan fan;
  fan.eps1 = x;
  fan.eps3 = x + shift;
  fan.eps2 = 2.0 * (a_r - a_l) / (a_r + a_l);
  fan.iterations = it + 1;
  fan.residuals[0] = (fan.eps3 - fan.eps1) - shift;
  fan.residuals[1] = g(fan.eps1);

  fan.mid_left = U_l;
  fan.mid_left.v = U_l.v * std::exp(2.0 * fan.eps1);
  fan.mid_left.u = U_l.u + 2.0 * a_l * eos::h(fan.eps1);
  fan.mid_right = U_r;
  fan.mid_right.v = U_r.v * std::exp(2.0 * fan.eps3);
  fan.mid_right.u = U_r.u - 2.0 * a_r * eos::h(fan.eps3);
  return fan;
}

RiemannFan solve_pseudo_accurate(const State& U_l, const State& U_r, double d20,
                                 const PhasePair& phases,
                                 const SolverOptions& opts) {
  if (U_l.lam != phases.lam_l || U_r.lam != phases.lam_r) {
    throw PhaseSideError("pseudo accurate solver: states are not on their phases");
  }
  State shifted = U_l;
  shifted.u += d20;
  RiemannFan fan = solve_lax(shifted, U_r, phases.a_l, phases.a_r, opts);
  fan.mid_left.u -= d20;
  fan.eps2 = d20;
  fan.residuals[1] = 2.0 * (phases.a_l * eos::h(fan.eps1) + phases.a_r * eos::h(fan.eps3)) -
                     (U_r.u - U_l.u - d20);
  return fan;
}

double solve_pseudo_simplified(double d20, Family family, double delta,
                               const PhasePair& phases) {
  const double jump = 2.0 * (phases.a_r - phases.a_l) * eos::h(delta);
  switch (family) {
    case Family::One: return d20 + jump;
    case Family::Three: return d20 - jump;
    default: throw DomainError("pseudo simplified solver: family must be 1 or 3");
  }
}

}  // namespace ptrack::riemann
