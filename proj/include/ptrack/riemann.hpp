#pragma once

#include <array>

#include "ptrack/eos.hpp"

namespace ptrack::riemann {

/// Outgoing pattern of a Riemann problem: a 1-wave, the 2-wave (or composite)
/// and a 3-wave, with the two intermediate states.
struct RiemannFan {
  double eps1 = 0.0;
  double eps2 = 0.0;  ///< interface strength (solve_lax) or composite d20 (pseudo solvers)
  double eps3 = 0.0;
  State mid_left;   ///< between the 1-wave and the 2-wave
  State mid_right;  ///< between the 2-wave and the 3-wave
  /// Defects of the two scalar equations: pressure-log balance and velocity balance.
  std::array<double, 2> residuals{0.0, 0.0};
  int iterations = 0;

  double max_residual() const noexcept;
};

struct SolverOptions {
  double rel_tol = 1e-13;
  int max_iter = 200;
};

/// Lax solution of the Riemann problem (U_l, U_r) with sound coefficients a_l
/// on the left and a_r on the right. Reduces the two-equation system to one
/// strictly increasing scalar equation in eps1 and solves it by Newton's method
/// safeguarded by bisection.
RiemannFan solve_lax(const State& U_l, const State& U_r, double a_l, double a_r,
                     const SolverOptions& opts = {});

/// Interaction with the composite front, resolved with the three-wave
/// solver: shift the left state by d20 in velocity and solve as with a bare
/// 2-wave. The composite strength is transmitted unchanged.
RiemannFan solve_pseudo_accurate(const State& U_l, const State& U_r, double d20,
                                 const PhasePair& phases,
                                 const SolverOptions& opts = {});

/// New composite strength when an i-wave of strength `delta` is transmitted
/// through the composite front unchanged.
double solve_pseudo_simplified(double d20, Family family, double delta,
                               const PhasePair& phases);

}  // namespace ptrack::riemann
