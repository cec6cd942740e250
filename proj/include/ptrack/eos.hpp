#pragma once

// Thermodynamics of the two-phase p-system with p = a(lambda)^2 / v: pressure,
// characteristic and shock speeds, and the 1-/3-wave curves in strength
// coordinates (positive strength = rarefaction, negative = shock).

namespace ptrack {

/// A point (v, u, lambda) of the phase space: v > 0, lambda in [0, 1].
struct State {
  double v = 1.0;
  double u = 0.0;
  double lam = 0.0;

  friend bool operator==(const State&, const State&) = default;
};

/// Wave family. The composite (2,0) front carries family 2.
enum class Family : int { One = 1, Composite = 2, Three = 3 };

constexpr bool is_physical(Family f) noexcept { return f != Family::Composite; }

/// Fixed phase data of the single-interface problem.
struct PhasePair {
  double lam_l = 0.0;
  double lam_r = 1.0;
  double a_l = 1.0;
  double a_r = 1.0;
  double delta2 = 0.0;  ///< 2 (a_r - a_l) / (a_r + a_l)

  /// Validates a_l, a_r > 0 and lambda in [0,1]; computes delta2.
  static PhasePair make(double lam_l, double lam_r, double a_l, double a_r);

  double a_min() const noexcept { return a_l < a_r ? a_l : a_r; }
  double a_max() const noexcept { return a_l < a_r ? a_r : a_l; }
  double abs_delta2() const noexcept { return delta2 < 0 ? -delta2 : delta2; }
};

namespace eos {

/// Jumps with |strength| below this are null waves.
inline constexpr double kNullStrength = 1e-14;

/// Throws DomainError unless v > 0 and lambda in [0,1].
void require_in_omega(const State& s);

double pressure(double v, double a);

/// a / v. The 1-eigenvalue is its negation, the 3-eigenvalue the value itself.
double char_speed(double v, double a);

/// Signed speed of the 1- or 3-wave (shock or rarefaction front) determined by
/// its side volumes: -a/sqrt(v_l v_r) for family 1, +a/sqrt(v_l v_r) for 3.
double shock_speed(Family family, double v_left, double v_right, double a);

/// h(eps) = eps for eps >= 0, sinh(eps) for eps < 0.
double h(double eps) noexcept;

/// Derivative of h; continuous with h'(0) = 1.
double h_prime(double eps) noexcept;

/// Damping coefficient c(z) = (cosh z - 1)/(cosh z + 1), evaluated as tanh^2(z/2).
double c_damp(double z);

/// Strength of the i-wave joining v_from (left) to v_to (right).
double strength_of_jump(Family family, double v_from, double v_to);

/// State reached from U along the i-wave curve at strength eps.
State apply_wave(const State& U, Family family, double eps, double a);

/// State reached from U (left phase) across the composite (2,0)-wave of
/// velocity strength d20.
State apply_composite(const State& U, const PhasePair& phases, double d20);

/// x -> -x reflection: u -> -u, families 1 <-> 3, left and right phases swap.
State mirror(const State& s) noexcept;
PhasePair mirror(const PhasePair& p);
Family mirror(Family f) noexcept;

}  // namespace eos
}  // namespace ptrack
