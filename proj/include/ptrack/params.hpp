#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptrack/eos.hpp"

namespace ptrack {
struct Profile;
}

namespace ptrack::params {

/// Log(2 + sqrt 3) = acosh 2, the smallest wave cap for which w(m) < 2.
double m_bar();

/// Limit of the admissibility threshold as the interface strength tends to 2.
double small_data_bound();

/// Scheme constants and the inequalities they were certified against.
struct ParameterSet {
  double delta2 = 0.0;  ///< |delta2| the constants were chosen for
  double m = 0.0;
  double xi = 1.0;
  double K = 1.0;
  double K_np = 0.0;
  double C_o = 0.0;
  double mu = 0.0;

  struct Certificates {
    bool xi_window = false;    ///< 1 + delta2 < xi <= 1/c(m)
    bool K_window = false;     ///< max{(xi-1)/2, 1} < K < (xi-1)/delta2
    bool K_np_window = false;  ///< 0 < K_np < K / C_o
    bool C_o_formula = false;  ///< C_o = 2 a_max sinh(m) / m
    bool mu_below_one = false; ///< 0 < mu < 1
    bool all() const noexcept {
      return xi_window && K_window && K_np_window && C_o_formula && mu_below_one;
    }
  } feasible;
};

/// mu = max{1/(2K-1), xi/(2K+1), (K delta2 + 1)/xi, K_np C_o / K}.
double decay_factor(double xi, double K, double K_np, double C_o, double delta2);

/// Re-evaluates every inequality of a parameter set.
ParameterSet::Certificates certify(const ParameterSet& ps, const PhasePair& phases);

/// w(m) = 2 / (cosh m - 1) = 1/c(m) - 1.
double w_fn(double m);
/// z(m) = 2 m c(m)^2.
double z_fn(double m);
/// Inverses by bisection (w decreasing on (0, inf), z increasing on [0, inf)).
double w_inverse(double r);
double z_inverse(double y);

/// Admissible TV budget K(r) in closed form, r in (0, 2).
double k_threshold(double r);

struct AdmissibilityReport {
  double tv_log_p = 0.0;
  double tv_u = 0.0;
  double a_min = 0.0;
  double lhs = 0.0;        ///< TV(log p) + TV(u)/min a
  double abs_delta2 = 0.0;
  double threshold = 0.0;  ///< K(|delta2|), +inf when delta2 = 0
  double margin = 0.0;     ///< threshold - lhs
  bool admissible = false;
  double small_data_bound = 0.0;
  bool small_data_ok = false;
  std::optional<ParameterSet> parameters;
};

/// Total variations of log p and u of a piecewise-constant profile, with the
/// pressure evaluated in the phase on each side of x = 0.
struct ProfileVariation {
  double tv_log_p = 0.0;
  double tv_u = 0.0;
  double tv_v = 0.0;
};
ProfileVariation variation(const Profile& profile, const PhasePair& phases);

AdmissibilityReport check_initial_data(const Profile& profile, const PhasePair& phases);

/// Thrown when the feasible m-interval is empty.
class InfeasibleParameters : public std::runtime_error {
 public:
  InfeasibleParameters(const std::string& what, double m_lo, double m_hi)
      : std::runtime_error(what), m_lo_(m_lo), m_hi_(m_hi) {}
  double m_lo() const noexcept { return m_lo_; }
  double m_hi() const noexcept { return m_hi_; }

 private:
  double m_lo_;
  double m_hi_;
};

/// Picks (m, xi, K, K_np, C_o, mu) for the given phases and data budget
/// TV(log p) + TV(u)/min a. Throws InfeasibleParameters when the budget is
/// not below K(|delta2|).
ParameterSet choose_parameters(const PhasePair& phases, double tv_budget);

/// Scalar reflection coefficients of a 1-shock / 2-wave / 3-shock pattern
/// U0 | U1 | U2 | U3.
struct Reflection {
  double A = 0.0;
  double B = 0.0;
};
Reflection schochet_reflection(const State& U0, const State& U1, const State& U2,
                               const State& U3, const PhasePair& phases);

struct Finiteness {
  bool holds = false;
  double margin = 0.0;
};
/// Sign of c1 c3 e2^2 - (c1 + c3)|e2| + 2(1 - c1 c3) with c_i = c(eps_i).
Finiteness schochet_finiteness(double eps1, double eps2, double eps3);
/// Same quadratic with the damping coefficients given directly.
Finiteness finiteness_from_coefficients(double c1, double c3, double eps2);

}  // namespace ptrack::params
