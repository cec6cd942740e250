#include "ptrack/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ptrack/error.hpp"
#include "ptrack/profile.hpp"
#include "ptrack/roots.hpp"

namespace ptrack::params {

double m_bar() { return std::log(2.0 + std::sqrt(3.0)); }

double small_data_bound() { return 2.0 / 9.0 * m_bar(); }

double decay_factor(double xi, double K, double K_np, double C_o, double delta2) {
  const double r = std::abs(delta2);
  return std::max({1.0 / (2.0 * K - 1.0), xi / (2.0 * K + 1.0), (K * r + 1.0) / xi,
                   K_np * C_o / K});
}

ParameterSet::Certificates certify(const ParameterSet& ps, const PhasePair& phases) {
  const double r = ps.delta2;
  const double cm = eos::c_damp(ps.m);
  ParameterSet::Certificates c;
  c.xi_window = ps.m > 0.0 && 1.0 + r < ps.xi && ps.xi <= 1.0 / cm;
  c.K_window = std::max((ps.xi - 1.0) / 2.0, 1.0) < ps.K &&
               (r == 0.0 || ps.K < (ps.xi - 1.0) / r);
  c.K_np_window = ps.K_np > 0.0 && ps.C_o > 0.0 && ps.K_np < ps.K / ps.C_o;
  const double C_o = 2.0 * phases.a_max() * std::sinh(ps.m) / ps.m;
  c.C_o_formula = std::abs(ps.C_o - C_o) <= 1e-12 * C_o;
  const double mu = decay_factor(ps.xi, ps.K, ps.K_np, ps.C_o, r);
  c.mu_below_one = ps.mu > 0.0 && ps.mu < 1.0 && std::abs(ps.mu - mu) <= 1e-15;
  return c;
}

double w_fn(double m) {
  if (!(m > 0.0)) throw DomainError("w(m) requires m > 0");
  // 2 / (cosh m - 1) = 1 / sinh^2(m/2)
  const double s = std::sinh(0.5 * m);
  return 1.0 / (s * s);
}

double z_fn(double m) {
  if (m < 0.0) throw DomainError("z(m) requires m >= 0");
  const double c = eos::c_damp(m);
  return 2.0 * m * c * c;
}

double w_inverse(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("w^-1 requires r > 0");
  double hi = 1.0;
  while (w_fn(hi) > r) hi *= 2.0;
  double lo = hi;
  while (w_fn(lo) < r) lo *= 0.5;
  return roots::bisect([r](double m) { return w_fn(m) - r; }, lo, hi);
}

double z_inverse(double y) {
  if (y < 0.0 || !std::isfinite(y)) throw DomainError("z^-1 requires y >= 0");
  if (y == 0.0) return 0.0;
  double hi = 1.0;
  while (z_fn(hi) < y) hi *= 2.0;
  return roots::bisect([y](double m) { return z_fn(m) - y; }, 0.0, hi);
}

double k_threshold(double r) {
  if (!(r > 0.0 && r < 2.0)) throw DomainError("K(r) is defined for r in (0,2)");
  const double two_over_r = 2.0 / r;
  return 2.0 / ((1.0 + r) * (1.0 + r)) *
         std::log(two_over_r + 1.0 + two_over_r * std::sqrt(1.0 + r));
}

ProfileVariation variation(const Profile& profile, const PhasePair& phases) {
  ProfileVariation tv;
  auto a_of_cell = [&](std::size_t k) {
    // Cell k is left of the interface iff its right break is <= 0.
    const bool left = k < profile.breaks.size() && profile.breaks[k] <= 0.0;
    return left ? phases.a_l : phases.a_r;
  };
  for (std::size_t k = 1; k < profile.cells(); ++k) {
    const double lp0 = 2.0 * std::log(a_of_cell(k - 1)) - std::log(profile.v[k - 1]);
    const double lp1 = 2.0 * std::log(a_of_cell(k)) - std::log(profile.v[k]);
    tv.tv_log_p += std::abs(lp1 - lp0);
    tv.tv_u += std::abs(profile.u[k] - profile.u[k - 1]);
    tv.tv_v += std::abs(profile.v[k] - profile.v[k - 1]);
  }
  return tv;
}

AdmissibilityReport check_initial_data(const Profile& profile, const PhasePair& phases) {
  const ProfileVariation tv = variation(profile, phases);
  AdmissibilityReport rep;
  rep.tv_log_p = tv.tv_log_p;
  rep.tv_u = tv.tv_u;
  rep.a_min = phases.a_min();
  rep.lhs = tv.tv_log_p + tv.tv_u / rep.a_min;
  rep.abs_delta2 = phases.abs_delta2();
  rep.threshold = rep.abs_delta2 == 0.0 ? std::numeric_limits<double>::infinity()
                                        : k_threshold(rep.abs_delta2);
  rep.margin = rep.threshold - rep.lhs;
  rep.admissible = rep.lhs < rep.threshold;
  rep.small_data_bound = small_data_bound();
  rep.small_data_ok = rep.lhs <= rep.small_data_bound;
  if (rep.admissible) rep.parameters = choose_parameters(phases, rep.lhs);
  return rep;
}

ParameterSet choose_parameters(const PhasePair& phases, double tv_budget) {
  if (!(tv_budget >= 0.0) || !std::isfinite(tv_budget)) {
    throw DomainError("choose_parameters: budget must be finite and >= 0");
  }
  const double r = phases.abs_delta2();
  ParameterSet ps;
  ps.delta2 = r;
  const double m_lo = z_inverse(tv_budget);
  if (r == 0.0) {
    // No interface: only the shock weight constrains m.
    ps.m = std::max(2.0 * m_lo, m_bar());
    ps.xi = 0.5 * (1.0 + 1.0 / eos::c_damp(ps.m));
    ps.K = std::max((ps.xi - 1.0) / 2.0, 1.0) + 1.0;
  } else {
    const double m_hi = w_inverse(r);
    if (!(tv_budget < k_threshold(r)) || !(m_lo < m_hi)) {
      std::ostringstream os;
      os << "no admissible wave cap: budget " << tv_budget << " needs m > " << m_lo
         << " but |delta2| = " << r << " needs m < " << m_hi;
      throw InfeasibleParameters(os.str(), m_lo, m_hi);
    }
    ps.m = m_lo > 0.0 ? std::sqrt(m_lo * m_hi) : 0.5 * m_hi;
    ps.xi = 0.5 * (1.0 + r + 1.0 / eos::c_damp(ps.m));
    ps.K = 0.5 * (std::max((ps.xi - 1.0) / 2.0, 1.0) + (ps.xi - 1.0) / r);
  }
  ps.C_o = 2.0 * phases.a_max() * std::sinh(ps.m) / ps.m;
  ps.K_np = ps.K / (2.0 * ps.C_o);
  ps.mu = decay_factor(ps.xi, ps.K, ps.K_np, ps.C_o, r);
  ps.feasible = certify(ps, phases);
  if (!ps.feasible.all()) {
    throw std::logic_error("choose_parameters: selected constants failed re-certification");
  }
  return ps;
}

Reflection schochet_reflection(const State& U0, const State& U1, const State& U2,
                               const State& U3, const PhasePair& phases) {
  for (const State* s : {&U0, &U1, &U2, &U3}) eos::require_in_omega(*s);
  const double a1 = phases.a_l;
  const double a2 = phases.a_r;
  Reflection out;
  {
    const double c1 = a1 / U1.v;
    const double s_minus = -a1 / std::sqrt(U1.v * U0.v);
    const double dv = U1.v - U0.v;
    const double du = U1.u - U0.u;
    const double den = c1 * dv + du;
    if (std::abs(dv) <= 1e-14 * U0.v || den == 0.0) {
      throw DomainError("schochet_reflection: degenerate 1-shock");
    }
    out.A = std::abs((c1 + s_minus) / (c1 - s_minus) * (-c1 * dv + du) / den);
  }
  {
    const double c2 = a2 / U2.v;
    const double s_plus = a2 / std::sqrt(U2.v * U3.v);
    const double dv = U3.v - U2.v;
    const double du = U3.u - U2.u;
    const double den = -c2 * dv + du;
    if (std::abs(dv) <= 1e-14 * U2.v || den == 0.0) {
      throw DomainError("schochet_reflection: degenerate 3-shock");
    }
    out.B = std::abs((c2 - s_plus) / (c2 + s_plus) * (c2 * dv + du) / den);
  }
  return out;
}

Finiteness finiteness_from_coefficients(double c1, double c3, double eps2) {
  const double x = std::abs(eps2);
  const double p = c1 * c3;
  Finiteness f;
  f.margin = p * x * x - (c1 + c3) * x + 2.0 * (1.0 - p);
  f.holds = f.margin > 0.0;
  return f;
}

Finiteness schochet_finiteness(double eps1, double eps2, double eps3) {
  return finiteness_from_coefficients(eos::c_damp(eps1), eos::c_damp(eps3), eps2);
}

}  // namespace ptrack::params
