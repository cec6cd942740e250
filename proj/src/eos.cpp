#include "ptrack/eos.hpp"

#include <cmath>
#include <sstream>

#include "ptrack/error.hpp"

namespace ptrack {

PhasePair PhasePair::make(double lam_l, double lam_r, double a_l, double a_r) {
  if (!(a_l > 0.0) || !(a_r > 0.0) || !std::isfinite(a_l) || !std::isfinite(a_r)) {
    throw DomainError("phase sound coefficients must be finite and positive");
  }
  if (!(lam_l >= 0.0 && lam_l <= 1.0) || !(lam_r >= 0.0 && lam_r <= 1.0)) {
    throw DomainError("phase fractions must lie in [0,1]");
  }
  PhasePair p;
  p.lam_l = lam_l;
  p.lam_r = lam_r;
  p.a_l = a_l;
  p.a_r = a_r;
  p.delta2 = 2.0 * (a_r - a_l) / (a_r + a_l);
  return p;
}

namespace eos {
namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream os;
    os << what << " must be finite and positive (got " << x << ")";
    throw DomainError(os.str());
  }
}

void require_physical(Family f) {
  if (!is_physical(f)) throw DomainError("expected family 1 or 3");
}

}  // namespace

void require_in_omega(const State& s) {
  require_positive(s.v, "specific volume");
  if (!std::isfinite(s.u)) throw DomainError("velocity must be finite");
  if (!(s.lam >= 0.0 && s.lam <= 1.0)) throw DomainError("lambda must lie in [0,1]");
}

double pressure(double v, double a) {
  require_positive(v, "specific volume");
  require_positive(a, "sound coefficient");
  return a * a / v;
}

double char_speed(double v, double a) {
  require_positive(v, "specific volume");
  require_positive(a, "sound coefficient");
  return a / v;
}

double shock_speed(Family family, double v_left, double v_right, double a) {
  require_physical(family);
  require_positive(v_left, "specific volume");
  require_positive(v_right, "specific volume");
  require_positive(a, "sound coefficient");
  const double s = a / std::sqrt(v_left * v_right);
  return family == Family::One ? -s : s;
}

double h(double eps) noexcept { return eps >= 0.0 ? eps : std::sinh(eps); }

double h_prime(double eps) noexcept { return eps >= 0.0 ? 1.0 : std::cosh(eps); }

double c_damp(double z) {
  if (std::isnan(z)) throw DomainError("c_damp: NaN argument");
  const double t = std::tanh(0.5 * z);
  return t * t;
}

double strength_of_jump(Family family, double v_from, double v_to) {
  require_physical(family);
  require_positive(v_from, "specific volume");
  require_positive(v_to, "specific volume");
  const double half_log = 0.5 * std::log(v_to / v_from);
  return family == Family::One ? half_log : -half_log;
}

State apply_wave(const State& U, Family family, double eps, double a) {
  require_physical(family);
  require_in_omega(U);
  require_positive(a, "sound coefficient");
  State out = U;
  out.v = U.v * std::exp(family == Family::One ? 2.0 * eps : -2.0 * eps);
  out.u = U.u + 2.0 * a * h(eps);
  require_in_omega(out);
  return out;
}

State apply_composite(const State& U, const PhasePair& phases, double d20) {
  require_in_omega(U);
  if (U.lam != phases.lam_l) {
    throw PhaseSideError("composite wave must start from the left phase");
  }
  const double ratio = phases.a_r / phases.a_l;
  return State{U.v * ratio * ratio, U.u + d20, phases.lam_r};
}

State mirror(const State& s) noexcept { return State{s.v, -s.u, s.lam}; }

PhasePair mirror(const PhasePair& p) {
  return PhasePair::make(p.lam_r, p.lam_l, p.a_r, p.a_l);
}

Family mirror(Family f) noexcept {
  switch (f) {
    case Family::One: return Family::Three;
    case Family::Three: return Family::One;
    default: return f;
  }
}

}  // namespace eos
}  // namespace ptrack
