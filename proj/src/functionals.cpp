#include "ptrack/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace ptrack::functionals {

Contribution contribution(const Front& f, const params::ParameterSet& ps) {
  Contribution c;
  if (f.is_composite()) return c;
  const double w = f.strength > 0.0 ? 1.0 : ps.xi;
  c.L = w * std::abs(f.strength);
  if (f.approaching()) c.V = c.L;
  return c;
}

FunctionalSnapshot snapshot(const FrontList& fronts, const params::ParameterSet& ps, double t) {
  FunctionalSnapshot s;
  s.t = t;
  for (const Front& f : fronts) {
    s.tv_vu += std::abs(f.right.v - f.left.v) + std::abs(f.right.u - f.left.u);
    if (f.is_composite()) {
      s.composite_abs = std::abs(f.strength);
      continue;
    }
    const Contribution c = contribution(f, ps);
    s.L += c.L;
    s.V += c.V;
    s.Lbar += std::abs(f.strength);
    s.max_strength = std::max(s.max_strength, std::abs(f.strength));
    s.max_order = std::max(s.max_order, f.order);
  }
  s.L += ps.K_np * s.composite_abs;
  s.Q = ps.delta2 * s.V;
  s.F = s.L + ps.K * s.Q;
  return s;
}

double half_tv_log_pressure(const FrontList& fronts, const PhasePair& phases) {
  double tv = 0.0;
  for (const Front& f : fronts) {
    double a_left = f.side == Side::Left ? phases.a_l : phases.a_r;
    double a_right = a_left;
    if (f.is_composite()) {
      a_left = phases.a_l;
      a_right = phases.a_r;
    }
    tv += std::abs(std::log(eos::pressure(f.right.v, a_right)) -
                   std::log(eos::pressure(f.left.v, a_left)));
  }
  return 0.5 * tv;
}

void OrderValues::resize(std::size_t n) {
  L.resize(n, 0.0);
  V.resize(n, 0.0);
  F.resize(n, 0.0);
}

double OrderValues::sum_F() const {
  double s = 0.0;
  for (double x : F) s += x;
  return s;
}

double OrderValues::tail(std::size_t k) const {
  double s = 0.0;
  for (std::size_t j = k; j < F.size(); ++j) s += F[j];
  return s;
}

std::string Classification::label() const {
  std::ostringstream os;
  switch (set) {
    case EventSet::None: return "cross";
    case EventSet::I: os << "I_" << h; if (l < h) os << " (T_" << h << ";" << l << ")"; break;
    case EventSet::J: os << "J_" << h << (simplified ? " simplified" : " accurate"); break;
  }
  return os.str();
}

double DeltaF::lower_sum(int h) const {
  double s = 0.0;
  for (int l = 1; l < h; ++l) s += at(static_cast<std::size_t>(l));
  return s;
}

DeltaF delta_F(const FunctionalSnapshot& before, const FunctionalSnapshot& after,
               const OrderValues& ord_before, const OrderValues& ord_after) {
  DeltaF d;
  d.total = after.F - before.F;
  const std::size_t n = std::max(ord_before.size(), ord_after.size());
  d.per_order.assign(n, 0.0);
  for (std::size_t k = 1; k < n; ++k) d.per_order[k] = ord_after.F_at(k) - ord_before.F_at(k);
  return d;
}

DeltaF local_delta(const std::vector<Front>& incoming, const std::vector<Front>& outgoing,
                   int np_order, double np_amount, const params::ParameterSet& ps) {
  DeltaF d;
  auto touch = [&](int k) {
    if (static_cast<std::size_t>(k) >= d.per_order.size()) {
      d.per_order.resize(static_cast<std::size_t>(k) + 1, 0.0);
    }
  };
  auto accumulate = [&](const std::vector<Front>& fs, double sign) {
    for (const Front& f : fs) {
      if (f.is_composite()) {
        d.total += sign * ps.K_np * std::abs(f.strength);
        continue;
      }
      const Contribution c = contribution(f, ps);
      const double F = c.L + ps.K * ps.delta2 * c.V;
      touch(f.order);
      d.per_order[static_cast<std::size_t>(f.order)] += sign * F;
      d.total += sign * F;
    }
  };
  accumulate(incoming, -1.0);
  accumulate(outgoing, 1.0);
  if (np_amount != 0.0) {
    touch(np_order);
    d.per_order[static_cast<std::size_t>(np_order)] += ps.K_np * np_amount;
  }
  return d;
}

void GenerationLedger::add_nonphysical(int k, double amount) {
  if (static_cast<std::size_t>(k) >= L0_.size()) L0_.resize(static_cast<std::size_t>(k) + 1, 0.0);
  L0_[static_cast<std::size_t>(k)] += std::abs(amount);
}

double GenerationLedger::L0_total() const {
  double s = 0.0;
  for (double x : L0_) s += x;
  return s;
}

OrderValues GenerationLedger::evaluate(const FrontList& fronts) const {
  OrderValues ov;
  ov.resize(L0_.size() > 2 ? L0_.size() : 2);
  for (const Front& f : fronts) {
    if (f.is_composite()) continue;
    const auto k = static_cast<std::size_t>(f.order);
    if (k >= ov.size()) ov.resize(k + 1);
    const Contribution c = contribution(f, ps_);
    ov.L[k] += c.L;
    ov.V[k] += c.V;
  }
  for (std::size_t k = 0; k < L0_.size(); ++k) ov.L[k] += ps_.K_np * L0_[k];
  for (std::size_t k = 0; k < ov.size(); ++k) ov.F[k] = ov.L[k] + ps_.K * ps_.delta2 * ov.V[k];
  return ov;
}

void GenerationLedger::start(const FrontList& fronts) { F1_0_ = evaluate(fronts).F_at(1); }

void GenerationLedger::record(const Classification& cls, const DeltaF& d) {
  switch (cls.set) {
    case EventSet::None: ++n_none_; return;
    case EventSet::I: ++n_I_; break;
    case EventSet::J: ++n_J_; break;
  }
  const auto k = static_cast<std::size_t>(cls.h) + 1;
  if (k >= alpha_.size()) alpha_.resize(k + 1, 0.0);
  alpha_[k] += pos(d.at(k));
}

std::size_t GenerationLedger::count(EventSet s) const noexcept {
  switch (s) {
    case EventSet::None: return n_none_;
    case EventSet::I: return n_I_;
    case EventSet::J: return n_J_;
  }
  return 0;
}

std::vector<Assertion> check_generation_laws(const DeltaF& d, const Classification& cls,
                                             double mu, double tol) {
  std::vector<Assertion> out;
  if (cls.set == EventSet::None) {
    double worst = 0.0;
    for (double x : d.per_order) worst = std::max(worst, std::abs(x));
    out.push_back({"crossing leaves F_k unchanged", worst <= tol, worst, 0.0});
    return out;
  }
  const auto h = static_cast<std::size_t>(cls.h);
  double high = 0.0;
  for (std::size_t k = h + 2; k < d.per_order.size(); ++k) high = std::max(high, std::abs(d.per_order[k]));
  out.push_back({"dF_k = 0 for k >= h+2", high <= tol, high, 0.0});
  out.push_back({"dF_h <= 0", d.at(h) <= tol, d.at(h), 0.0});
  out.push_back({"dF_{h+1} >= 0", d.at(h + 1) >= -tol, 0.0, d.at(h + 1)});
  const double lhs = pos(d.at(h + 1));
  const double rhs = mu * (neg(d.at(h)) - d.lower_sum(cls.h));
  out.push_back({"[dF_{h+1}]_+ <= mu([dF_h]_- - sum dF_l)", lhs <= rhs + tol, lhs, rhs});
  return out;
}

Assertion check_tail_decay(const OrderValues& ord, double F1_initial, double mu, double tol) {
  Assertion a{"F~_k <= mu^{k-1} F_1(0)", true, 0.0, 0.0};
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 2; k < ord.size(); ++k) {
    const double lhs = ord.tail(k);
    const double rhs = std::pow(mu, static_cast<double>(k - 1)) * F1_initial;
    if (lhs - rhs > worst) {
      worst = lhs - rhs;
      a.lhs = lhs;
      a.rhs = rhs;
    }
    if (lhs > rhs + tol) a.ok = false;
  }
  return a;
}

Assertion check_strengthened_decrease(const DeltaF& d, const Classification& cls, double mu,
                                      double tol) {
  Assertion a{"dF <= -(1-mu)[dF_h]_-", true, d.total, 0.0};
  if (cls.set == EventSet::None) {
    a.ok = d.total <= tol;
    return a;
  }
  a.rhs = -(1.0 - mu) * neg(d.at(static_cast<std::size_t>(cls.h)));
  a.ok = a.lhs <= a.rhs + tol;
  return a;
}

Assertion check_corrected_decrease(const DeltaF& d, const Classification& cls, double mu,
                                   double tol) {
  Assertion a{"dF <= -(1-mu)([dF_h]_- - sum dF_l)", true, d.total, 0.0};
  if (cls.set == EventSet::None) {
    a.ok = d.total <= tol;
    return a;
  }
  a.rhs = -(1.0 - mu) * (neg(d.at(static_cast<std::size_t>(cls.h))) - d.lower_sum(cls.h));
  a.ok = a.lhs <= a.rhs + tol;
  return a;
}

}  // namespace ptrack::functionals
