#pragma once

#include <string>
#include <vector>

#include "ptrack/front.hpp"
#include "ptrack/params.hpp"

namespace ptrack::functionals {

/// Values of the weighted functionals for one front configuration.
struct FunctionalSnapshot {
  double t = 0.0;
  double L = 0.0;     ///< rarefactions + xi * shocks + K_np |gamma_{2,0}|
  double V = 0.0;     ///< same weights, approaching waves only
  double Q = 0.0;     ///< |delta2| V
  double F = 0.0;     ///< L + K Q
  double Lbar = 0.0;  ///< sum of |strengths| of 1-/3-fronts
  double composite_abs = 0.0;
  double tv_vu = 0.0; ///< TV(v) + TV(u) of the profile
  double max_strength = 0.0;
  int max_order = 0;
  double tail2 = 0.0; ///< sum of F_k over k >= 2 (filled by the tracker)
};

/// Contribution of one physical front: weight 1 for rarefactions, xi for
/// shocks; counted in V when the front approaches x = 0.
struct Contribution {
  double L = 0.0;
  double V = 0.0;
};
Contribution contribution(const Front& f, const params::ParameterSet& ps);

FunctionalSnapshot snapshot(const FrontList& fronts, const params::ParameterSet& ps,
                            double t = 0.0);

/// Half the total variation of log p, computed from the side states.
double half_tv_log_pressure(const FrontList& fronts, const PhasePair& phases);

/// Per-order values. Index k holds order k; index 0 is unused.
struct OrderValues {
  std::vector<double> L;  ///< includes K_np * L0_k
  std::vector<double> V;
  std::vector<double> F;

  void resize(std::size_t n);
  std::size_t size() const noexcept { return F.size(); }
  double F_at(std::size_t k) const noexcept { return k < F.size() ? F[k] : 0.0; }
  double sum_F() const;
  /// F~_k = sum_{j >= k} F_j.
  double tail(std::size_t k) const;
};

enum class EventSet { None, I, J };

/// I_h: two waves of one family with max order h (l is the smaller order).
/// J_h: a wave of order h meets the composite front. None: a 1-wave crosses a
/// 3-wave.
struct Classification {
  EventSet set = EventSet::None;
  int h = 0;
  int l = 0;
  bool simplified = false;

  std::string label() const;
};

/// Per-order and total change of the functionals across one event.
struct DeltaF {
  double total = 0.0;
  std::vector<double> per_order;
  double at(std::size_t k) const noexcept { return k < per_order.size() ? per_order[k] : 0.0; }
  /// sum of per_order[l] for 1 <= l < h.
  double lower_sum(int h) const;
};

/// Total change from two snapshots and per-order change from two ledger
/// evaluations.
DeltaF delta_F(const FunctionalSnapshot& before, const FunctionalSnapshot& after,
               const OrderValues& ord_before, const OrderValues& ord_after);

/// Change computed from the fronts that disappear and appear at one event.
/// `np_order` and `np_amount` describe non-physical production (0 if none).
DeltaF local_delta(const std::vector<Front>& incoming, const std::vector<Front>& outgoing,
                   int np_order, double np_amount, const params::ParameterSet& ps);

/// Non-physical production per order plus the per-event bookkeeping of the
/// decay argument.
class GenerationLedger {
 public:
  GenerationLedger() = default;
  explicit GenerationLedger(params::ParameterSet ps) : ps_(ps) {}

  /// Production |eps20 - delta20| at an event whose outgoing composite has
  /// order k.
  void add_nonphysical(int k, double amount);
  const std::vector<double>& L0() const noexcept { return L0_; }
  double L0_total() const;

  /// Per-order functionals of a front configuration with the current L0.
  OrderValues evaluate(const FrontList& fronts) const;

  /// Captures F_1(0+) from the initial configuration.
  void start(const FrontList& fronts);
  double F1_initial() const noexcept { return F1_0_; }

  /// alpha_{h+1} += [dF_{h+1}]_+ for an event in I_h or J_h.
  void record(const Classification& cls, const DeltaF& d);
  const std::vector<double>& alpha() const noexcept { return alpha_; }
  std::size_t count(EventSet s) const noexcept;

  const params::ParameterSet& parameters() const noexcept { return ps_; }

 private:
  params::ParameterSet ps_;
  std::vector<double> L0_;
  std::vector<double> alpha_;
  std::size_t n_none_ = 0;
  std::size_t n_I_ = 0;
  std::size_t n_J_ = 0;
  double F1_0_ = 0.0;
};

struct Assertion {
  std::string name;
  bool ok = true;
  double lhs = 0.0;
  double rhs = 0.0;
  double excess() const noexcept { return lhs - rhs; }
};

inline double pos(double x) noexcept { return x > 0.0 ? x : 0.0; }
inline double neg(double x) noexcept { return x < 0.0 ? -x : 0.0; }

/// Vanishing of dF_k for k >= h+2, the signs dF_h <= 0 <= dF_{h+1}, and
/// [dF_{h+1}]_+ <= mu ([dF_h]_- - sum_{l<h} dF_l). A crossing must leave every
/// dF_k at zero.
std::vector<Assertion> check_generation_laws(const DeltaF& d, const Classification& cls,
                                             double mu, double tol = 1e-10);

/// F~_k <= mu^{k-1} F_1(0) for every k >= 2 present.
Assertion check_tail_decay(const OrderValues& ord, double F1_initial, double mu,
                           double tol = 1e-10);

/// dF <= -(1 - mu) [dF_h]_-.
Assertion check_strengthened_decrease(const DeltaF& d, const Classification& cls, double mu,
                                      double tol = 1e-10);

/// dF <= -(1 - mu) ([dF_h]_- - sum_{l<h} dF_l), which is what the per-order
/// bound actually implies when lower orders take part.
Assertion check_corrected_decrease(const DeltaF& d, const Classification& cls, double mu,
                                   double tol = 1e-10);

}  // namespace ptrack::functionals
