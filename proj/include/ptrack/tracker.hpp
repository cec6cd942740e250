#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptrack/front.hpp"
#include "ptrack/functionals.hpp"
#include "ptrack/params.hpp"
#include "ptrack/profile.hpp"

namespace ptrack::tracker {

enum class EventKind { SameFamily, CrossFamily, CompositeAccurate, CompositeSimplified };
const char* to_string(EventKind k) noexcept;

struct WaveRef {
  std::uint64_t id = 0;
  Family family = Family::One;
  double strength = 0.0;
  int order = 1;
};

struct InteractionRecord {
  std::uint64_t index = 0;
  double time = 0.0;
  double x = 0.0;
  EventKind kind = EventKind::CrossFamily;
  std::array<WaveRef, 2> incoming{};
  std::vector<WaveRef> outgoing;
  functionals::Classification cls;
  functionals::DeltaF delta;
  double solver_residual = 0.0;
};

struct SimulationConfig {
  PhasePair phases;
  InitialData initial_data;
  params::ParameterSet params;
  int nu = 8;
  double eta = 0.0;           ///< 0 selects default_eta
  double rho = 0.0;           ///< 0 selects the rho policy
  double t_max = 1.0;
  double speed_jitter = 1e-9;  ///< recorded only; exact ties are resolved one pair at a time
  std::uint64_t event_budget = 10'000'000;
  bool enforce = true;        ///< throw on an increase of F
  double tol = 1e-10;
  double v_min = 0.0;
  std::vector<double> output_times;
  bool keep_events = true;
  bool keep_timeline = true;
};

/// eta_nu = min(m, 1) / nu.
double default_eta(int nu, const params::ParameterSet& ps);

/// First guess of rho_nu: 1 / (2 nu C_o |delta2| N0), N0 the number of fronts
/// at t = 0+. Infinite when delta2 = 0 (the simplified solver is then exact).
double initial_rho(int nu, const params::ParameterSet& ps, std::size_t initial_fronts);

/// One straight piece of a front's path in the x-t plane.
struct FrontSegment {
  std::uint64_t id = 0;
  Family family = Family::One;
  double strength = 0.0;
  int order = 1;
  Side side = Side::Left;
  double t_birth = 0.0;
  double x_birth = 0.0;
  double speed = 0.0;
  double t_death = std::numeric_limits<double>::infinity();
};

/// Outcome of one monitored inequality across a run.
struct Check {
  Check() = default;
  explicit Check(std::string n) : name(std::move(n)) {}

  std::string name;
  std::uint64_t evaluated = 0;
  std::uint64_t violations = 0;
  double worst_excess = -std::numeric_limits<double>::infinity();
  std::string first_violation;

  void observe(bool ok, double excess, const std::string& context);
  bool passed() const noexcept { return violations == 0; }
};

struct Monitors {
  Check F_nonincreasing{"dF <= 0"};
  Check generation_laws{"generation-order sign and bound laws"};
  Check tail_decay{"tail sums decay geometrically"};
  Check strengthened_literal{"dF <= -(1-mu)[dF_h]_-"};
  Check strengthened_corrected{"dF <= -(1-mu)([dF_h]_- - sum_{l<h} dF_l)"};
  Check global_bound{"strengths and F stay below m"};
  Check rarefaction_size{"rarefaction fronts below eta"};
  Check consistency{"adjacent side states agree"};
  bool global_hypothesis = false;  ///< Lbar(0+) <= m c(m)^2
  double max_solver_residual = 0.0;

  std::vector<const Check*> all() const;
};

struct Trajectory {
  std::vector<InteractionRecord> events;
  FrontList initial_fronts;
  FrontList final_fronts;
  std::vector<functionals::FunctionalSnapshot> series;
  std::vector<FrontSegment> timeline;
  std::vector<std::pair<double, Profile>> profiles;
  Profile initial_profile;
  functionals::GenerationLedger ledger;
  Monitors monitors;
  double eta = 0.0;
  double rho = 0.0;
  int rho_attempts = 1;
  double t_end = 0.0;
  std::uint64_t event_count = 0;
  std::size_t max_fronts = 0;
  double max_composite_abs = 0.0;
  double sup_tv = 0.0;
  std::uint64_t sup_tv_event = 0;
};

/// Rarefaction of strength eps > 0 as N = floor(eps/eta) + 1 fronts of equal
/// strength chained from U_left. Positions, times and orders are left at
/// defaults; each front's speed is the characteristic speed of its right
/// state.
FrontList split_rarefaction(double eps, double eta, const State& U_left, double a, Family family);

/// Resolves every jump of the approximate datum at t = 0+.
FrontList approximate_initial_data(const Profile& profile, const PhasePair& phases, double eta);

struct EventCandidate {
  double time = 0.0;
  std::uint64_t left = 0;
  std::uint64_t right = 0;
};

/// Collision time of two adjacent fronts, or nothing when they do not converge.
/// Never earlier than `t_now`.
std::optional<double> collision_time(const Front& a, const Front& b, double t_now);

/// Earliest collision among adjacent pairs of an ordered list (ties go to the
/// leftmost pair).
std::optional<EventCandidate> next_event(const FrontList& fronts, double t_now = 0.0);

/// Outcome of resolving one collision.
struct Resolution {
  FrontList outgoing;
  EventKind kind = EventKind::CrossFamily;
  functionals::Classification cls;
  double np_amount = 0.0;  ///< |eps20 - delta20| for the simplified solver
  int np_order = 0;
  double solver_residual = 0.0;
};

/// Resolves the collision of adjacent fronts `a` (left) and `b` (right) at
/// time t. Ids of the outgoing fronts are assigned from `next_id`.
Resolution resolve_event(const Front& a, const Front& b, double t, const PhasePair& phases,
                         double eta, double rho, std::uint64_t& next_id);

/// Front-tracking run with fixed eta and rho (zeros select the defaults).
Trajectory run(const SimulationConfig& config);

/// Runs with rho from the policy, halving it until the composite strength
/// stays at most 1/nu. At most `max_attempts` runs.
Trajectory run_with_rho_policy(const SimulationConfig& config, int max_attempts = 30);

/// Piecewise-constant profile represented by a front list at time t.
Profile profile_at(const FrontList& fronts, double t);

}  // namespace ptrack::tracker
