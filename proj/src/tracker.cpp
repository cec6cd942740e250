#include "ptrack/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <queue>
#include <sstream>

#include "ptrack/error.hpp"
#include "ptrack/riemann.hpp"

namespace ptrack::tracker {

const char* to_string(EventKind k) noexcept {
  switch (k) {
    case EventKind::SameFamily: return "same_family";
    case EventKind::CrossFamily: return "cross_family";
    case EventKind::CompositeAccurate: return "composite_accurate";
    case EventKind::CompositeSimplified: return "composite_simplified";
  }
  return "?";
}

double default_eta(int nu, const params::ParameterSet& ps) {
  return std::min(ps.m, 1.0) / static_cast<double>(std::max(nu, 1));
}

double initial_rho(int nu, const params::ParameterSet& ps, std::size_t initial_fronts) {
  if (ps.delta2 == 0.0) return std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(std::max<std::size_t>(initial_fronts, 1));
  return 1.0 / (2.0 * nu * ps.C_o * ps.delta2 * n);
}

void Check::observe(bool ok, double excess, const std::string& context) {
  ++evaluated;
  worst_excess = std::max(worst_excess, excess);
  if (!ok) {
    if (violations == 0) first_violation = context;
    ++violations;
  }
}

std::vector<const Check*> Monitors::all() const {
  return {&F_nonincreasing, &generation_laws,  &tail_decay,  &strengthened_literal,
          &strengthened_corrected, &global_bound, &rarefaction_size, &consistency};
}

namespace {

double side_a(Side s, const PhasePair& phases) { return s == Side::Left ? phases.a_l : phases.a_r; }

double front_speed(Family family, const State& left, const State& right, double strength, double a) {
  if (strength > 0.0) {
    const double c = eos::char_speed(right.v, a);
    return family == Family::One ? -c : c;
  }
  return eos::shock_speed(family, left.v, right.v, a);
}

Front make_front(Family family, const State& left, const State& right, double strength, int order,
                 Side side, double a) {
  Front f;
  f.family = family;
  f.left = left;
  f.right = right;
  f.strength = strength;
  f.order = order;
  f.side = side;
  f.speed = front_speed(family, left, right, strength, a);
  return f;
}

// Appends the fronts of one wave of strength eps from `from`, ending exactly
// at `to`. Rarefactions at or above eta are split into a fan when `split`.
void emit_wave(FrontList& out, Family family, double eps, const State& from, const State& to,
               int order, Side side, double a, double eta, bool split) {
  if (std::abs(eps) < eos::kNullStrength) return;
  if (eps > 0.0 && split && eps >= eta) {
    FrontList fan = split_rarefaction(eps, eta, from, a, family);
    fan.back().right = to;
    fan.back().speed = front_speed(family, fan.back().left, to, fan.back().strength, a);
    for (Front& f : fan) {
      f.order = order;
      f.side = side;
      out.push_back(f);
    }
    return;
  }
  out.push_back(make_front(family, from, to, eps, order, side, a));
}

// State left of a 1/3-wave of strength eps whose right state is U.
State behind(const State& U, Family family, double eps, double a) {
  State s = U;
  s.v = family == Family::One ? U.v * std::exp(-2.0 * eps) : U.v * std::exp(2.0 * eps);
  s.u = U.u - 2.0 * a * eos::h(eps);
  return s;
}

double state_gap(const State& a, const State& b) {
  return std::max(std::abs(a.v - b.v) / std::max(std::abs(b.v), 1.0),
                  std::abs(a.u - b.u) / std::max(std::abs(b.u), 1.0));
}

}  // namespace

FrontList split_rarefaction(double eps, double eta, const State& U_left, double a, Family family) {
  if (!(eps > 0.0)) throw DomainError("split_rarefaction: strength must be positive");
  if (!(eta > 0.0)) throw DomainError("split_rarefaction: eta must be positive");
  const auto n = static_cast<std::size_t>(std::floor(eps / eta)) + 1;
  const double piece = eps / static_cast<double>(n);
  FrontList fan;
  fan.reserve(n);
  State cur = U_left;
  for (std::size_t k = 0; k < n; ++k) {
    const State next = eos::apply_wave(cur, family, piece, a);
    fan.push_back(make_front(family, cur, next, piece, 1, Side::Left, a));
    cur = next;
  }
  return fan;
}

FrontList approximate_initial_data(const Profile& profile, const PhasePair& phases, double eta) {
  FrontList fronts;
  auto cell_state = [&](std::size_t k) {
    const bool left = k < profile.breaks.size() && profile.breaks[k] <= 0.0;
    return State{profile.v[k], profile.u[k], left ? phases.lam_l : phases.lam_r};
  };
  bool has_interface = false;
  for (std::size_t k = 0; k < profile.breaks.size(); ++k) {
    const double x = profile.breaks[k];
    const State Ul = cell_state(k);
    const State Ur = cell_state(k + 1);
    const std::size_t first = fronts.size();
    if (x == 0.0) {
      has_interface = true;
      const auto fan = riemann::solve_lax(Ul, Ur, phases.a_l, phases.a_r);
      emit_wave(fronts, Family::One, fan.eps1, Ul, fan.mid_left, 1, Side::Left, phases.a_l, eta, true);
      Front c;
      c.family = Family::Composite;
      c.left = fronts.size() > first ? fronts.back().right : Ul;
      c.right = fan.mid_right;
      c.side = Side::Left;
      fronts.push_back(c);
      emit_wave(fronts, Family::Three, fan.eps3, fan.mid_right, Ur, 1, Side::Right, phases.a_r, eta, true);
      if (std::abs(fan.eps3) < eos::kNullStrength) fronts.back().right = Ur;
    } else {
      const Side side = x < 0.0 ? Side::Left : Side::Right;
      const double a = side_a(side, phases);
      const auto fan = riemann::solve_lax(Ul, Ur, a, a);
      emit_wave(fronts, Family::One, fan.eps1, Ul, fan.mid_left, 1, side, a, eta, true);
      const State mid = fronts.size() > first ? fronts.back().right : Ul;
      emit_wave(fronts, Family::Three, fan.eps3, mid, Ur, 1, side, a, eta, true);
      if (fronts.size() > first) fronts.back().right = Ur;
    }
    for (std::size_t j = first; j < fronts.size(); ++j) fronts[j].position = x;
  }
  if (!has_interface) throw DomainError("approximate_initial_data: profile lacks a break at x = 0");
  // Re-link neighbours so every right state is the next left state exactly.
  for (std::size_t j = 1; j < fronts.size(); ++j) fronts[j].left = fronts[j - 1].right;
  std::uint64_t id = 1;
  for (Front& f : fronts) f.id = id++;
  return fronts;
}

std::optional<double> collision_time(const Front& a, const Front& b, double t_now) {
  if (!(a.speed > b.speed)) return std::nullopt;
  const double ta = std::max({a.anchor_time, b.anchor_time, t_now});
  const double gap = b.x_at(ta) - a.x_at(ta);
  if (gap <= 0.0) return ta;
  return ta + gap / (a.speed - b.speed);
}

std::optional<EventCandidate> next_event(const FrontList& fronts, double t_now) {
  std::optional<EventCandidate> best;
  for (std::size_t k = 0; k + 1 < fronts.size(); ++k) {
    const auto t = collision_time(fronts[k], fronts[k + 1], t_now);
    if (t && (!best || *t < best->time)) best = EventCandidate{*t, fronts[k].id, fronts[k + 1].id};
  }
  return best;
}

Resolution resolve_event(const Front& a, const Front& b, double t, const PhasePair& phases,
                         double eta, double rho, std::uint64_t& next_id) {
  using functionals::EventSet;
  Resolution res;
  const State& Ul = a.left;
  const State& Ur = b.right;

  if (!a.is_composite() && !b.is_composite()) {
    const Side side = a.side;
    const double sa = side_a(side, phases);
    if (a.family != b.family) {
      // A 1-wave and a 3-wave cross unchanged.
      const Front& w1 = a.family == Family::One ? a : b;
      const Front& w3 = a.family == Family::Three ? a : b;
      const State mid = eos::apply_wave(Ul, Family::One, w1.strength, sa);
      res.outgoing.push_back(make_front(Family::One, Ul, mid, w1.strength, w1.order, side, sa));
      res.outgoing.push_back(make_front(Family::Three, mid, Ur, w3.strength, w3.order, side, sa));
      res.kind = EventKind::CrossFamily;
      res.solver_residual = state_gap(eos::apply_wave(mid, Family::Three, w3.strength, sa), Ur);
    } else {
      const auto fan = riemann::solve_lax(Ul, Ur, sa, sa);
      const int h = std::max(a.order, b.order);
      const int l = std::min(a.order, b.order);
      const bool one = a.family == Family::One;
      const int o1 = one ? l : h + 1;
      const int o3 = one ? h + 1 : l;
      emit_wave(res.outgoing, Family::One, fan.eps1, Ul, fan.mid_left, o1, side, sa, eta, true);
      const State mid = res.outgoing.empty() ? Ul : res.outgoing.back().right;
      emit_wave(res.outgoing, Family::Three, fan.eps3, mid, Ur, o3, side, sa, eta, true);
      if (!res.outgoing.empty()) res.outgoing.back().right = Ur;
      res.kind = EventKind::SameFamily;
      res.cls = {EventSet::I, h, l, false};
      res.solver_residual = fan.max_residual();
    }
  } else {
    const bool from_left = b.is_composite();
    const Front& wave = from_left ? a : b;
    const Front& comp = from_left ? b : a;
    const double delta = wave.strength;
    const int h = wave.order;
    if (std::abs(delta) >= rho) {
      const auto fan = riemann::solve_pseudo_accurate(Ul, Ur, comp.strength, phases);
      const int o1 = wave.family == Family::One ? h : h + 1;
      const int o3 = wave.family == Family::Three ? h : h + 1;
      emit_wave(res.outgoing, Family::One, fan.eps1, Ul, fan.mid_left, o1, Side::Left, phases.a_l, eta, true);
      Front c = comp;
      c.left = res.outgoing.empty() ? Ul : res.outgoing.back().right;
      c.right = fan.mid_right;
      res.outgoing.push_back(c);
      emit_wave(res.outgoing, Family::Three, fan.eps3, fan.mid_right, Ur, o3, Side::Right, phases.a_r, eta, true);
      res.outgoing.back().right = Ur;
      res.kind = EventKind::CompositeAccurate;
      res.cls = {EventSet::J, h, h, false};
      res.solver_residual = fan.max_residual();
    } else {
      const double d20 = riemann::solve_pseudo_simplified(comp.strength, wave.family, delta, phases);
      Front c = comp;
      c.strength = d20;
      c.order = h + 1;
      if (from_left) {
        const State mid = behind(Ur, Family::Three, delta, phases.a_r);
        c.left = Ul;
        c.right = mid;
        res.outgoing.push_back(c);
        res.outgoing.push_back(make_front(Family::Three, mid, Ur, delta, h, Side::Right, phases.a_r));
      } else {
        const State mid = eos::apply_wave(Ul, Family::One, delta, phases.a_l);
        res.outgoing.push_back(make_front(Family::One, Ul, mid, delta, h, Side::Left, phases.a_l));
        c.left = mid;
        c.right = Ur;
        res.outgoing.push_back(c);
      }
      res.np_amount = std::abs(d20 - comp.strength);
      res.np_order = h + 1;
      res.kind = EventKind::CompositeSimplified;
      res.cls = {EventSet::J, h, h, true};
      res.solver_residual = state_gap(eos::apply_composite(c.left, phases, d20), c.right);
    }
  }

  const double x = (a.is_composite() || b.is_composite()) ? 0.0 : a.x_at(t);
  for (Front& f : res.outgoing) {
    f.id = next_id++;
    f.anchor_time = t;
    f.position = f.is_composite() ? 0.0 : x;
    if (f.is_composite()) f.speed = 0.0;
  }
  return res;
}

Profile profile_at(const FrontList& fronts, double t) {
  Profile p;
  if (fronts.empty()) throw DomainError("profile_at: empty front list");
  p.v.push_back(fronts.front().left.v);
  p.u.push_back(fronts.front().left.u);
  for (const Front& f : fronts) {
    const double x = f.is_composite() ? 0.0 : f.x_at(t);
    if (!p.breaks.empty() && x <= p.breaks.back()) {
      // Coincident fronts: the cell between them has zero width.
      p.v.back() = f.right.v;
      p.u.back() = f.right.u;
      continue;
    }
    p.breaks.push_back(x);
    p.v.push_back(f.right.v);
    p.u.push_back(f.right.u);
  }
  p.ensure_interface_break();
  return p;
}

namespace {

struct Node {
  Front front;
  std::uint64_t prev = 0;
  std::uint64_t next = 0;
  bool alive = false;
};

struct QueueEntry {
  double time;
  std::uint64_t left;
  std::uint64_t right;
  bool operator>(const QueueEntry& o) const {
    if (time != o.time) return time > o.time;
    if (left != o.left) return left > o.left;
    return right > o.right;
  }
};

class Engine {
 public:
  Engine(const SimulationConfig& cfg, double eta, double rho) : cfg_(cfg), eta_(eta), rho_(rho) {}

  Trajectory run();

 private:
  FrontList current() const {
    FrontList out;
    for (std::uint64_t id = head_; id != 0; id = nodes_[id].next) out.push_back(nodes_[id].front);
    return out;
  }
  Node& node(std::uint64_t id) { return nodes_[id]; }
  void schedule(std::uint64_t l, std::uint64_t r, double t_now) {
    if (l == 0 || r == 0) return;
    if (const auto t = collision_time(nodes_[l].front, nodes_[r].front, t_now)) queue_.push({*t, l, r});
  }
  void insert_nodes(std::size_t id) {
    if (nodes_.size() <= id) nodes_.resize(id + 1);
  }
  std::string context(const InteractionRecord& rec, const std::string& what) const;
  void monitor(const InteractionRecord& rec, const Resolution& res,
               const functionals::FunctionalSnapshot& snap, const functionals::OrderValues& ord,
               Trajectory& tr);

  const SimulationConfig& cfg_;
  double eta_;
  double rho_;
  std::vector<Node> nodes_;
  std::uint64_t head_ = 0;
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue_;
  std::deque<InteractionRecord> recent_;
};

std::string describe(const InteractionRecord& r) {
  std::ostringstream os;
  os.precision(17);
  os << "event " << r.index << " t=" << r.time << " x=" << r.x << " " << to_string(r.kind) << " ["
     << r.cls.label() << "] in:";
  for (const auto& w : r.incoming) {
    os << " (" << static_cast<int>(w.family) << "," << w.strength << ",k=" << w.order << ")";
  }
  os << " out:";
  for (const auto& w : r.outgoing) {
    os << " (" << static_cast<int>(w.family) << "," << w.strength << ",k=" << w.order << ")";
  }
  os << " dF=" << r.delta.total;
  return os.str();
}

std::string Engine::context(const InteractionRecord& rec, const std::string& what) const {
  std::ostringstream os;
  os << what << " at " << describe(rec);
  return os.str();
}

void Engine::monitor(const InteractionRecord& rec, const Resolution& res,
                     const functionals::FunctionalSnapshot& snap, const functionals::OrderValues& ord,
                     Trajectory& tr) {
  const auto& ps = cfg_.params;
  const double tol = cfg_.tol;
  Monitors& m = tr.monitors;

  const bool up = rec.delta.total > tol;
  m.F_nonincreasing.observe(!up, rec.delta.total, context(rec, "F increased"));
  if (up && cfg_.enforce) {
    std::ostringstream os;
    os << "functional F increased by " << rec.delta.total << "; last events:";
    for (const auto& r : recent_) os << "\n  " << describe(r);
    throw MonitorViolation(os.str());
  }

  double worst = -std::numeric_limits<double>::infinity();
  bool ok = true;
  std::string failed;
  for (const auto& a : functionals::check_generation_laws(rec.delta, rec.cls, ps.mu, tol)) {
    worst = std::max(worst, a.excess());
    if (!a.ok && ok) failed = a.name;
    ok = ok && a.ok;
  }
  m.generation_laws.observe(ok, worst, context(rec, failed));

  const auto tail = functionals::check_tail_decay(ord, tr.ledger.F1_initial(), ps.mu, tol);
  m.tail_decay.observe(tail.ok, tail.excess(), context(rec, tail.name));

  const auto lit = functionals::check_strengthened_decrease(rec.delta, rec.cls, ps.mu, tol);
  m.strengthened_literal.observe(lit.ok, lit.excess(), context(rec, lit.name));
  const auto cor = functionals::check_corrected_decrease(rec.delta, rec.cls, ps.mu, tol);
  m.strengthened_corrected.observe(cor.ok, cor.excess(), context(rec, cor.name));

  if (m.global_hypothesis) {
    const double excess = std::max(snap.max_strength, snap.F) - ps.m;
    m.global_bound.observe(excess <= tol, excess, context(rec, "strength or F above m"));
  }

  double rare = -std::numeric_limits<double>::infinity();
  double gap = 0.0;
  for (const Front& f : res.outgoing) {
    if (f.is_composite()) {
      gap = std::max(gap, state_gap(eos::apply_composite(f.left, cfg_.phases, f.strength), f.right));
      continue;
    }
    if (f.is_rarefaction()) rare = std::max(rare, f.strength - eta_);
    gap = std::max(gap, std::abs(eos::strength_of_jump(f.family, f.left.v, f.right.v) - f.strength));
  }
  if (rare > -std::numeric_limits<double>::infinity()) {
    m.rarefaction_size.observe(rare < 0.0, rare, context(rec, "rarefaction front not below eta"));
  }
  m.consistency.observe(gap <= 1e-12, gap - 1e-12, context(rec, "side states inconsistent"));
  m.max_solver_residual = std::max(m.max_solver_residual, res.solver_residual);
}

Trajectory Engine::run() {
  Trajectory tr;
  tr.eta = eta_;
  tr.rho = rho_;
  tr.ledger = functionals::GenerationLedger(cfg_.params);

  const double l1_tol = 1.0 / static_cast<double>(std::max(cfg_.nu, 1));
  Profile profile = cfg_.initial_data.approximate(l1_tol);
  profile.validate(cfg_.v_min);
  tr.initial_profile = profile;

  FrontList initial = approximate_initial_data(profile, cfg_.phases, eta_);
  tr.initial_fronts = initial;
  std::uint64_t next_id = initial.back().id + 1;
  nodes_.resize(next_id);
  for (std::size_t k = 0; k < initial.size(); ++k) {
    Node& n = nodes_[initial[k].id];
    n.front = initial[k];
    n.alive = true;
    n.prev = k > 0 ? initial[k - 1].id : 0;
    n.next = k + 1 < initial.size() ? initial[k + 1].id : 0;
    if (cfg_.keep_timeline) {
      tr.timeline.push_back({initial[k].id, initial[k].family, initial[k].strength, initial[k].order,
                             initial[k].side, 0.0, initial[k].position, initial[k].speed});
    }
  }
  head_ = initial.front().id;
  std::vector<std::size_t> segment_of(nodes_.size(), 0);
  for (std::size_t k = 0; k < tr.timeline.size(); ++k) segment_of[tr.timeline[k].id] = k;

  tr.ledger.start(initial);
  auto snap = functionals::snapshot(initial, cfg_.params, 0.0);
  auto ord = tr.ledger.evaluate(initial);
  snap.tail2 = ord.tail(2);
  tr.series.push_back(snap);
  tr.max_fronts = initial.size();
  tr.max_composite_abs = snap.composite_abs;
  tr.sup_tv = snap.tv_vu;
  const double cm = eos::c_damp(cfg_.params.m);
  tr.monitors.global_hypothesis = snap.Lbar <= cfg_.params.m * cm * cm;
  if (tr.monitors.global_hypothesis) {
    const double excess = std::max(snap.max_strength, snap.F) - cfg_.params.m;
    tr.monitors.global_bound.observe(excess <= cfg_.tol, excess, "at t = 0+");
  }

  for (std::size_t k = 0; k + 1 < initial.size(); ++k) schedule(initial[k].id, initial[k + 1].id, 0.0);

  std::vector<double> outputs = cfg_.output_times;
  std::sort(outputs.begin(), outputs.end());
  std::size_t next_output = 0;
  auto emit_profiles_before = [&](double t) {
    while (next_output < outputs.size() && outputs[next_output] <= t &&
           outputs[next_output] <= cfg_.t_max) {
      tr.profiles.emplace_back(outputs[next_output], profile_at(current(), outputs[next_output]));
      ++next_output;
    }
  };

  double t_now = 0.0;
  while (!queue_.empty()) {
    const QueueEntry e = queue_.top();
    queue_.pop();
    if (!nodes_[e.left].alive || !nodes_[e.right].alive || nodes_[e.left].next != e.right) continue;
    if (e.time > cfg_.t_max) break;
    if (tr.event_count >= cfg_.event_budget) {
      std::ostringstream os;
      os << "event budget of " << cfg_.event_budget << " exhausted at t = " << t_now;
      throw BudgetExceeded(os.str());
    }
    emit_profiles_before(std::nextafter(e.time, -1.0));
    t_now = e.time;

    const Front fa = nodes_[e.left].front;
    const Front fb = nodes_[e.right].front;
    Resolution res = resolve_event(fa, fb, t_now, cfg_.phases, eta_, rho_, next_id);

    // Splice the outgoing fronts in place of the pair.
    const std::uint64_t before = nodes_[e.left].prev;
    const std::uint64_t after = nodes_[e.right].next;
    nodes_[e.left].alive = false;
    nodes_[e.right].alive = false;
    if (nodes_.size() < next_id) nodes_.resize(next_id);
    if (before != 0 && !res.outgoing.empty()) res.outgoing.front().left = nodes_[before].front.right;
    if (after != 0 && !res.outgoing.empty()) res.outgoing.back().right = nodes_[after].front.left;
    std::uint64_t prev = before;
    for (const Front& f : res.outgoing) {
      Node& n = nodes_[f.id];
      n.front = f;
      n.alive = true;
      n.prev = prev;
      if (prev != 0) nodes_[prev].next = f.id; else head_ = f.id;
      prev = f.id;
    }
    if (prev != 0) nodes_[prev].next = after; else head_ = after;
    if (after != 0) nodes_[after].prev = prev;

    InteractionRecord rec;
    rec.index = tr.event_count;
    rec.time = t_now;
    rec.x = (fa.is_composite() || fb.is_composite()) ? 0.0 : fa.x_at(t_now);
    rec.kind = res.kind;
    rec.incoming = {WaveRef{fa.id, fa.family, fa.strength, fa.order},
                    WaveRef{fb.id, fb.family, fb.strength, fb.order}};
    for (const Front& f : res.outgoing) rec.outgoing.push_back({f.id, f.family, f.strength, f.order});
    rec.cls = res.cls;
    rec.solver_residual = res.solver_residual;
    rec.delta = functionals::local_delta({fa, fb}, res.outgoing, res.np_order, res.np_amount, cfg_.params);
    if (res.np_amount != 0.0) tr.ledger.add_nonphysical(res.np_order, res.np_amount);
    tr.ledger.record(res.cls, rec.delta);
    ++tr.event_count;

    if (cfg_.keep_timeline) {
      for (const Front* f : {&fa, &fb}) tr.timeline[segment_of[f->id]].t_death = t_now;
      segment_of.resize(next_id, 0);
      for (const Front& f : res.outgoing) {
        segment_of[f.id] = tr.timeline.size();
        tr.timeline.push_back({f.id, f.family, f.strength, f.order, f.side, t_now, f.position, f.speed});
      }
    }

    const FrontList list = current();
    snap = functionals::snapshot(list, cfg_.params, t_now);
    ord = tr.ledger.evaluate(list);
    snap.tail2 = ord.tail(2);
    tr.series.push_back(snap);
    tr.max_fronts = std::max(tr.max_fronts, list.size());
    tr.max_composite_abs = std::max(tr.max_composite_abs, snap.composite_abs);
    if (snap.tv_vu > tr.sup_tv) {
      tr.sup_tv = snap.tv_vu;
      tr.sup_tv_event = rec.index + 1;
    }

    recent_.push_back(rec);
    if (recent_.size() > 10) recent_.pop_front();
    monitor(rec, res, snap, ord, tr);
    if (cfg_.keep_events) tr.events.push_back(std::move(rec));

    schedule(before, res.outgoing.empty() ? after : res.outgoing.front().id, t_now);
    for (std::size_t k = 0; k + 1 < res.outgoing.size(); ++k) {
      schedule(res.outgoing[k].id, res.outgoing[k + 1].id, t_now);
    }
    if (!res.outgoing.empty()) schedule(res.outgoing.back().id, after, t_now);
  }
  emit_profiles_before(cfg_.t_max);
  tr.t_end = cfg_.t_max;
  tr.final_fronts = current();
  return tr;
}

}  // namespace

Trajectory run(const SimulationConfig& config) {
  if (!(config.t_max > 0.0)) throw DomainError("run: t_max must be positive");
  if (config.nu < 1) throw DomainError("run: nu must be a positive integer");
  const double eta = config.eta > 0.0 ? config.eta : default_eta(config.nu, config.params);
  double rho = config.rho;
  if (!(rho > 0.0)) {
    const Profile p = config.initial_data.approximate(1.0 / config.nu);
    rho = initial_rho(config.nu, config.params,
                      approximate_initial_data(p, config.phases, eta).size());
  }
  Engine engine(config, eta, rho);
  return engine.run();
}

Trajectory run_with_rho_policy(const SimulationConfig& config, int max_attempts) {
  SimulationConfig cfg = config;
  const double eta = cfg.eta > 0.0 ? cfg.eta : default_eta(cfg.nu, cfg.params);
  cfg.eta = eta;
  if (!(cfg.rho > 0.0)) {
    const Profile p = cfg.initial_data.approximate(1.0 / cfg.nu);
    cfg.rho = initial_rho(cfg.nu, cfg.params, approximate_initial_data(p, cfg.phases, eta).size());
  }
  const double bound = 1.0 / static_cast<double>(cfg.nu);
  Trajectory tr;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    tr = run(cfg);
    tr.rho_attempts = attempt;
    if (tr.max_composite_abs <= bound || std::isinf(cfg.rho)) break;
    cfg.rho *= 0.5;
  }
  return tr;
}

}  // namespace ptrack::tracker
