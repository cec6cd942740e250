// Acceptance run: one PASS/FAIL line per criterion, with the sub-checks that
// decide it listed underneath. Exit status is nonzero only when a sub-check
// fails that is not on the list of known deviations, so the FAIL lines stay
// visible without breaking the test suite.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "ptrack/eos.hpp"
#include "ptrack/oracle.hpp"
#include "ptrack/params.hpp"
#include "ptrack/riemann.hpp"
#include "ptrack/scenario.hpp"
#include "ptrack/tracker.hpp"
#include "support.hpp"

using namespace ptrack;

namespace {

struct SubCheck {
  std::string what;
  bool ok;
  std::string detail;
  bool known_deviation;
};

struct Criterion {
  int id;
  std::string title;
  std::vector<SubCheck> checks;
  double seconds = 0.0;

  void add(std::string what, bool ok, std::string detail, bool known = false) {
    checks.push_back({std::move(what), ok, std::move(detail), known});
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.ok; });
  }
};

std::string fmt(const char* f, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string num(double x) { return fmt("%.3g", x); }

template <class F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Independent closed forms: w(m) = 2/(cosh m - 1) inverts to acosh(1 + 2/r),
// and z(m) = 2 m tanh^4(m/2).
double k_closed_form(double r) {
  const double m = std::acosh(1.0 + 2.0 / r);
  const double t = std::tanh(0.5 * m);
  return 2.0 * m * t * t * t * t;
}

PhasePair phases_for(double delta2) {
  return PhasePair::make(0.0, 1.0, 1.0, (2.0 + delta2) / (2.0 - delta2));
}

// Long enough for the interaction count to level off.
constexpr double kCorpusTime = 400.0;

struct CorpusRun {
  double delta2;
  double tv_fraction;
  params::ParameterSet ps;
  tracker::Trajectory tr;
  bool budget_hit = false;
};

std::vector<CorpusRun> corpus() {
  const double deltas[] = {0.2, 0.5, 1.0, 1.5};
  std::vector<CorpusRun> out;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    testing::Gen g(1000 + seed);
    CorpusRun r;
    r.delta2 = deltas[(seed - 1) % 4];
    r.tv_fraction = g.uniform(0.02, 0.9);
    tracker::SimulationConfig c;
    c.phases = phases_for(r.delta2);
    const double budget = r.tv_fraction * params::k_threshold(r.delta2);
    const Profile p = scenario::random_profile(c.phases, seed, g.integer(4, 16), budget, -2.0, 2.0);
    c.initial_data = InitialData::piecewise(p);
    c.params = *params::check_initial_data(p, c.phases).parameters;
    c.t_max = kCorpusTime;
    c.enforce = false;
    c.event_budget = 2'000'000;
    r.ps = c.params;
    try {
      r.tr = tracker::run_with_rho_policy(c);
    } catch (const std::exception&) {
      r.budget_hit = true;
    }
    out.push_back(std::move(r));
  }
  return out;
}

// 1 ------------------------------------------------------------------------
Criterion constants() {
  Criterion c{1, "exact constants", {}};
  c.seconds = timed([&] {
    const double target = (2.0 / 9.0) * std::log(2.0 + std::sqrt(3.0));
    const double k_hi = params::k_threshold(2.0 - 1e-8);
    c.add("K(2-1e-8) = (2/9) log(2+sqrt 3) +- 1e-6", std::abs(k_hi - target) <= 1e-6,
          "deviation " + num(std::abs(k_hi - target)));
    const double k_lo = params::k_threshold(1e-8);
    c.add("K(1e-8) > 1e3", k_lo > 1e3,
          "K(1e-8) = " + num(k_lo) + "; the closed form grows only like 2 log(4/r)", true);
    const double mb = std::log(2.0 + std::sqrt(3.0));
    c.add("c(log(2+sqrt 3)) = 1/3 +- 1e-12", std::abs(eos::c_damp(mb) - 1.0 / 3.0) <= 1e-12,
          "deviation " + num(std::abs(eos::c_damp(mb) - 1.0 / 3.0)));
    c.add("w(log(2+sqrt 3)) = 2 +- 1e-12", std::abs(params::w_fn(mb) - 2.0) <= 1e-12,
          "deviation " + num(std::abs(params::w_fn(mb) - 2.0)));
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
      const double r = 0.01 + 1.98 * (k + 0.5) / 1000.0;
      worst = std::max(worst, std::abs(params::k_threshold(r) - k_closed_form(r)));
      worst = std::max(worst, std::abs(params::k_threshold(r) - params::z_fn(params::w_inverse(r))));
    }
    c.add("K(r) = z(w^-1(r)) on 1000 points in (0.01, 1.99), <= 1e-10", worst <= 1e-10,
          "max deviation " + num(worst));
  });
  return c;
}

// 2 ------------------------------------------------------------------------
Criterion solver(const std::vector<CorpusRun>& runs) {
  Criterion c{2, "solver correctness", {}};
  c.seconds = timed([&] {
    testing::Gen g(2024);
    double worst_res = 0.0, worst_rh = 0.0, worst_oracle = 0.0;
    int shocks = 0;
    for (int k = 0; k < 10000; ++k) {
      const double al = g.log_uniform(0.3, 3.0), ar = g.log_uniform(0.3, 3.0);
      const double pl = g.log_uniform(0.1, 10.0);
      const double pr = pl * g.log_uniform(1e-4, 1e4);
      const State Ul{al * al / pl, g.uniform(-2, 2), 0.0};
      const State Ur{ar * ar / pr, g.uniform(-2, 2), 1.0};
      const auto fan = riemann::solve_lax(Ul, Ur, al, ar);
      const double r1 = fan.eps3 - fan.eps1 - 0.5 * std::log(pr / pl);
      const double r2 = 2.0 * (al * eos::h(fan.eps1) + ar * eos::h(fan.eps3)) - (Ur.u - Ul.u);
      worst_res = std::max({worst_res, std::abs(r1), std::abs(r2)});
      const auto ref = testing::riemann_by_pressure(Ul.v, Ul.u, Ur.v, Ur.u, al, ar);
      worst_oracle = std::max({worst_oracle, std::abs(ref.eps1 - fan.eps1), std::abs(ref.eps3 - fan.eps3)});
      if (fan.eps1 < 0.0) {
        const double s = eos::shock_speed(Family::One, Ul.v, fan.mid_left.v, al);
        worst_rh = std::max(worst_rh, testing::rh_defect(Ul.v, Ul.u, fan.mid_left.v, fan.mid_left.u, al, s));
        ++shocks;
      }
      if (fan.eps3 < 0.0) {
        const double s = eos::shock_speed(Family::Three, fan.mid_right.v, Ur.v, ar);
        worst_rh = std::max(worst_rh, testing::rh_defect(fan.mid_right.v, fan.mid_right.u, Ur.v, Ur.u, ar, s));
        ++shocks;
      }
    }
    c.add("residuals <= 1e-12 on 1e4 instances, p ratio in [1e-4, 1e4]", worst_res <= 1e-12,
          "max residual " + num(worst_res));
    c.add("Rankine-Hugoniot defect of solver shocks <= 1e-12", worst_rh <= 1e-12,
          std::to_string(shocks) + " shocks, max " + num(worst_rh));
    c.add("strengths agree with the pressure-space oracle to 1e-9", worst_oracle <= 1e-9,
          "max deviation " + num(worst_oracle));

    // Every shock produced along the corpus runs.
    double worst_run = 0.0;
    std::size_t n = 0;
    for (const auto& r : runs) {
      for (const FrontList* fl : {&r.tr.initial_fronts, &r.tr.final_fronts}) {
        for (const Front& f : *fl) {
          if (!f.is_shock()) continue;
          const PhasePair ph = phases_for(r.delta2);
          const double aa = f.side == Side::Left ? ph.a_l : ph.a_r;
          worst_run = std::max(worst_run, testing::rh_defect(f.left.v, f.left.u, f.right.v, f.right.u, aa, f.speed));
          ++n;
        }
      }
    }
    c.add("Rankine-Hugoniot defect of tracked shocks <= 1e-12", worst_run <= 1e-12,
          std::to_string(n) + " shocks, max " + num(worst_run));
  });
  c.add("runtime < 10 s", c.seconds < 10.0, fmt("%.2f s", c.seconds));
  return c;
}

// 3 and 7 ------------------------------------------------------------------
const oracle::SweepReport* find(const std::vector<oracle::SweepReport>& rs, const std::string& key) {
  for (const auto& r : rs) {
    if (r.name.find(key) != std::string::npos) return &r;
  }
  return nullptr;
}

void add_sweep(Criterion& c, const std::vector<oracle::SweepReport>& rs, const std::string& key,
               const std::string& what) {
  const auto* r = find(rs, key);
  if (r == nullptr) {
    c.add(what, false, "sweep not found");
    return;
  }
  c.add(what, r->passed, std::to_string(r->cases) + " cases, max " + num(r->max_deviation));
}

Criterion reflection() {
  Criterion c{3, "reflection oracle equivalence", {}};
  std::vector<oracle::SweepReport> rs;
  c.seconds = timed([&] { rs = oracle::run_suite("lemma53", 50); });
  add_sweep(c, rs, "oracle vs solver", "reflected size: oracle vs solver <= 1e-10 (50x50)");
  add_sweep(c, rs, "reflected size <= c(|alpha|)", "|eps_j| <= c(|alpha|) min{|alpha|, |beta|}, no violations");
  add_sweep(c, rs, "y_mixed(x_o(z), z)", "junction continuity at z in {0.5, 1, 3} <= 1e-10");
  // Independent junction probe.
  double worst = 0.0;
  for (double z : {0.5, 1.0, 3.0}) {
    const double x = oracle::x_o(z);
    const double resid = std::sinh(x - z) - std::sinh(z) + x;
    worst = std::max({worst, std::abs(oracle::y_mixed(x, z) - oracle::y_pure(z)), std::abs(resid)});
  }
  c.add("x_o root and junction recomputed directly <= 1e-10", worst <= 1e-10, "max " + num(worst));
  c.add("runtime < 30 s", c.seconds < 30.0, fmt("%.2f s", c.seconds));
  return c;
}

Criterion schochet() {
  Criterion c{7, "shock-contact-shock reflection", {}};
  std::vector<oracle::SweepReport> rs;
  c.seconds = timed([&] { rs = oracle::run_suite("schochet", 0, 7); });
  add_sweep(c, rs, "A = c(eps1)", "A = c(eps1) to 1e-12 on 1000 patterns");
  add_sweep(c, rs, "B = c(eps3)", "B = c(eps3) to 1e-12 on 1000 patterns");
  // Degenerate reduction, recomputed: with c3 -> 1 the quadratic vanishes at
  // |eps2| = (1 - c1)/c1 and at |eps2| = 2.
  int checked = 0, mismatched = 0;
  for (int i = 0; i < 40; ++i) {
    for (int j = 0; j < 25; ++j) {
      const double c1 = 0.02 + 0.96 * (i + 0.5) / 40.0;
      const double e2 = -1.9 + 3.8 * (j + 0.5) / 25.0;
      const double reduced = 1.0 / c1 - (1.0 + std::abs(e2));
      if (std::abs(reduced) < 1e-6) continue;
      const auto f = params::finiteness_from_coefficients(c1, 1.0 - 1e-9, e2);
      ++checked;
      if (f.holds != (reduced > 0.0)) ++mismatched;
    }
  }
  c.add("c(eps3) = 1-1e-9 reduces to 1+|eps2| <= 1/c(eps1), consistent sign", mismatched == 0 && checked > 900,
        std::to_string(checked) + " grid points, " + std::to_string(mismatched) + " mismatches");
  return c;
}

// 4 ------------------------------------------------------------------------
Criterion monotone(const std::vector<CorpusRun>& runs) {
  Criterion c{4, "functional monotonicity", {}};
  double worst_dF = -1e300, worst_series = -1e300, worst_lit = -1e300, worst_cor = -1e300;
  std::size_t events = 0, lit_bad = 0, lit_other = 0, cor_bad = 0, aborted = 0;
  for (const auto& r : runs) {
    if (r.budget_hit) {
      ++aborted;
      continue;
    }
    const double mu = r.ps.mu;
    for (const auto& e : r.tr.events) {
      ++events;
      worst_dF = std::max(worst_dF, e.delta.total);
      if (e.cls.set == functionals::EventSet::None) continue;
      const auto h = static_cast<std::size_t>(e.cls.h);
      const double neg_h = std::max(0.0, -e.delta.at(h));
      double lower = 0.0;
      for (std::size_t l = 1; l < h; ++l) lower += e.delta.at(l);
      const double lit = e.delta.total + (1.0 - mu) * neg_h;
      const double cor = e.delta.total + (1.0 - mu) * (neg_h - lower);
      worst_lit = std::max(worst_lit, lit);
      worst_cor = std::max(worst_cor, cor);
      if (lit > 1e-10) {
        ++lit_bad;
        const bool mixed_merge = e.kind == tracker::EventKind::SameFamily && e.cls.l < e.cls.h;
        if (!mixed_merge) ++lit_other;
      }
      cor_bad += cor > 1e-10 ? 1 : 0;
    }
    for (std::size_t k = 1; k < r.tr.series.size(); ++k) {
      worst_series = std::max(worst_series, r.tr.series[k].F - r.tr.series[k - 1].F);
    }
  }
  c.add("corpus: 20 runs, combined TV in (0, 0.9 K), delta2 in {0.2, 0.5, 1, 1.5}", aborted == 0,
        std::to_string(events) + " events, " + std::to_string(aborted) + " runs aborted");
  c.add("every event dF <= 1e-10", worst_dF <= 1e-10, "max dF " + num(worst_dF));
  c.add("F non-increasing along the recorded series", worst_series <= 1e-10, "max step " + num(worst_series));
  c.add("dF <= -(1-mu)[dF_h]_- + 1e-10 at every event", lit_bad == 0,
        std::to_string(lit_bad) + " violations, worst excess " + num(worst_lit) +
            "; " + std::to_string(lit_bad - lit_other) +
            " of them at same-family collisions of different orders",
        lit_other == 0);
  c.add("dF <= -(1-mu)([dF_h]_- - sum_{l<h} dF_l) + 1e-10 (lower orders kept)", cor_bad == 0,
        std::to_string(cor_bad) + " violations, worst excess " + num(worst_cor));
  return c;
}

// 5 ------------------------------------------------------------------------
Criterion decay(const std::vector<CorpusRun>& runs) {
  Criterion c{5, "generation decay", {}};
  std::uint64_t evaluated = 0, violations = 0;
  double worst = -1e300;
  double worst2 = -1e300;
  int max_order = 0;
  for (const auto& r : runs) {
    if (r.budget_hit) continue;
    const auto& m = r.tr.monitors.tail_decay;
    evaluated += m.evaluated;
    violations += m.violations;
    if (m.evaluated > 0) worst = std::max(worst, m.worst_excess);
    const double bound2 = r.ps.mu * r.tr.ledger.F1_initial();
    for (const auto& s : r.tr.series) {
      worst2 = std::max(worst2, s.tail2 - bound2);
      max_order = std::max(max_order, s.max_order);
    }
  }
  c.add("F~_k <= mu^(k-1) F_1(0) + 1e-10 for all k at every event", violations == 0 && evaluated > 0,
        std::to_string(evaluated) + " event evaluations, worst excess " + num(worst) +
            ", orders up to " + std::to_string(max_order));
  c.add("recorded series: F~_2 <= mu F_1(0) + 1e-10", worst2 <= 1e-10, "worst excess " + num(worst2));

  const scenario::Config cfg = scenario::load_config(std::string(PTRACK_FIXTURE_DIR) + "/random.ini");
  for (int nu : {4, 8, 16}) {
    tracker::SimulationConfig s;
    s.phases = cfg.phases;
    s.initial_data = scenario::make_initial_data(cfg);
    s.params = *params::check_initial_data(s.initial_data.exact(), cfg.phases).parameters;
    s.nu = nu;
    s.t_max = cfg.t_max;
    const auto tr = tracker::run_with_rho_policy(s);
    c.add("composite accumulation <= 1/nu, nu = " + std::to_string(nu),
          tr.max_composite_abs <= 1.0 / nu, "max |gamma20| " + num(tr.max_composite_abs));
  }
  return c;
}

// 6 ------------------------------------------------------------------------
Criterion global_bound(const std::vector<CorpusRun>& runs) {
  Criterion c{6, "global strength bound", {}};
  // The corpus rarely meets the hypothesis; add small-data runs that do.
  std::vector<const CorpusRun*> eligible;
  for (const auto& r : runs) {
    if (r.budget_hit || r.tr.series.empty()) continue;
    const double cm = eos::c_damp(r.ps.m);
    if (r.tr.series.front().Lbar <= r.ps.m * cm * cm) eligible.push_back(&r);
  }
  std::vector<CorpusRun> extra;
  const double deltas[] = {0.2, 0.5, 1.0, 1.5};
  for (int k = 0; k < 8; ++k) {
    CorpusRun r;
    r.delta2 = deltas[k % 4];
    tracker::SimulationConfig s;
    s.phases = phases_for(r.delta2);
    const auto ps = params::choose_parameters(s.phases, 0.0);
    const double cm = eos::c_damp(ps.m);
    // Lbar(0+) <= TV(log p)/2 + TV(u)/(2 min a) once the data is resolved.
    const Profile p = scenario::random_profile(s.phases, 300 + k, 8, 0.5 * 2.0 * ps.m * cm * cm, -2, 2);
    s.initial_data = InitialData::piecewise(p);
    s.params = *params::check_initial_data(p, s.phases).parameters;
    s.t_max = 4.0;
    s.enforce = false;
    r.ps = s.params;
    r.tr = tracker::run_with_rho_policy(s);
    extra.push_back(std::move(r));
  }
  for (const auto& r : extra) {
    const double cm = eos::c_damp(r.ps.m);
    if (r.tr.series.front().Lbar <= r.ps.m * cm * cm) eligible.push_back(&r);
  }
  double worst = -1e300;
  for (const CorpusRun* r : eligible) {
    for (const auto& s : r->tr.series) {
      worst = std::max({worst, s.max_strength - r->ps.m, s.F - r->ps.m});
    }
    for (const auto& e : r->tr.events) {
      for (const auto& w : e.outgoing) {
        if (w.family != Family::Composite) worst = std::max(worst, std::abs(w.strength) - r->ps.m);
      }
    }
  }
  c.add("runs meeting Lbar(0+) <= m c(m)^2", eligible.size() >= 8, std::to_string(eligible.size()) + " runs");
  c.add("every strength and F(t) <= m + 1e-10", worst <= 1e-10, "worst excess " + num(worst));
  return c;
}

// 8 ------------------------------------------------------------------------
Criterion riemann_sanity() {
  Criterion c{8, "Riemann data sanity", {}};
  testing::Gen g(88);
  int events = 0, shock_mismatch = 0, fan_mismatch = 0, oversize = 0, cases = 0;
  double worst_sum = 0.0;
  for (int k = 0; k < 300; ++k) {
    tracker::SimulationConfig s;
    s.phases = PhasePair::make(0.0, 1.0, 1.0, g.uniform(1.0, 2.5));
    const State Ul{g.log_uniform(0.3, 3.0), g.uniform(-0.5, 0.5), 0.0};
    const State Ur{g.log_uniform(0.3, 3.0), g.uniform(-0.5, 0.5), 1.0};
    Profile p;
    p.breaks = {0.0};
    p.v = {Ul.v, Ur.v};
    p.u = {Ul.u, Ur.u};
    s.initial_data = InitialData::piecewise(p);
    s.params = params::choose_parameters(s.phases, 0.0);
    s.nu = 4 + k % 13;
    s.t_max = 5.0;
    const auto tr = tracker::run(s);
    ++cases;
    events += static_cast<int>(tr.event_count);
    const auto fan = riemann::solve_lax(Ul, Ur, s.phases.a_l, s.phases.a_r);
    double sum1 = 0.0, sum3 = 0.0;
    std::size_t n1 = 0, n3 = 0;
    for (const Front& f : tr.final_fronts) {
      if (f.is_composite()) continue;
      const double target = f.family == Family::One ? fan.eps1 : fan.eps3;
      (f.family == Family::One ? sum1 : sum3) += f.strength;
      (f.family == Family::One ? n1 : n3) += 1;
      if (target < 0.0 && f.strength != target) ++shock_mismatch;
      if (target > 0.0 && !(f.strength < tr.eta)) ++oversize;
    }
    const double tol1 = 4.0 * n1 * std::numeric_limits<double>::epsilon() * std::abs(fan.eps1);
    const double tol3 = 4.0 * n3 * std::numeric_limits<double>::epsilon() * std::abs(fan.eps3);
    if (std::abs(sum1 - fan.eps1) > tol1 || std::abs(sum3 - fan.eps3) > tol3) ++fan_mismatch;
    worst_sum = std::max({worst_sum, std::abs(sum1 - fan.eps1), std::abs(sum3 - fan.eps3)});
  }
  c.add("no interactions after t = 0 on pure Riemann data", events == 0,
        std::to_string(cases) + " cases, " + std::to_string(events) + " events");
  c.add("shock strengths equal solve_lax exactly", shock_mismatch == 0,
        std::to_string(shock_mismatch) + " mismatches");
  c.add("rarefaction fans sum to eps (to rounding of the sum)", fan_mismatch == 0,
        "max |sum - eps| " + num(worst_sum));
  c.add("each fan front < eta", oversize == 0, std::to_string(oversize) + " oversize fronts");
  return c;
}

// 9 ------------------------------------------------------------------------
Criterion tv_bound(const std::vector<CorpusRun>& runs) {
  Criterion c{9, "bounded total variation", {}};
  bool finite = true, early = true, flat = true, no_budget = true;
  double sup_all = 0.0;
  std::size_t latest = 0;
  for (const auto& r : runs) {
    if (r.budget_hit) {
      no_budget = false;
      continue;
    }
    const auto& s = r.tr.series;
    double sup = 0.0;
    std::size_t arg = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (!std::isfinite(s[k].tv_vu)) finite = false;
      if (s[k].tv_vu > sup) {
        sup = s[k].tv_vu;
        arg = k;
      }
    }
    sup_all = std::max(sup_all, sup);
    latest = std::max(latest, arg);
    if (arg > 100000) early = false;
    const std::size_t cut = s.size() - s.size() / 10;
    if (s.size() >= 10) {
      double head = 0.0, tail = 0.0;
      for (std::size_t k = 0; k < cut; ++k) head = std::max(head, s[k].tv_vu);
      for (std::size_t k = cut; k < s.size(); ++k) tail = std::max(tail, s[k].tv_vu);
      if (tail > head + 1e-10) flat = false;
    }
  }
  c.add("sup_t TV(v)+TV(u) finite on every corpus run", finite, "largest sup " + num(sup_all));
  c.add("sup attained within the first 1e5 events", early,
        "latest attaining event " + std::to_string(latest));
  c.add("no growth in the final decile of events", flat,
        std::string(flat ? "final decile below earlier maximum" : "final decile exceeds earlier maximum") +
            "; runs to t = " + num(kCorpusTime));
  c.add("event budget never hit", no_budget, no_budget ? "all runs completed" : "budget exceeded");
  return c;
}

}  // namespace

int main() {
  std::vector<CorpusRun> runs;
  const double corpus_s = timed([&] { runs = corpus(); });
  std::printf("corpus: %zu runs in %.2f s\n\n", runs.size(), corpus_s);

  std::vector<Criterion> all;
  all.push_back(constants());
  all.push_back(solver(runs));
  all.push_back(reflection());
  all.push_back(monotone(runs));
  all.push_back(decay(runs));
  all.push_back(global_bound(runs));
  all.push_back(schochet());
  all.push_back(riemann_sanity());
  all.push_back(tv_bound(runs));
  std::sort(all.begin(), all.end(), [](const Criterion& a, const Criterion& b) { return a.id < b.id; });

  int unexpected = 0;
  for (const auto& c : all) {
    std::printf("criterion %d: %s  %s\n", c.id, c.passed() ? "PASS" : "FAIL", c.title.c_str());
    for (const auto& s : c.checks) {
      const char* tag = s.ok ? "ok  " : (s.known_deviation ? "FAIL (known deviation)" : "FAIL");
      std::printf("    %s %s: %s\n", tag, s.what.c_str(), s.detail.c_str());
      if (!s.ok && !s.known_deviation) ++unexpected;
    }
  }
  std::printf("\n%d unexpected failure(s)\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
