#include "ptrack/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ptrack/error.hpp"
#include "ptrack/export.hpp"
#include "ptrack/oracle.hpp"
#include "ptrack/params.hpp"
#include "ptrack/tracker.hpp"

namespace ptrack::app {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// JSON has no infinities; they are written as null.
json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

io::Provenance provenance(const scenario::Config& cfg) {
  return {PTRACK_VERSION, scenario::config_hash(cfg), cfg.seed};
}

json config_doc(const scenario::Config& cfg) {
  return {{"origin", cfg.origin},
          {"hash", scenario::config_hash(cfg)},
          {"data", scenario::to_string(cfg.kind)},
          {"seed", cfg.seed},
          {"a_l", cfg.phases.a_l},
          {"a_r", cfg.phases.a_r},
          {"delta2", cfg.phases.delta2}};
}

json params_doc(const params::ParameterSet& ps) {
  return {{"delta2", ps.delta2}, {"m", ps.m},       {"xi", ps.xi}, {"K", ps.K},
          {"K_np", ps.K_np},     {"C_o", ps.C_o},   {"mu", ps.mu}};
}

/// Profile used to judge admissibility: the datum itself, or a fine sampling.
Profile datum_profile(const InitialData& d) {
  return d.is_piecewise() ? d.exact() : d.reference();
}

json admissibility_doc(const params::AdmissibilityReport& r) {
  return {{"tv_log_p", r.tv_log_p},
          {"tv_u", r.tv_u},
          {"a_min", r.a_min},
          {"lhs", r.lhs},
          {"abs_delta2", r.abs_delta2},
          {"threshold", num(r.threshold)},
          {"margin", num(r.margin)},
          {"admissible", r.admissible},
          {"small_data_bound", r.small_data_bound},
          {"small_data_ok", r.small_data_ok}};
}

std::string write_json(const std::string& dir, const std::string& name, const json& doc) {
  fs::create_directories(dir);
  const std::string path = (fs::path(dir) / name).string();
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << doc.dump(2) << '\n';
  return path;
}

template <class Writer>
std::string write_table(const std::string& dir, const std::string& name, Writer&& w) {
  fs::create_directories(dir);
  const std::string path = (fs::path(dir) / name).string();
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  w(f);
  return path;
}

bool wants(const scenario::Config& cfg, const std::string& table) {
  return std::find(cfg.tables.begin(), cfg.tables.end(), table) != cfg.tables.end();
}

struct Prepared {
  params::AdmissibilityReport adm;
  tracker::SimulationConfig sim;
};

/// Admissibility and scheme constants. Under `force`, inadmissible data gets
/// constants chosen for a budget just below the threshold.
Prepared prepare(const scenario::Config& cfg, bool force) {
  Prepared p;
  InitialData data = scenario::make_initial_data(cfg);
  p.adm = params::check_initial_data(datum_profile(data), cfg.phases);
  params::ParameterSet ps;
  if (p.adm.parameters) {
    ps = *p.adm.parameters;
  } else if (force) {
    ps = params::choose_parameters(cfg.phases, std::min(p.adm.lhs, 0.99 * p.adm.threshold));
  }
  p.sim.phases = cfg.phases;
  p.sim.initial_data = std::move(data);
  p.sim.params = ps;
  p.sim.nu = cfg.nu;
  p.sim.eta = cfg.eta;
  p.sim.rho = cfg.rho;
  p.sim.t_max = cfg.t_max;
  p.sim.speed_jitter = cfg.jitter;
  p.sim.event_budget = cfg.budget;
  p.sim.enforce = p.adm.admissible && !force;
  p.sim.v_min = cfg.v_min;
  p.sim.output_times = cfg.output_times;
  return p;
}

json monitors_doc(const tracker::Monitors& m) {
  json out = json::array();
  for (const tracker::Check* c : m.all()) {
    out.push_back({{"name", c->name},
                   {"evaluated", c->evaluated},
                   {"violations", c->violations},
                   {"worst_excess", num(c->worst_excess)},
                   {"first_violation", c->first_violation}});
  }
  return out;
}

std::string refuse_text(const params::AdmissibilityReport& adm) {
  std::ostringstream os;
  os << "inadmissible data: TV(log p) + TV(u)/min a = " << io::fmt(adm.lhs)
     << " is not below K(|delta2|) = " << io::fmt(adm.threshold)
     << " (margin " << io::fmt(adm.margin) << "); use --force to run anyway\n";
  return os.str();
}

}  // namespace

std::string resolve_out_dir(const std::string& flag, const scenario::Config* cfg, bool fallback) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv(kOutDirEnv); env != nullptr && *env != '\0') return env;
  if (cfg != nullptr && !cfg->out_dir.empty()) return cfg->out_dir;
  return fallback ? "ptrack_out" : "";
}

Report check(const scenario::Config& cfg, const std::string& out_dir) {
  const InitialData data = scenario::make_initial_data(cfg);
  const auto adm = params::check_initial_data(datum_profile(data), cfg.phases);
  Report r;
  r.outcome = adm.admissible ? 0 : 1;
  r.doc = {{"command", "check"},
           {"version", PTRACK_VERSION},
           {"config", config_doc(cfg)},
           {"admissibility", admissibility_doc(adm)}};
  if (adm.parameters) r.doc["parameters"] = params_doc(*adm.parameters);

  std::ostringstream os;
  os << "TV(log p)        " << io::fmt(adm.tv_log_p) << "\n"
     << "TV(u)            " << io::fmt(adm.tv_u) << "\n"
     << "budget used      " << io::fmt(adm.lhs) << "\n"
     << "K(|delta2|)      " << io::fmt(adm.threshold) << "  (|delta2| = " << io::fmt(adm.abs_delta2)
     << ")\n"
     << "margin           " << io::fmt(adm.margin) << "\n"
     << (adm.admissible ? "admissible\n" : "NOT admissible\n");
  if (adm.parameters) {
    const auto& ps = *adm.parameters;
    os << "parameters       m=" << io::fmt(ps.m) << " xi=" << io::fmt(ps.xi) << " K=" << io::fmt(ps.K)
       << " K_np=" << io::fmt(ps.K_np) << " mu=" << io::fmt(ps.mu) << "\n";
  }
  r.artifacts.push_back(write_json(out_dir, "check.json", r.doc));
  r.text = os.str();
  return r;
}

Report run(const scenario::Config& cfg, const std::string& out_dir, bool force) {
  Prepared p = prepare(cfg, force);
  Report r;
  r.doc = {{"command", "run"},
           {"version", PTRACK_VERSION},
           {"config", config_doc(cfg)},
           {"admissibility", admissibility_doc(p.adm)},
           {"forced", force}};
  if (!p.adm.admissible && !force) {
    r.outcome = 1;
    r.text = refuse_text(p.adm);
    r.doc["status"] = "refused";
    return r;
  }
  r.doc["parameters"] = params_doc(p.sim.params);

  tracker::Trajectory tr;
  try {
    tr = tracker::run_with_rho_policy(p.sim);
  } catch (const BudgetExceeded& e) {
    // Forced runs may legitimately blow up; report the abort without failing.
    r.outcome = force ? 0 : 1;
    r.doc["status"] = "aborted";
    r.doc["error"] = e.what();
    r.text = std::string("run aborted: ") + e.what() + "\n";
    r.artifacts.push_back(write_json(out_dir, "summary.json", r.doc));
    return r;
  } catch (const MonitorViolation& e) {
    r.outcome = 1;
    r.doc["status"] = "violation";
    r.doc["error"] = e.what();
    r.text = std::string("monitor violation: ") + e.what() + "\n";
    r.artifacts.push_back(write_json(out_dir, "summary.json", r.doc));
    return r;
  }

  const io::Provenance prov = provenance(cfg);
  if (wants(cfg, "events")) {
    r.artifacts.push_back(write_table(out_dir, "events.csv", [&](std::ostream& o) { io::write_events(o, tr, prov); }));
  }
  if (wants(cfg, "fronts")) {
    r.artifacts.push_back(write_table(out_dir, "fronts.csv", [&](std::ostream& o) { io::write_fronts(o, tr, prov); }));
  }
  if (wants(cfg, "functionals")) {
    r.artifacts.push_back(
        write_table(out_dir, "functionals.csv", [&](std::ostream& o) { io::write_functionals(o, tr, prov); }));
  }
  if (wants(cfg, "profiles")) {
    std::vector<std::pair<double, Profile>> all{{0.0, tr.initial_profile}};
    all.insert(all.end(), tr.profiles.begin(), tr.profiles.end());
    r.artifacts.push_back(
        write_table(out_dir, "profiles.csv", [&](std::ostream& o) { io::write_profiles(o, all, prov); }));
  }

  std::size_t warnings = 0;
  for (const tracker::Check* c : tr.monitors.all()) warnings += c->violations > 0 ? 1 : 0;
  const auto& first = tr.series.front();
  const auto& last = tr.series.back();
  r.doc["status"] = "completed";
  r.doc["summary"] = {{"event_count", tr.event_count},
                      {"t_end", tr.t_end},
                      {"F_initial", first.F},
                      {"F_final", last.F},
                      {"max_composite_abs", tr.max_composite_abs},
                      {"sup_tv", tr.sup_tv},
                      {"sup_tv_event", tr.sup_tv_event},
                      {"max_fronts", tr.max_fronts},
                      {"initial_fronts", tr.initial_fronts.size()},
                      {"final_fronts", tr.final_fronts.size()},
                      {"eta", tr.eta},
                      {"rho", num(tr.rho)},
                      {"rho_attempts", tr.rho_attempts},
                      {"nu", cfg.nu},
                      {"events_I", tr.ledger.count(functionals::EventSet::I)},
                      {"events_J", tr.ledger.count(functionals::EventSet::J)},
                      {"events_none", tr.ledger.count(functionals::EventSet::None)},
                      {"nonphysical_total", tr.ledger.L0_total()}};
  r.doc["monitors"] = monitors_doc(tr.monitors);
  r.doc["global_hypothesis"] = tr.monitors.global_hypothesis;
  r.doc["max_solver_residual"] = tr.monitors.max_solver_residual;
  json paths = r.artifacts;
  if (wants(cfg, "summary")) {
    paths.push_back((fs::path(out_dir) / "summary.json").string());
    r.doc["artifacts"] = paths;
    r.artifacts.push_back(write_json(out_dir, "summary.json", r.doc));
  }

  std::ostringstream os;
  os << "events           " << tr.event_count << "\n"
     << "t_end            " << io::fmt(tr.t_end) << "\n"
     << "F(0+)            " << io::fmt(first.F) << "\n"
     << "F(final)         " << io::fmt(last.F) << "\n"
     << "max |gamma20|    " << io::fmt(tr.max_composite_abs) << "\n"
     << "sup TV(v)+TV(u)  " << io::fmt(tr.sup_tv) << "\n";
  for (const tracker::Check* c : tr.monitors.all()) {
    if (c->violations > 0) {
      os << "warning: " << c->name << ": " << c->violations << " of " << c->evaluated
         << " events, first: " << c->first_violation << "\n";
    }
  }
  if (warnings == 0) os << "all monitors passed\n";
  for (const auto& a : r.artifacts) os << "wrote " << a << "\n";
  r.text = os.str();
  return r;
}

Report converge(const scenario::Config& cfg, const std::vector<int>& nus_in,
                const std::string& out_dir, bool force) {
  std::vector<int> nus = nus_in.empty() ? std::vector<int>{cfg.nu} : nus_in;
  for (std::size_t k = 0; k < nus.size(); ++k) {
    if (nus[k] < 1) throw UsageError("nu values must be positive integers");
    if (k > 0 && nus[k] <= nus[k - 1]) throw UsageError("nu list must be strictly increasing");
  }
  scenario::Config base = cfg;
  if (base.output_times.empty()) base.output_times = {0.5 * cfg.t_max, cfg.t_max};
  std::sort(base.output_times.begin(), base.output_times.end());

  Report r;
  r.doc = {{"command", "converge"}, {"version", PTRACK_VERSION}, {"config", config_doc(cfg)}};
  Prepared probe = prepare(base, force);
  r.doc["admissibility"] = admissibility_doc(probe.adm);
  if (!probe.adm.admissible && !force) {
    r.outcome = 1;
    r.text = refuse_text(probe.adm);
    r.doc["status"] = "refused";
    return r;
  }

  std::ostringstream os;
  os << "nu      eta             rho             max|gamma20|     1/nu   ok  events\n";
  json rungs = json::array();
  std::vector<std::optional<tracker::Trajectory>> runs;
  bool all_ok = true;
  const io::Provenance prov = provenance(cfg);
  for (int nu : nus) {
    scenario::Config c = base;
    c.nu = nu;
    json rung{{"nu", nu}, {"bound", 1.0 / nu}};
    try {
      Prepared p = prepare(c, force);
      tracker::Trajectory tr = tracker::run_with_rho_policy(p.sim);
      const bool ok = tr.max_composite_abs <= 1.0 / nu;
      rung.update({{"eta", tr.eta},
                   {"rho", num(tr.rho)},
                   {"rho_attempts", tr.rho_attempts},
                   {"max_composite_abs", tr.max_composite_abs},
                   {"composite_ok", ok},
                   {"event_count", tr.event_count},
                   {"F_nonincreasing", tr.monitors.F_nonincreasing.passed()},
                   {"status", "completed"}});
      all_ok = all_ok && ok;
      char line[160];
      std::snprintf(line, sizeof line, "%-7d %-15.6e %-15.6e %-16.6e %-6.4g %-3s %llu\n", nu, tr.eta,
                    tr.rho, tr.max_composite_abs, 1.0 / nu, ok ? "yes" : "NO",
                    static_cast<unsigned long long>(tr.event_count));
      os << line;
      r.artifacts.push_back(write_table(out_dir, "profiles_nu" + std::to_string(nu) + ".csv",
                                        [&](std::ostream& o) { io::write_profiles(o, tr.profiles, prov); }));
      tr.events.clear();
      tr.timeline.clear();
      tr.series.clear();
      runs.emplace_back(std::move(tr));
    } catch (const std::exception& e) {
      // A failed rung does not stop the ladder.
      all_ok = false;
      rung.update({{"status", "failed"}, {"error", e.what()}});
      os << nu << "  failed: " << e.what() << "\n";
      runs.emplace_back(std::nullopt);
    }
    rungs.push_back(rung);
  }
  r.doc["rungs"] = rungs;

  json dists = json::array();
  for (double t : base.output_times) {
    if (t > cfg.t_max) continue;
    json series = json::array();
    double prev = HUGE_VAL;
    bool decreasing = true;
    for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
      if (!runs[k] || !runs[k + 1]) continue;
      auto find = [t](const tracker::Trajectory& tr) -> const Profile* {
        for (const auto& [tt, pr] : tr.profiles) {
          if (tt == t) return &pr;
        }
        return nullptr;
      };
      const Profile* a = find(*runs[k]);
      const Profile* b = find(*runs[k + 1]);
      if (a == nullptr || b == nullptr) continue;
      const double d = l1_distance(*a, *b);
      decreasing = decreasing && d <= prev;
      prev = d;
      series.push_back({{"nu_coarse", nus[k]}, {"nu_fine", nus[k + 1]}, {"l1", d}});
      os << "L1(t=" << io::fmt(t) << ", nu " << nus[k] << " vs " << nus[k + 1] << ") = " << io::fmt(d)
         << "\n";
    }
    dists.push_back({{"t", t}, {"pairs", series}, {"decreasing", decreasing}});
  }
  r.doc["l1"] = dists;
  if (nus.size() == 1) os << "single rung: no distances to report\n";
  r.outcome = all_ok ? 0 : 1;
  r.doc["status"] = all_ok ? "pass" : "fail";
  r.artifacts.push_back(write_json(out_dir, "converge.json", r.doc));
  for (const auto& a : r.artifacts) os << "wrote " << a << "\n";
  r.text = os.str();
  return r;
}

Report verify(const std::string& suite, int grid, std::uint64_t seed, const std::string& out_dir) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = oracle::suite_names();
  } else {
    const auto& known = oracle::suite_names();
    if (std::find(known.begin(), known.end(), suite) == known.end()) {
      std::string list;
      for (const auto& n : known) list += " " + n;
      throw UsageError("unknown suite '" + suite + "'; expected all or one of:" + list);
    }
    names = {suite};
  }
  if (grid < 0) throw UsageError("grid must be non-negative");

  Report r;
  r.doc = {{"command", "verify"}, {"version", PTRACK_VERSION}, {"seed", seed}};
  json suites = json::array();
  std::ostringstream os;
  bool ok = true;
  for (const auto& name : names) {
    json checks = json::array();
    for (const auto& s : oracle::run_suite(name, grid, seed)) {
      ok = ok && s.passed;
      checks.push_back({{"name", s.name},
                        {"grid", s.grid},
                        {"cases", s.cases},
                        {"max_deviation", num(s.max_deviation)},
                        {"tolerance", s.tolerance},
                        {"worst_inputs", s.worst_inputs},
                        {"passed", s.passed}});
      os << (s.passed ? "PASS " : "FAIL ") << name << " / " << s.name << "  cases=" << s.cases
         << "  max=" << io::fmt(s.max_deviation) << "  tol=" << io::fmt(s.tolerance);
      if (!s.passed) os << "  worst at " << s.worst_inputs;
      os << "\n";
    }
    suites.push_back({{"suite", name}, {"checks", checks}});
  }
  r.doc["suites"] = suites;
  r.doc["passed"] = ok;
  r.outcome = ok ? 0 : 1;
  if (!out_dir.empty()) r.artifacts.push_back(write_json(out_dir, "verify.json", r.doc));
  r.text = os.str();
  return r;
}

}  // namespace ptrack::app
